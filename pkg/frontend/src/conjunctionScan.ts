// Instant client-side check: does a draft sentence still contain the
// highlighted conjunction? The authoritative check is server-side; this
// one just gives immediate inline feedback while typing.

export function tokens(text: string): string[] {
  return text.toLowerCase().match(/[a-z0-9'@%.-]+/g) ?? [];
}

export function containsConjunction(sentence: string, conjunction: string): boolean {
  return tokens(sentence).includes(conjunction.toLowerCase());
}

// 0-based indices of offending sentences.
export function scanDraft(sentences: string[], conjunction: string): number[] {
  const hits: number[] = [];
  sentences.forEach((s, i) => {
    if (containsConjunction(s, conjunction)) hits.push(i);
  });
  return hits;
}
