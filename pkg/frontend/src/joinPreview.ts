// Self-review helper: stitch the rewrites back together with the
// highlighted conjunction and compare against the original sentence.

const TRAILING_PUNCT = /[.!?;:]+\s*$/;

export function stripSentencePunct(s: string): string {
  return s.trim().replace(TRAILING_PUNCT, "");
}

// Two rewrites join bare ("A and B"); three or more put commas between
// all but the last pair ("A, B and C"). Needs at least two rewrites.
export function joinPreview(rewrites: string[], conjunction: string): string | null {
  const parts = rewrites.map(stripSentencePunct).filter((s) => s.length > 0);
  if (parts.length < 2) return null;
  const last = parts[parts.length - 1];
  const head = parts.slice(0, -1);
  return head.join(", ") + " " + conjunction + " " + last;
}
