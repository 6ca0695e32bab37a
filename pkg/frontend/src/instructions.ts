// Expandable instructions: five rewritable and five non-rewritable
// examples, shown above the batch.

export interface Example {
  sentence: string;
  rewritable: boolean;
  note: string;
}

export const EXAMPLES: Example[] = [
  {
    sentence: "Josh likes wine and Jane water.",
    rewritable: true,
    note: 'Split into "Josh likes wine." and "Jane likes water."',
  },
  {
    sentence: "Tom wants tea, Ann coffee and Sam milk.",
    rewritable: true,
    note: "Each person gets their own sentence with the verb restored.",
  },
  {
    sentence: "The team received three points for a win and one point for a draw.",
    rewritable: true,
    note: "The verb carries over to the second half.",
  },
  {
    sentence: "32% had brown and 21% black.",
    rewritable: true,
    note: '"had" is understood in the second half.',
  },
  {
    sentence: "Mark needs rest but Lucy coffee.",
    rewritable: true,
    note: '"but" sentences split the same way as "and" sentences.',
  },
  {
    sentence: "Amla made 133 and Roussow 132 with the pair combining to put on 247.",
    rewritable: false,
    note: "The trailing part talks about both people together.",
  },
  {
    sentence: "Josh and Jane met.",
    rewritable: false,
    note: '"met" needs both participants; the halves are not separate statements.',
  },
  {
    sentence: "The goal is worthy but distant for everyone together.",
    rewritable: false,
    note: "The final phrase applies to the whole combination.",
  },
  {
    sentence: "The flag is red and white.",
    rewritable: false,
    note: "One flag with both colors, not two statements.",
  },
  {
    sentence: "Sue and Al are a couple.",
    rewritable: false,
    note: "The predicate describes the pair jointly.",
  },
];

export function instructionsHtml(): string {
  const rows = EXAMPLES.map(
    (e) =>
      `<li class="${e.rewritable ? "rewritable" : "non-rewritable"}">` +
      `<em>${e.sentence}</em> &mdash; ${e.note}</li>`,
  ).join("");
  return `
    <details class="instructions">
      <summary>How to re-write (examples)</summary>
      <p>Re-write the sentence as a set of simple sentences, one per joined
      part, without the highlighted word and without adding new content
      words. If the sentence cannot be split without changing its meaning,
      mark it and say why. To check yourself, join your sentences with the
      highlighted word and compare the meaning with the original.</p>
      <ul>${rows}</ul>
    </details>`;
}
