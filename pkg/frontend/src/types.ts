export interface ConjunctionMark {
  form: string;
  index: number;
  char_span: [number, number];
}

export interface BatchItem {
  instance_id: string;
  text: string;
  conjunction: ConjunctionMark;
}

export interface Batch {
  batch_id: number;
  annotator: string;
  status: string;
  items: BatchItem[];
}

export interface Violation {
  code: string;
  detail: string;
  location: number | null;
}

export interface ValidationReport {
  verdict: "pass" | "fail";
  violations: Violation[];
}

export interface ItemDraft {
  sentences: string[];
  rewritable: boolean;
  reason: string;
  uncertain: boolean;
  longList: boolean;
  feedback: string;
}

export function emptyDraft(): ItemDraft {
  return {
    sentences: ["", ""],
    rewritable: true,
    reason: "",
    uncertain: false,
    longList: false,
    feedback: "",
  };
}
