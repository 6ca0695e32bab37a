import { scanDraft } from "./conjunctionScan.js";
import type { BatchItem, ItemDraft, ValidationReport } from "./types.js";
import type { Api } from "./api.js";

// Pre-submit gate: nothing reaches POST /submissions unless the local
// checks and a fresh server-side /validate both pass, so the service
// never has to 422 a UI submission.

export interface ItemState {
  ready: boolean;
  needsReason: boolean;
  localViolations: number[]; // sentence indices flagged by the instant scan
  problems: string[];
}

function normalize(s: string): string {
  return s
    .toLowerCase()
    .replace(/[^\p{L}\p{N}\s]/gu, " ")
    .replace(/\s+/g, " ")
    .trim();
}

export function itemState(item: BatchItem, draft: ItemDraft): ItemState {
  const problems: string[] = [];
  let needsReason = false;

  if (!draft.rewritable) {
    if (draft.reason.trim() === "") {
      needsReason = true;
      problems.push("explain why this sentence cannot be re-written");
    }
    return { ready: !needsReason, needsReason, localViolations: [], problems };
  }

  const filled = draft.sentences.filter((s) => s.trim() !== "");
  const localViolations = scanDraft(filled, item.conjunction.form);
  if (filled.length < 2) {
    problems.push("enter at least two re-written sentences");
  }
  if (localViolations.length > 0) {
    problems.push("a rewrite still contains the highlighted conjunction");
  }
  // submitting the sentence back unchanged also needs an explanation
  if (filled.length >= 1 && filled.every((s) => normalize(s) === normalize(item.text))) {
    needsReason = true;
    problems.push("the sentence is unchanged; explain why it cannot be re-written");
  }
  return { ready: problems.length === 0, needsReason, localViolations, problems };
}

export function batchReady(items: BatchItem[], draftOf: (id: string) => ItemDraft): boolean {
  return items.every((item) => itemState(item, draftOf(item.instance_id)).ready);
}

export interface SubmitResult {
  submitted: boolean;
  reports: Map<string, ValidationReport>;
}

// Validates every item first and aborts without submitting anything if
// any report fails; only a fully clean batch is sent.
export async function submitBatch(
  api: Api,
  annotator: string,
  items: BatchItem[],
  draftOf: (id: string) => ItemDraft,
): Promise<SubmitResult> {
  const reports = new Map<string, ValidationReport>();
  if (!batchReady(items, draftOf)) return { submitted: false, reports };
  for (const item of items) {
    const report = await api.validate(item.instance_id, draftOf(item.instance_id));
    reports.set(item.instance_id, report);
  }
  for (const report of reports.values()) {
    if (report.verdict !== "pass") return { submitted: false, reports };
  }
  for (const item of items) {
    await api.submit(item.instance_id, annotator, draftOf(item.instance_id));
  }
  return { submitted: true, reports };
}
