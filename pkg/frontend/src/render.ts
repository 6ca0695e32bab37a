import { joinPreview } from "./joinPreview.js";
import type { BatchItem, ItemDraft, Violation } from "./types.js";

// HTML string builders. main.ts mounts these with innerHTML; keeping
// them pure makes the layout testable without a browser.

export function escapeHtml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function highlightConjunction(item: BatchItem): string {
  const [start, end] = item.conjunction.char_span;
  const text = item.text;
  if (start < 0 || end > text.length || text.slice(start, end) !== item.conjunction.form) {
    return escapeHtml(text);
  }
  return (
    escapeHtml(text.slice(0, start)) +
    '<mark class="conj">' +
    escapeHtml(text.slice(start, end)) +
    "</mark>" +
    escapeHtml(text.slice(end))
  );
}

export function sentenceRow(item: BatchItem, index: number, value: string, flagged: boolean): string {
  const marker = flagged
    ? '<span class="inline-error">still contains the highlighted conjunction</span>'
    : "";
  return `
    <div class="rewrite-row${flagged ? " has-error" : ""}">
      <input type="text" data-item="${escapeHtml(item.instance_id)}" data-index="${index}"
             value="${escapeHtml(value)}" placeholder="Re-written sentence ${index + 1}">
      <button type="button" class="remove" data-item="${escapeHtml(item.instance_id)}" data-index="${index}">x</button>
      ${marker}
    </div>`;
}

export function violationList(violations: Violation[]): string {
  if (violations.length === 0) return '<div class="ok">&#10003; looks good</div>';
  const rows = violations
    .map((v) => `<li data-code="${escapeHtml(v.code)}">${escapeHtml(v.detail)}</li>`)
    .join("");
  return `<ul class="violations">${rows}</ul>`;
}

export function itemPanel(item: BatchItem, draft: ItemDraft, flaggedIndices: number[]): string {
  const rows = draft.sentences
    .map((s, i) => sentenceRow(item, i, s, flaggedIndices.includes(i)))
    .join("");
  const preview = draft.rewritable
    ? joinPreview(
        draft.sentences.filter((s) => s.trim() !== ""),
        item.conjunction.form,
      )
    : null;
  const previewHtml = preview
    ? `<div class="preview">Joined: ${escapeHtml(preview)}</div>`
    : '<div class="preview disabled">Joined preview needs two rewrites</div>';
  const reasonBox = draft.rewritable
    ? ""
    : `<label>Why can't this be re-written?
         <textarea class="reason" data-item="${escapeHtml(item.instance_id)}">${escapeHtml(draft.reason)}</textarea>
       </label>`;
  return `
    <section class="item" data-item="${escapeHtml(item.instance_id)}">
      <p class="sentence">${highlightConjunction(item)}</p>
      <div class="rewrites">${rows}</div>
      <button type="button" class="add" data-item="${escapeHtml(item.instance_id)}">Add sentence (ctrl+enter)</button>
      <label><input type="checkbox" class="not-rewritable" data-item="${escapeHtml(item.instance_id)}"
                    ${draft.rewritable ? "" : "checked"}> cannot be re-written</label>
      ${reasonBox}
      <label><input type="checkbox" class="uncertain" data-item="${escapeHtml(item.instance_id)}"
                    ${draft.uncertain ? "checked" : ""}> not sure</label>
      <label><input type="checkbox" class="long-list" data-item="${escapeHtml(item.instance_id)}"
                    ${draft.longList ? "checked" : ""}> list is too long to finish</label>
      ${previewHtml}
      <div class="report" data-item="${escapeHtml(item.instance_id)}"></div>
    </section>`;
}

export function batchHtml(
  items: BatchItem[],
  draftOf: (id: string) => ItemDraft,
  flaggedOf: (id: string) => number[] = () => [],
): string {
  return items
    .map((item) => itemPanel(item, draftOf(item.instance_id), flaggedOf(item.instance_id)))
    .join("\n");
}

export function countPanels(html: string): number {
  return (html.match(/<section class="item"/g) ?? []).length;
}
