import { httpApi } from "./api.js";
import { scanDraft } from "./conjunctionScan.js";
import { GenerationGuard, debouncedByKey } from "./debounce.js";
import { DraftStore } from "./drafts.js";
import { batchReady, itemState, submitBatch } from "./gate.js";
import { instructionsHtml } from "./instructions.js";
import { batchHtml, violationList } from "./render.js";
import type { Batch, BatchItem } from "./types.js";

const BASE_URL = (window as any).CONJR_SERVICE_URL ?? "http://127.0.0.1:8400";
const api = httpApi(BASE_URL);
const guard = new GenerationGuard();

let batch: Batch | null = null;
let drafts: DraftStore | null = null;

function $(sel: string): HTMLElement {
  const el = document.querySelector(sel);
  if (!el) throw new Error("missing element " + sel);
  return el as HTMLElement;
}

function itemOf(id: string): BatchItem {
  const item = batch!.items.find((i) => i.instance_id === id);
  if (!item) throw new Error("unknown item " + id);
  return item;
}

function banner(message: string | null) {
  const el = $("#banner");
  el.textContent = message ?? "";
  el.style.display = message ? "block" : "none";
}

const queueValidation = debouncedByKey<string>(async (id) => {
  const gen = guard.next(id);
  try {
    const report = await api.validate(id, drafts!.get(id));
    if (!guard.isCurrent(id, gen)) return;
    const slot = document.querySelector(`.report[data-item="${id}"]`);
    if (slot) slot.innerHTML = violationList(report.violations);
    banner(null);
  } catch {
    banner("Annotation service unreachable; submission is blocked.");
  }
}, 400);

function redraw() {
  if (!batch || !drafts) return;
  const d = drafts;
  $("#batch").innerHTML = batchHtml(
    batch.items,
    (id) => d.get(id),
    (id) => {
      const draft = d.get(id);
      return draft.rewritable ? scanDraft(draft.sentences, itemOf(id).conjunction.form) : [];
    },
  );
  const submit = $("#submit") as HTMLButtonElement;
  submit.disabled = !batchReady(batch.items, (id) => d.get(id));
  for (const item of batch.items) {
    const state = itemState(item, d.get(item.instance_id));
    const slot = document.querySelector(`.report[data-item="${item.instance_id}"]`);
    if (slot && state.problems.length > 0) {
      slot.innerHTML = `<ul class="problems">${state.problems
        .map((p) => `<li>${p}</li>`)
        .join("")}</ul>`;
    }
  }
}

function wireEvents() {
  const root = $("#batch");

  root.addEventListener("input", (ev) => {
    const el = ev.target as HTMLElement;
    const id = el.dataset.item;
    if (!id || !drafts) return;
    if (el instanceof HTMLInputElement && el.type === "text") {
      drafts.setSentence(id, Number(el.dataset.index), el.value);
      queueValidation(id, "");
      redrawControlsOnly();
    } else if (el instanceof HTMLTextAreaElement) {
      drafts.update(id, { reason: el.value });
      redrawControlsOnly();
    }
  });

  root.addEventListener("change", (ev) => {
    const el = ev.target as HTMLInputElement;
    const id = el.dataset.item;
    if (!id || !drafts || el.type !== "checkbox") return;
    if (el.classList.contains("not-rewritable")) drafts.update(id, { rewritable: !el.checked });
    if (el.classList.contains("uncertain")) drafts.update(id, { uncertain: el.checked });
    if (el.classList.contains("long-list")) drafts.update(id, { longList: el.checked });
    redraw();
  });

  root.addEventListener("click", (ev) => {
    const el = ev.target as HTMLElement;
    const id = el.dataset.item;
    if (!id || !drafts) return;
    if (el.classList.contains("add")) {
      drafts.addSentence(id);
      redraw();
    } else if (el.classList.contains("remove")) {
      drafts.removeSentence(id, Number(el.dataset.index));
      redraw();
    }
  });

  // keyboard-first: ctrl+enter adds a rewrite box to the focused item
  root.addEventListener("keydown", (ev) => {
    if (!(ev.ctrlKey && ev.key === "Enter") || !drafts) return;
    const el = ev.target as HTMLElement;
    if (el.dataset.item) {
      drafts.addSentence(el.dataset.item);
      redraw();
    }
  });

  $("#submit").addEventListener("click", async () => {
    if (!batch || !drafts) return;
    const d = drafts;
    try {
      const result = await submitBatch(api, batch.annotator, batch.items, (id) => d.get(id));
      if (result.submitted) {
        d.clear();
        $("#batch").innerHTML = "<p>Batch submitted. Loading the next one&hellip;</p>";
        await loadBatch();
      } else {
        for (const [id, report] of result.reports) {
          const slot = document.querySelector(`.report[data-item="${id}"]`);
          if (slot) slot.innerHTML = violationList(report.violations);
        }
      }
    } catch {
      banner("Annotation service unreachable; submission is blocked.");
    }
  });
}

// input events keep focus in the text box, so only refresh the submit
// button state instead of re-rendering the whole panel
function redrawControlsOnly() {
  if (!batch || !drafts) return;
  const d = drafts;
  ($("#submit") as HTMLButtonElement).disabled = !batchReady(batch.items, (id) => d.get(id));
}

async function loadBatch() {
  const annotator =
    localStorage.getItem("conjr-annotator") ??
    "w-" + Math.random().toString(36).slice(2, 8);
  localStorage.setItem("conjr-annotator", annotator);
  try {
    batch = await api.nextBatch(annotator);
  } catch {
    banner("Annotation service unreachable; submission is blocked.");
    return;
  }
  if (!batch) {
    $("#batch").innerHTML = "<p>No more batches. Thank you!</p>";
    ($("#submit") as HTMLButtonElement).disabled = true;
    return;
  }
  drafts = new DraftStore(localStorage, batch.batch_id);
  drafts.load(batch.items.map((i) => i.instance_id));
  redraw();
}

export function boot() {
  $("#instructions").innerHTML = instructionsHtml();
  wireEvents();
  void loadBatch();
}

if (typeof document !== "undefined" && document.getElementById("batch")) {
  boot();
}
