import type { Batch, ItemDraft, ValidationReport } from "./types.js";

export interface Api {
  nextBatch(annotator: string): Promise<Batch | null>;
  validate(instanceId: string, draft: ItemDraft): Promise<ValidationReport>;
  submit(instanceId: string, annotator: string, draft: ItemDraft): Promise<ValidationReport>;
}

function draftPayload(instanceId: string, draft: ItemDraft) {
  return {
    instance_id: instanceId,
    rewritable: draft.rewritable,
    sentences: draft.rewritable ? draft.sentences.filter((s) => s.trim() !== "") : [],
    not_rewritable_reason: draft.rewritable ? null : draft.reason || null,
  };
}

export function httpApi(baseUrl: string): Api {
  const url = (path: string) => baseUrl.replace(/\/$/, "") + path;

  return {
    async nextBatch(annotator) {
      const res = await fetch(url("/batches/next?annotator=" + encodeURIComponent(annotator)));
      if (res.status === 204) return null;
      if (!res.ok) throw new Error("batch request failed: " + res.status);
      return res.json();
    },

    async validate(instanceId, draft) {
      const res = await fetch(url("/validate"), {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(draftPayload(instanceId, draft)),
      });
      if (!res.ok) throw new Error("validate failed: " + res.status);
      return res.json();
    },

    async submit(instanceId, annotator, draft) {
      const payload = {
        ...draftPayload(instanceId, draft),
        annotator_id: annotator,
        flags: { uncertain: draft.uncertain, long_list: draft.longList },
      };
      const res = await fetch(url("/submissions"), {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
      });
      if (res.status === 422) {
        const body = await res.json();
        return body.detail as ValidationReport;
      }
      if (!res.ok) throw new Error("submission failed: " + res.status);
      const body = await res.json();
      return body.report as ValidationReport;
    },
  };
}
