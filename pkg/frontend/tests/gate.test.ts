import { describe, expect, it } from "vitest";
import { batchReady, itemState, submitBatch } from "../src/gate.js";
import type { Api } from "../src/api.js";
import { emptyDraft, type BatchItem, type ItemDraft, type ValidationReport } from "../src/types.js";

const ITEM: BatchItem = {
  instance_id: "mini-001",
  text: "Josh likes wine and Jane likes water.",
  conjunction: { form: "and", index: 3, char_span: [16, 19] },
};

function draft(patch: Partial<ItemDraft>): ItemDraft {
  return { ...emptyDraft(), ...patch };
}

describe("itemState", () => {
  it("accepts two clean rewrites", () => {
    const s = itemState(ITEM, draft({ sentences: ["Josh likes wine.", "Jane likes water."] }));
    expect(s.ready).toBe(true);
    expect(s.needsReason).toBe(false);
    expect(s.problems).toEqual([]);
  });

  it("requires at least two filled rewrites", () => {
    const s = itemState(ITEM, draft({ sentences: ["Josh likes wine.", "  "] }));
    expect(s.ready).toBe(false);
    expect(s.problems.join(" ")).toContain("at least two");
  });

  it("flags a rewrite that still contains the conjunction", () => {
    const s = itemState(
      ITEM,
      draft({ sentences: ["Josh likes wine and water.", "Jane likes water."] }),
    );
    expect(s.ready).toBe(false);
    expect(s.localViolations).toEqual([0]);
  });

  it("forces the reason prompt when the submission is unchanged", () => {
    const s = itemState(
      ITEM,
      draft({ sentences: ["Josh likes wine and Jane likes water.", "josh likes wine and jane likes water"] }),
    );
    expect(s.needsReason).toBe(true);
    expect(s.ready).toBe(false);
  });

  it("forces a reason for a non-rewritable mark without one", () => {
    const s = itemState(ITEM, draft({ rewritable: false, reason: "" }));
    expect(s.needsReason).toBe(true);
    expect(s.ready).toBe(false);
    const ok = itemState(ITEM, draft({ rewritable: false, reason: "idiomatic pair" }));
    expect(ok.ready).toBe(true);
  });
});

function fakeApi(verdicts: Record<string, "pass" | "fail">) {
  const calls = { validate: [] as string[], submit: [] as string[] };
  const report = (v: "pass" | "fail"): ValidationReport => ({
    verdict: v,
    violations: v === "pass" ? [] : [{ code: "CONJUNCTION_PRESENT", detail: "x", location: 0 }],
  });
  const api: Api = {
    async nextBatch() {
      return null;
    },
    async validate(id) {
      calls.validate.push(id);
      return report(verdicts[id] ?? "pass");
    },
    async submit(id) {
      calls.submit.push(id);
      return report("pass");
    },
  };
  return { api, calls };
}

const GOOD = draft({ sentences: ["Josh likes wine.", "Jane likes water."] });

describe("submitBatch", () => {
  it("submits every item when all validations pass", async () => {
    const items = [ITEM, { ...ITEM, instance_id: "mini-002" }];
    const { api, calls } = fakeApi({});
    const result = await submitBatch(api, "a1", items, () => GOOD);
    expect(result.submitted).toBe(true);
    expect(calls.validate).toEqual(["mini-001", "mini-002"]);
    expect(calls.submit).toEqual(["mini-001", "mini-002"]);
  });

  it("never submits anything when the server rejects one item", async () => {
    const items = [ITEM, { ...ITEM, instance_id: "mini-002" }];
    const { api, calls } = fakeApi({ "mini-002": "fail" });
    const result = await submitBatch(api, "a1", items, () => GOOD);
    expect(result.submitted).toBe(false);
    expect(calls.submit).toEqual([]);
    expect(result.reports.get("mini-002")?.verdict).toBe("fail");
  });

  it("does not even validate when the local gate fails", async () => {
    const { api, calls } = fakeApi({});
    const result = await submitBatch(api, "a1", [ITEM], () => emptyDraft());
    expect(result.submitted).toBe(false);
    expect(calls.validate).toEqual([]);
    expect(calls.submit).toEqual([]);
  });
});

describe("batchReady", () => {
  it("requires every item in the batch to be ready", () => {
    const items = [ITEM, { ...ITEM, instance_id: "mini-002" }];
    expect(batchReady(items, () => GOOD)).toBe(true);
    expect(batchReady(items, (id) => (id === "mini-002" ? emptyDraft() : GOOD))).toBe(false);
  });
});
