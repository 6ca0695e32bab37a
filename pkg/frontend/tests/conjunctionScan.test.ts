import { describe, expect, it } from "vitest";
import { containsConjunction, scanDraft, tokens } from "../src/conjunctionScan.js";

describe("conjunction scan", () => {
  it("matches the coordinator as a whole word, case-insensitively", () => {
    expect(containsConjunction("Josh likes wine And water.", "and")).toBe(true);
    expect(containsConjunction("Josh likes wine.", "and")).toBe(false);
  });

  it("does not fire on words that merely contain the coordinator", () => {
    expect(containsConjunction("The band played on.", "and")).toBe(false);
    expect(containsConjunction("A sandy beach.", "and")).toBe(false);
    expect(containsConjunction("The order form.", "or")).toBe(false);
  });

  it("returns the indices of offending sentences", () => {
    const drafts = ["Josh likes wine.", "Jane likes water and tea.", "Sam sleeps.", "Tea and more."];
    expect(scanDraft(drafts, "and")).toEqual([1, 3]);
    expect(scanDraft(drafts, "but")).toEqual([]);
  });

  it("tokenizes on word characters", () => {
    expect(tokens("Josh's dog-house, and 2 cats!")).toEqual(["josh's", "dog-house", "and", "2", "cats"]);
  });
});
