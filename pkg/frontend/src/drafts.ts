import { emptyDraft, type ItemDraft } from "./types.js";

// Drafts survive page reload via a storage backend (localStorage in the
// browser, anything Map-like in tests) keyed by batch id.

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

const KEY_PREFIX = "conjr-draft:";

export class DraftStore {
  private drafts = new Map<string, ItemDraft>();

  constructor(
    private storage: StorageLike,
    private batchId: number,
  ) {}

  private key(): string {
    return KEY_PREFIX + this.batchId;
  }

  load(instanceIds: string[]): void {
    const raw = this.storage.getItem(this.key());
    const saved: Record<string, ItemDraft> = raw ? JSON.parse(raw) : {};
    for (const id of instanceIds) {
      this.drafts.set(id, saved[id] ?? emptyDraft());
    }
  }

  get(instanceId: string): ItemDraft {
    const d = this.drafts.get(instanceId);
    if (!d) throw new Error("unknown instance " + instanceId);
    return d;
  }

  update(instanceId: string, patch: Partial<ItemDraft>): ItemDraft {
    const next = { ...this.get(instanceId), ...patch };
    this.drafts.set(instanceId, next);
    this.persist();
    return next;
  }

  addSentence(instanceId: string): ItemDraft {
    const d = this.get(instanceId);
    if (d.sentences.length >= 10) return d;
    return this.update(instanceId, { sentences: [...d.sentences, ""] });
  }

  removeSentence(instanceId: string, index: number): ItemDraft {
    const d = this.get(instanceId);
    if (d.sentences.length <= 2) return d;
    return this.update(instanceId, {
      sentences: d.sentences.filter((_, i) => i !== index),
    });
  }

  setSentence(instanceId: string, index: number, value: string): ItemDraft {
    const d = this.get(instanceId);
    const sentences = d.sentences.slice();
    sentences[index] = value;
    return this.update(instanceId, { sentences });
  }

  clear(): void {
    this.storage.removeItem(this.key());
    this.drafts.clear();
  }

  private persist(): void {
    const obj: Record<string, ItemDraft> = {};
    for (const [id, d] of this.drafts) obj[id] = d;
    this.storage.setItem(this.key(), JSON.stringify(obj));
  }
}
