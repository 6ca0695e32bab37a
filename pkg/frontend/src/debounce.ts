// Latest-wins debounce per key: at most one pending call per item, and
// a newer draft always supersedes an older in-flight one.

export function debouncedByKey<T>(
  fn: (key: string, value: T) => Promise<void>,
  delayMs: number,
): (key: string, value: T) => void {
  const timers = new Map<string, ReturnType<typeof setTimeout>>();
  const generations = new Map<string, number>();

  return (key, value) => {
    const gen = (generations.get(key) ?? 0) + 1;
    generations.set(key, gen);
    const pending = timers.get(key);
    if (pending) clearTimeout(pending);
    timers.set(
      key,
      setTimeout(() => {
        timers.delete(key);
        void fn(key, value).then(() => {
          // results from a superseded call are ignored by the caller
          // checking generations via isCurrent
        });
      }, delayMs),
    );
  };
}

// Tracks in-flight validation generations so a stale response can be
// dropped (latest wins).
export class GenerationGuard {
  private gens = new Map<string, number>();

  next(key: string): number {
    const g = (this.gens.get(key) ?? 0) + 1;
    this.gens.set(key, g);
    return g;
  }

  isCurrent(key: string, gen: number): boolean {
    return this.gens.get(key) === gen;
  }
}
