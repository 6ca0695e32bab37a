"""Dataset records, JSON-lines persistence, splits, and statistics."""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .depgraph import DEFAULT_PROFILE, DepGraph, LabelProfile, parse_conllu

CONJUNCTIONS = ("and", "or", "but")
SPLITS = ("train", "validation", "test", "unassigned")


class DatasetError(Exception):
    pass


@dataclass
class ConjunctionMark:
    form: str
    index: int  # 1-based token index
    char_span: tuple[int, int]

    def to_dict(self) -> dict:
        return {"form": self.form, "index": self.index, "char_span": list(self.char_span)}

    @classmethod
    def from_dict(cls, d: dict) -> "ConjunctionMark":
        return cls(d["form"], d["index"], tuple(d["char_span"]))


@dataclass
class Rewrite:
    text: str
    conllu: Optional[str] = None

    def to_dict(self) -> dict:
        return {"text": self.text, "conllu": self.conllu}


@dataclass
class Instance:
    id: str
    source: str
    text: str
    conjunction: ConjunctionMark
    conllu: str
    rewritable: bool
    rewrites: list[Rewrite] = field(default_factory=list)
    not_rewritable_reason: Optional[str] = None
    split: str = "unassigned"

    def __post_init__(self):
        if self.conjunction.form not in CONJUNCTIONS:
            raise DatasetError(
                f"instance {self.id}: conjunction {self.conjunction.form!r} "
                f"not one of {CONJUNCTIONS}"
            )
        if self.split not in SPLITS:
            raise DatasetError(f"instance {self.id}: unknown split {self.split!r}")
        if self.rewritable and len(self.rewrites) < 2:
            raise DatasetError(
                f"instance {self.id}: a rewritable instance needs at least 2 rewrites"
            )
        if not self.rewritable and self.rewrites:
            raise DatasetError(
                f"instance {self.id}: non-rewritable instance must have no rewrites"
            )

    def graph(self) -> Optional[DepGraph]:
        if not self.conllu:
            return None
        graphs = parse_conllu(self.conllu)
        return graphs[0] if graphs else None

    def rewrite_graphs(self) -> Optional[list[DepGraph]]:
        """Parses of the gold rewrites; None when any rewrite lacks one.
        Non-rewritable instances give an empty list."""
        out = []
        for r in self.rewrites:
            if not r.conllu:
                return None
            graphs = parse_conllu(r.conllu)
            if not graphs:
                return None
            out.append(graphs[0])
        return out

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "source": self.source,
            "text": self.text,
            "conjunction": self.conjunction.to_dict(),
            "conllu": self.conllu,
            "rewritable": self.rewritable,
            "rewrites": [r.to_dict() for r in self.rewrites],
            "not_rewritable_reason": self.not_rewritable_reason,
            "split": self.split,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Instance":
        try:
            return cls(
                id=d["id"],
                source=d.get("source", ""),
                text=d["text"],
                conjunction=ConjunctionMark.from_dict(d["conjunction"]),
                conllu=d["conllu"],
                rewritable=d["rewritable"],
                rewrites=[Rewrite(r["text"], r.get("conllu")) for r in d.get("rewrites", [])],
                not_rewritable_reason=d.get("not_rewritable_reason"),
                split=d.get("split", "unassigned"),
            )
        except KeyError as e:
            raise DatasetError(f"missing required field {e.args[0]!r}") from None


def load(path, lenient: bool = False) -> tuple[list[Instance], int]:
    """Load a JSON-lines dataset. Returns (instances, bad line count);
    in strict mode the first bad line raises with its line number."""
    instances: list[Instance] = []
    bad = 0
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                instances.append(Instance.from_dict(json.loads(line)))
            except (json.JSONDecodeError, DatasetError, TypeError) as e:
                if lenient:
                    bad += 1
                    continue
                raise DatasetError(f"line {line_no}: {e}") from None
    return instances, bad


def save(path, instances: Sequence[Instance]):
    with open(path, "w", encoding="utf-8") as fh:
        for inst in instances:
            fh.write(json.dumps(inst.to_dict(), ensure_ascii=False) + "\n")


def split(
    instances: Sequence[Instance],
    ratios: tuple[float, float, float] = (0.8, 0.1, 0.1),
    seed: int = 0,
) -> list[Instance]:
    """Deterministic shuffle-and-split; floor allocation, remainder to
    train. Assignment is recorded on the records in place."""
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise DatasetError(f"split ratios must sum to 1, got {sum(ratios)}")
    order = list(instances)
    random.Random(seed).shuffle(order)
    n = len(order)
    n_val = int(n * ratios[1])
    n_test = int(n * ratios[2])
    n_train = n - n_val - n_test
    for i, inst in enumerate(order):
        if i < n_train:
            inst.split = "train"
        elif i < n_train + n_val:
            inst.split = "validation"
        else:
            inst.split = "test"
    return order


def _verb_count(graph: Optional[DepGraph], profile: LabelProfile) -> Optional[int]:
    if graph is None:
        return None
    return sum(1 for t in graph.tokens if profile.is_verb(t))


@dataclass
class DatasetStats:
    conjunctions: dict[str, dict[str, int]]  # split -> form -> count
    rewrite_counts: dict[str, int]  # "2" | "3" | "4+" | "non-rewritable" -> count
    verbs: Optional[dict[str, dict[str, int]]]  # split -> explicit/omitted/total
    omitted_share: Optional[float]
    instances: int
    verb_stats_unavailable: int

    def to_dict(self) -> dict:
        return {
            "instances": self.instances,
            "conjunctions": self.conjunctions,
            "rewrite_counts": self.rewrite_counts,
            "verbs": self.verbs,
            "omitted_share": self.omitted_share,
            "verb_stats_unavailable": self.verb_stats_unavailable,
        }


def stats(instances: Sequence[Instance], profile: LabelProfile = DEFAULT_PROFILE) -> DatasetStats:
    conj: dict[str, Counter] = {}
    rc: Counter = Counter()
    verbs: dict[str, Counter] = {}
    unavailable = 0
    any_verbs = False
    for inst in instances:
        splits = (inst.split, "full")
        for s in splits:
            conj.setdefault(s, Counter())[inst.conjunction.form] += 1
        if not inst.rewritable:
            rc["non-rewritable"] += 1
        elif len(inst.rewrites) == 2:
            rc["2"] += 1
        elif len(inst.rewrites) == 3:
            rc["3"] += 1
        else:
            rc["4+"] += 1
        explicit = _verb_count(inst.graph(), profile)
        gold_graphs = inst.rewrite_graphs()
        if explicit is None or gold_graphs is None:
            unavailable += 1
            continue
        if inst.rewritable:
            total = sum(_verb_count(g, profile) for g in gold_graphs)
        else:
            total = explicit
        omitted = max(0, total - explicit)
        any_verbs = True
        for s in splits:
            c = verbs.setdefault(s, Counter())
            c["explicit"] += explicit
            c["omitted"] += omitted
            c["total"] += explicit + omitted
    verb_out = None
    omitted_share = None
    if any_verbs:
        verb_out = {s: dict(c) for s, c in sorted(verbs.items())}
        full = verbs.get("full", Counter())
        if full["total"]:
            omitted_share = full["omitted"] / full["total"]
    return DatasetStats(
        conjunctions={s: dict(c) for s, c in sorted(conj.items())},
        rewrite_counts=dict(rc),
        verbs=verb_out,
        omitted_share=omitted_share,
        instances=len(instances),
        verb_stats_unavailable=unavailable,
    )
