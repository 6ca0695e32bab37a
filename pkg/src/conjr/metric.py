"""Precision/recall over verb nuclei, with identity subtraction.

Per instance, nuclei of the hypothesis and gold rewrites are compared
after subtracting the nuclei of the original input sentence, so only
newly made-explicit material is scored. When both sides consist of a
single sentence the subtraction is skipped, so correctly leaving a
non-rewritable sentence unchanged scores perfectly.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .depgraph import DEFAULT_PROFILE, DepGraph, LabelProfile
from .nucleus import NucleusBag, extract_nuclei


class MetricError(Exception):
    pass


@dataclass(frozen=True)
class InstanceScore:
    precision: float
    recall: float
    matched: int
    predicted: int
    gold: int
    skip_rule_applied: bool
    conjunction: str = ""

    @property
    def f1(self) -> float:
        return f1(self.precision, self.recall)


def f1(p: float, r: float) -> float:
    return 0.0 if p + r == 0 else 2 * p * r / (p + r)


def score_instance(
    input_graph: DepGraph,
    gold: Sequence[DepGraph],
    hyp: Sequence[DepGraph],
    profile: LabelProfile = DEFAULT_PROFILE,
    conjunction: str = "",
) -> InstanceScore:
    if not gold or not hyp:
        raise MetricError("gold and hypothesis sentence sets must be non-empty")
    ng = extract_nuclei(gold, profile)
    nh = extract_nuclei(hyp, profile)
    skip = len(gold) == 1 and len(hyp) == 1
    if not skip:
        ni = extract_nuclei([input_graph], profile)
        ng = ng.difference(ni)
        nh = nh.difference(ni)
    matched = len(nh.intersection(ng))
    predicted, goldn = len(nh), len(ng)
    if predicted > 0:
        precision = matched / predicted
    else:
        precision = 1.0 if goldn == 0 else 0.0
    if goldn > 0:
        recall = matched / goldn
    else:
        recall = 1.0 if predicted == 0 else 0.0
    return InstanceScore(
        precision=precision,
        recall=recall,
        matched=matched,
        predicted=predicted,
        gold=goldn,
        skip_rule_applied=skip,
        conjunction=conjunction,
    )


def normalize_sentence(s: str) -> str:
    """Punctuation-stripped, whitespace-normalized, case-folded form."""
    chars = []
    for ch in s:
        if unicodedata.category(ch).startswith("P"):
            chars.append(" ")
        else:
            chars.append(ch)
    return " ".join("".join(chars).casefold().split())


def exact_match(gold_texts: Sequence[str], hyp_texts: Sequence[str]) -> bool:
    """Aligned (position-by-position) comparison after normalization."""
    if len(gold_texts) != len(hyp_texts):
        return False
    return all(
        normalize_sentence(g) == normalize_sentence(h)
        for g, h in zip(gold_texts, hyp_texts)
    )


def calibration(input_text: str, mode: str, gold_count: Optional[int] = None) -> list[str]:
    """Echo baselines: the input once, or k copies of it."""
    if mode == "one":
        return [input_text]
    if mode == "k":
        if gold_count is None:
            raise MetricError("mode=k requires the gold rewrite count")
        return [input_text] * gold_count
    raise MetricError(f"unknown calibration mode {mode!r}")


@dataclass
class EvalReport:
    mode: str
    precision: float
    recall: float
    f1: float
    micro_precision: float
    micro_recall: float
    micro_f1: float
    per_conjunction: dict[str, dict]
    exact_match_rate: float
    instances: int
    skipped: int
    per_instance: Optional[list[dict]] = None

    def to_dict(self) -> dict:
        out = {
            "mode": self.mode,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "micro_precision": self.micro_precision,
            "micro_recall": self.micro_recall,
            "micro_f1": self.micro_f1,
            "per_conjunction": self.per_conjunction,
            "exact_match_rate": self.exact_match_rate,
            "instances": self.instances,
            "skipped": self.skipped,
        }
        if self.per_instance is not None:
            out["per_instance"] = self.per_instance
        return out

    def table(self) -> str:
        rows = [
            ("", "Recall", "Precision", "F1", "Exact Match"),
            (
                self.mode,
                f"{100 * self.recall:.1f}",
                f"{100 * self.precision:.1f}",
                f"{100 * self.f1:.1f}",
                f"{100 * self.exact_match_rate:.1f}",
            ),
        ]
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        return "\n".join(
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)) for row in rows
        )


@dataclass
class ScoredInstance:
    """One evaluated instance, ready for aggregation."""

    id: str
    score: InstanceScore
    exact: bool


def _aggregate(scored: Sequence[ScoredInstance], mode: str) -> tuple[float, float, float]:
    if not scored:
        return (0.0, 0.0, 0.0)
    if mode == "macro":
        p = sum(s.score.precision for s in scored) / len(scored)
        r = sum(s.score.recall for s in scored) / len(scored)
    elif mode == "micro":
        matched = sum(s.score.matched for s in scored)
        predicted = sum(s.score.predicted for s in scored)
        goldn = sum(s.score.gold for s in scored)
        p = matched / predicted if predicted else (1.0 if goldn == 0 else 0.0)
        r = matched / goldn if goldn else (1.0 if predicted == 0 else 0.0)
    else:
        raise MetricError(f"unknown aggregation mode {mode!r}")
    return (p, r, f1(p, r))


def evaluate_scored(
    scored: Sequence[ScoredInstance],
    mode: str = "macro",
    skipped: int = 0,
    per_instance: bool = False,
) -> EvalReport:
    p, r, f = _aggregate(scored, mode)
    mp, mr, mf = _aggregate(scored, "micro")
    per_conj: dict[str, dict] = {}
    for conj in sorted({s.score.conjunction for s in scored}):
        sub = [s for s in scored if s.score.conjunction == conj]
        cp, cr, cf = _aggregate(sub, mode)
        per_conj[conj or "?"] = {
            "precision": cp,
            "recall": cr,
            "f1": cf,
            "instances": len(sub),
        }
    em = sum(1 for s in scored if s.exact) / len(scored) if scored else 0.0
    details = None
    if per_instance:
        details = [
            {
                "id": s.id,
                "precision": s.score.precision,
                "recall": s.score.recall,
                "f1": s.score.f1,
                "matched": s.score.matched,
                "predicted": s.score.predicted,
                "gold": s.score.gold,
                "skip_rule_applied": s.score.skip_rule_applied,
                "exact_match": s.exact,
            }
            for s in scored
        ]
    return EvalReport(
        mode=mode,
        precision=p,
        recall=r,
        f1=f1(p, r),
        micro_precision=mp,
        micro_recall=mr,
        micro_f1=mf,
        per_conjunction=per_conj,
        exact_match_rate=em,
        instances=len(scored),
        skipped=skipped,
        per_instance=details,
    )


def evaluate_corpus(
    instances: Sequence,
    predictions: dict[str, dict],
    mode: str = "macro",
    profile: LabelProfile = DEFAULT_PROFILE,
    per_instance: bool = False,
) -> EvalReport:
    """Score a corpus of dataset instances against a predictions map.

    ``instances`` are dataset records (see conjr.dataset.Instance) with
    parses attached; ``predictions`` maps instance id to a dict with
    ``sentences`` (list of strings) and ``graphs`` (list of DepGraph).
    Missing predictions are an error; instances whose parses are missing
    are skipped with a counter.
    """
    missing = [inst.id for inst in instances if inst.id not in predictions]
    if missing:
        raise MetricError(f"missing predictions for ids: {', '.join(missing)}")
    scored: list[ScoredInstance] = []
    skipped = 0
    for inst in instances:
        input_graph = inst.graph()
        gold_graphs = inst.rewrite_graphs()
        pred = predictions[inst.id]
        hyp_graphs = pred["graphs"]
        if input_graph is None or gold_graphs is None or not hyp_graphs:
            skipped += 1
            continue
        gold_texts = [r.text for r in inst.rewrites] if inst.rewritable else [inst.text]
        if not gold_graphs:
            gold_graphs = [input_graph]
        score = score_instance(
            input_graph, gold_graphs, hyp_graphs, profile, conjunction=inst.conjunction.form
        )
        scored.append(
            ScoredInstance(
                id=inst.id,
                score=score,
                exact=exact_match(gold_texts, pred["sentences"]),
            )
        )
    return evaluate_scored(scored, mode=mode, skipped=skipped, per_instance=per_instance)
