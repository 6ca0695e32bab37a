"""Rewrite validation, multi-annotator consolidation, and agreement.

Submissions are checked for duplicate sentences, presence of the marked
conjunction, and newly introduced content words (inflectional variants
of input words are allowed). Gold answers come from strict-majority
agreement on sentence count plus aligned exact match, falling back to
the highest-ranked annotator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .depgraph import DepGraph
from .metric import normalize_sentence

MAX_REWRITES = 10

CONTENT_UPOS = frozenset({"NOUN", "PROPN", "VERB", "AUX", "ADJ", "ADV", "NUM"})

# closed-class material annotators may add freely when spelling out
# shared arguments (left omission re-adds subjects, copulas, etc.)
FUNCTION_WORDS = frozenset(
    """
    a an the this that these those some any no every each
    i you he she it we they me him her us them my your his its our their
    mine yours hers ours theirs myself yourself himself herself itself
    ourselves themselves who whom whose which what
    is are was were be been being am do does did have has had will would
    shall should can could may might must
    and or but nor so yet if while because although though when where
    not to of in on at by for with from as into onto over under about
    against between through during before after above below up down out
    off again further then once here there all both few more most other
    s t d ll m re ve
    """.split()
)


@dataclass
class RewriteSet:
    """One annotator's answer for one instance."""

    instance_id: str
    annotator_id: str
    rewritable: bool
    sentences: list[str] = field(default_factory=list)
    not_rewritable_reason: Optional[str] = None
    uncertain: bool = False
    long_list: bool = False

    def to_dict(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "annotator_id": self.annotator_id,
            "rewritable": self.rewritable,
            "sentences": list(self.sentences),
            "not_rewritable_reason": self.not_rewritable_reason,
            "flags": {"uncertain": self.uncertain, "long_list": self.long_list},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RewriteSet":
        flags = d.get("flags", {})
        return cls(
            instance_id=d["instance_id"],
            annotator_id=d["annotator_id"],
            rewritable=d["rewritable"],
            sentences=list(d.get("sentences", [])),
            not_rewritable_reason=d.get("not_rewritable_reason"),
            uncertain=bool(flags.get("uncertain", False)),
            long_list=bool(flags.get("long_list", False)),
        )


@dataclass(frozen=True)
class Violation:
    code: str  # DUPLICATE_SENTENCE | CONJUNCTION_PRESENT | NEW_CONTENT_WORD | TOO_MANY_REWRITES | EMPTY_SET
    detail: str
    location: Optional[int] = None  # 0-based sentence index, when applicable

    def to_dict(self) -> dict:
        return {"code": self.code, "detail": self.detail, "location": self.location}


@dataclass
class ValidationReport:
    violations: list[Violation]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "verdict": "pass" if self.passed else "fail",
            "violations": [v.to_dict() for v in self.violations],
        }


_TOKEN_RE = re.compile(r"[A-Za-z0-9'@%.-]+")


def tokenize(text: str) -> list[str]:
    return [t.strip("'.-") or t for t in _TOKEN_RE.findall(text)]


def stem(word: str) -> str:
    """Deterministic suffix stripper approximating lemmas when no parse
    is available. One regular inflection suffix is removed, then a bare
    trailing "e", so likes/like and carried/carries collapse together."""
    w = word.casefold()
    for suffix in ("ing", "ed", "es", "s"):
        if w.endswith(suffix) and len(w) - len(suffix) >= 3:
            w = w[: -len(suffix)]
            break
    if w.endswith("e") and len(w) >= 4:
        w = w[:-1]
    return w


def _content_lemmas_from_graph(graph: DepGraph) -> set[str]:
    out = set()
    for t in graph.tokens:
        if t.upos in CONTENT_UPOS:
            lemma = t.lemma if t.lemma and t.lemma != "_" else t.form
            out.add(lemma.casefold())
            out.add(stem(t.form))
    return out


def _candidate_stems(input_tokens: Iterable[str]) -> set[str]:
    out = set()
    for w in input_tokens:
        out.add(w.casefold())
        out.add(stem(w))
    return out


def validate(
    instance_text: str,
    conjunction_form: str,
    submission: RewriteSet,
    input_graph: Optional[DepGraph] = None,
    rewrite_graphs: Optional[Sequence[DepGraph]] = None,
) -> ValidationReport:
    """Apply the rewrite quality checks to one submission.

    Non-rewritable submissions pass vacuously. The content-word check
    prefers parse lemmas and falls back to the suffix stemmer.
    """
    violations: list[Violation] = []
    if not submission.rewritable:
        return ValidationReport(violations)
    sentences = submission.sentences
    if not sentences:
        violations.append(Violation("EMPTY_SET", "rewritable submission with no sentences"))
        return ValidationReport(violations)
    if len(sentences) > MAX_REWRITES:
        violations.append(
            Violation(
                "TOO_MANY_REWRITES",
                f"{len(sentences)} rewrites exceed the limit of {MAX_REWRITES}",
            )
        )

    seen: dict[str, int] = {}
    for i, s in enumerate(sentences):
        norm = normalize_sentence(s)
        if norm in seen:
            violations.append(
                Violation(
                    "DUPLICATE_SENTENCE",
                    f"sentence {i + 1} duplicates sentence {seen[norm] + 1}",
                    location=i,
                )
            )
        else:
            seen[norm] = i

    conj = conjunction_form.casefold()
    for i, s in enumerate(sentences):
        if conj in (w.casefold() for w in tokenize(s)):
            violations.append(
                Violation(
                    "CONJUNCTION_PRESENT",
                    f"marked conjunction {conjunction_form!r} appears in sentence {i + 1}",
                    location=i,
                )
            )

    if input_graph is not None:
        allowed = _candidate_stems(t.form for t in input_graph.tokens)
        allowed |= {
            (t.lemma if t.lemma and t.lemma != "_" else t.form).casefold()
            for t in input_graph.tokens
        }
    else:
        allowed = _candidate_stems(tokenize(instance_text))
    for i, s in enumerate(sentences):
        if rewrite_graphs is not None and i < len(rewrite_graphs) and rewrite_graphs[i] is not None:
            g = rewrite_graphs[i]
            words = [
                (t.form, (t.lemma if t.lemma and t.lemma != "_" else t.form))
                for t in g.tokens
                if t.upos in CONTENT_UPOS
            ]
        else:
            words = [(w, w) for w in tokenize(s) if w.casefold() not in FUNCTION_WORDS]
        for form, lemma in words:
            ok = (
                form.casefold() in allowed
                or lemma.casefold() in allowed
                or stem(form) in allowed
            )
            if not ok:
                violations.append(
                    Violation(
                        "NEW_CONTENT_WORD",
                        f"sentence {i + 1} introduces content word {form!r}",
                        location=i,
                    )
                )
    return ValidationReport(violations)


# --- consolidation ---------------------------------------------------------

def _submission_class(sub: RewriteSet):
    if not sub.rewritable:
        return ("non-rewritable",)
    return (len(sub.sentences), tuple(normalize_sentence(s) for s in sub.sentences))


@dataclass
class ConsolidationResult:
    gold: RewriteSet
    method: str  # majority | fallback

    def to_dict(self) -> dict:
        return {"gold": self.gold.to_dict(), "method": self.method}


def consolidate(
    submissions: Sequence[RewriteSet], ranking: dict[str, float]
) -> ConsolidationResult:
    """Pick the gold answer from one instance's submissions.

    Strict-majority equivalence class (sentence count + aligned
    normalized exact match) wins; its canonical member is the lowest
    annotator id. Otherwise the highest-ranked annotator's submission.
    """
    if not submissions:
        raise ValueError("consolidate needs at least one submission")
    for sub in submissions:
        if sub.annotator_id not in ranking:
            raise ValueError(f"ranking does not cover annotator {sub.annotator_id!r}")
    classes: dict[tuple, list[RewriteSet]] = {}
    for sub in submissions:
        classes.setdefault(_submission_class(sub), []).append(sub)
    best = max(classes.values(), key=len)
    if len(best) * 2 > len(submissions):
        gold = min(best, key=lambda s: s.annotator_id)
        return ConsolidationResult(gold, "majority")
    gold = max(submissions, key=lambda s: (ranking[s.annotator_id], s.annotator_id))
    return ConsolidationResult(gold, "fallback")


def annotator_ranking(
    submissions: Iterable[RewriteSet], golds: dict[str, RewriteSet]
) -> dict[str, float]:
    """Historical rate of exact-match agreement with consolidated gold."""
    agree: dict[str, int] = {}
    total: dict[str, int] = {}
    for sub in submissions:
        total[sub.annotator_id] = total.get(sub.annotator_id, 0) + 1
        gold = golds.get(sub.instance_id)
        if gold is not None and _submission_class(sub) == _submission_class(gold):
            agree[sub.annotator_id] = agree.get(sub.annotator_id, 0) + 1
    return {a: agree.get(a, 0) / n for a, n in total.items()}


# --- inter-annotator agreement ---------------------------------------------

@dataclass
class IAAReport:
    rewrite_agreement: float
    exact_match: float
    avg_jaccard: float
    groups: int
    excluded: int

    def to_dict(self) -> dict:
        return {
            "rewrite_agreement": self.rewrite_agreement,
            "exact_match": self.exact_match,
            "avg_jaccard": self.avg_jaccard,
            "groups": self.groups,
            "excluded": self.excluded,
        }


def jaccard(a: set, b: set) -> float:
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def _token_set(sub: RewriteSet) -> set[str]:
    out: set[str] = set()
    for s in sub.sentences:
        out.update(normalize_sentence(s).split())
    return out


def iaa(groups: Iterable[Sequence[RewriteSet]]) -> IAAReport:
    """Agreement over per-instance submission groups (size >= 2 each;
    smaller groups are excluded with a counter)."""
    n = 0
    excluded = 0
    count_agree = 0
    exact_agree = 0
    jacc_total = 0.0
    for group in groups:
        if len(group) < 2:
            excluded += 1
            continue
        n += 1
        counts = {len(s.sentences) if s.rewritable else 0 for s in group}
        if len(counts) == 1:
            count_agree += 1
        classes = {_submission_class(s) for s in group}
        if len(classes) == 1:
            exact_agree += 1
        sets = [_token_set(s) for s in group]
        pair_scores = [
            jaccard(sets[i], sets[j])
            for i in range(len(sets))
            for j in range(i + 1, len(sets))
        ]
        jacc_total += sum(pair_scores) / len(pair_scores)
    return IAAReport(
        rewrite_agreement=count_agree / n if n else 0.0,
        exact_match=exact_agree / n if n else 0.0,
        avg_jaccard=jacc_total / n if n else 0.0,
        groups=n,
        excluded=excluded,
    )
