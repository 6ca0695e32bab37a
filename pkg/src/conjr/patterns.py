"""Declarative dependency-graph patterns and the suspicious-structure catalog.

A pattern names variables with UPOS-class constraints, directed labeled
edges between them, and surface-order constraints (gaps allowed). The
builtin catalog holds the 21 structures used to harvest verbal-omission
candidates from parsed corpora; ``mine_corpus`` streams matching
sentences as candidate records, one per marked conjunction.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Iterator, Optional, Sequence

from .depgraph import (
    ConlluError,
    DEFAULT_PROFILE,
    DepGraph,
    GraphError,
    LabelProfile,
    Token,
    parse_conllu,
)

COORDINATORS = frozenset({"and", "or", "but"})
VERB_CLASS = frozenset({"VERB", "AUX"})
NONVERB_CLASS = frozenset({"NOUN", "PROPN", "ADJ", "NUM"})

FAMILIES = ("pos-mismatch", "deprel-mismatch", "subtree-mismatch")


class PatternError(Exception):
    """Invalid pattern specification or catalog file."""


@dataclass(frozen=True)
class NodeSpec:
    var: str
    constraint: str  # VERB-CLASS | NONVERB-CLASS | any | UPOS[|UPOS...]


@dataclass(frozen=True)
class EdgeSpec:
    head: str
    dep: str
    labels: str  # label[|label...] | any | @obj | @subj | @prep


@dataclass(frozen=True)
class PatternSpec:
    id: str
    family: str
    nodes: tuple[NodeSpec, ...]
    edges: tuple[EdgeSpec, ...]
    order: tuple[tuple[str, str], ...]  # (before, after) pairs
    description: str = ""


@dataclass(frozen=True)
class Conjunction:
    form: str
    index: int
    char_span: tuple[int, int]


@dataclass(frozen=True)
class PatternMatch:
    pattern_id: str
    bindings: tuple[tuple[str, int], ...]  # (var, token index), declaration order
    conjunction: Optional[Conjunction] = None

    def binding(self, var: str) -> int:
        return dict(self.bindings)[var]


def _upos_test(constraint: str):
    if constraint == "any":
        return lambda upos: True
    if constraint == "VERB-CLASS":
        allowed = VERB_CLASS
    elif constraint == "NONVERB-CLASS":
        allowed = NONVERB_CLASS
    else:
        allowed = frozenset(constraint.split("|"))
    return lambda upos, allowed=allowed: upos in allowed


def _resolve_labels(labels: str, profile: LabelProfile) -> Optional[frozenset[str]]:
    if labels == "any":
        return None
    if labels == "@obj":
        return profile.objects
    if labels == "@subj":
        return profile.subjects
    if labels == "@prep":
        return profile.prepositions
    if labels.startswith("@"):
        raise PatternError(f"unknown role reference {labels!r}")
    return frozenset(labels.split("|"))


class CompiledPattern:
    """Deterministic matcher for one PatternSpec against a profile."""

    def __init__(self, spec: PatternSpec, profile: LabelProfile = DEFAULT_PROFILE):
        if spec.family not in FAMILIES:
            raise PatternError(f"{spec.id}: unknown family {spec.family!r}")
        self.spec = spec
        self.vars = [n.var for n in spec.nodes]
        if len(set(self.vars)) != len(self.vars):
            raise PatternError(f"{spec.id}: duplicate variable names")
        declared = set(self.vars)
        for e in spec.edges:
            for v in (e.head, e.dep):
                if v not in declared:
                    raise PatternError(f"{spec.id}: edge names undeclared variable {v!r}")
        for a, b in spec.order:
            if a not in declared or b not in declared:
                raise PatternError(f"{spec.id}: order names undeclared variable")
        self._check_order_acyclic()
        self.node_tests = {n.var: _upos_test(n.constraint) for n in spec.nodes}
        self.edges = [
            (e.head, e.dep, _resolve_labels(e.labels, profile)) for e in spec.edges
        ]
        self.order = list(spec.order)

    def _check_order_acyclic(self):
        succ: dict[str, set[str]] = {v: set() for v in self.vars}
        for a, b in self.spec.order:
            succ[a].add(b)
        state: dict[str, int] = {}

        def visit(v: str):
            state[v] = 1
            for w in succ[v]:
                if state.get(w) == 1:
                    raise PatternError(f"{self.spec.id}: cyclic order constraints")
                if state.get(w) is None:
                    visit(w)
            state[v] = 2

        for v in self.vars:
            if state.get(v) is None:
                visit(v)

    @property
    def id(self) -> str:
        return self.spec.id

    def match(self, graph: DepGraph) -> list[PatternMatch]:
        """All bindings, in lexicographic order of bound token indices.

        Bindings are injective and never include punctuation tokens.
        """
        candidates: dict[str, list[int]] = {}
        for var in self.vars:
            test = self.node_tests[var]
            candidates[var] = [
                t.index for t in graph.tokens if not t.is_punct and test(t.upos)
            ]
            if not candidates[var]:
                return []

        results: list[PatternMatch] = []
        binding: dict[str, int] = {}

        def consistent(var: str, idx: int) -> bool:
            for head, dep, labels in self.edges:
                h = idx if head == var else binding.get(head)
                d = idx if dep == var else binding.get(dep)
                if h is None or d is None:
                    continue
                tok = graph.token(d)
                if tok.head != h:
                    return False
                if labels is not None and tok.deprel not in labels:
                    return False
            for a, b in self.order:
                ia = idx if a == var else binding.get(a)
                ib = idx if b == var else binding.get(b)
                if ia is not None and ib is not None and not ia < ib:
                    return False
            return True

        def search(pos: int):
            if pos == len(self.vars):
                results.append(
                    PatternMatch(
                        pattern_id=self.spec.id,
                        bindings=tuple((v, binding[v]) for v in self.vars),
                    )
                )
                return
            var = self.vars[pos]
            used = set(binding.values())
            for idx in candidates[var]:
                if idx in used or not consistent(var, idx):
                    continue
                binding[var] = idx
                search(pos + 1)
                del binding[var]

        search(0)
        results.sort(key=lambda m: tuple(i for _, i in m.bindings))
        return results


def compile_pattern(spec: PatternSpec, profile: LabelProfile = DEFAULT_PROFILE) -> CompiledPattern:
    return CompiledPattern(spec, profile)


def token_char_span(graph: DepGraph, index: int) -> tuple[int, int]:
    """Character span of a token in the sentence text (reconstructed from
    forms when the graph carries no raw text)."""
    text = graph.text if graph.text is not None else " ".join(t.form for t in graph.tokens)
    cursor = 0
    for t in graph.tokens:
        at = text.find(t.form, cursor)
        if at < 0:
            at = cursor
        if t.index == index:
            return (at, at + len(t.form))
        cursor = at + len(t.form)
    raise GraphError(f"token index {index} out of range", graph.id)


def _coordinator_indices(graph: DepGraph) -> list[int]:
    return [t.index for t in graph.tokens if t.form.lower() in COORDINATORS]


def attribute_conjunction(graph: DepGraph, match: PatternMatch) -> Optional[Conjunction]:
    """Locate the marked coordinator for a match.

    Preferred: the cc-labeled dependent (with a coordinator form) of the
    head of the pattern's first conj edge. Fallback: the nearest
    coordinator token preceding the match, then the nearest one anywhere.
    """
    coords = _coordinator_indices(graph)
    if not coords:
        return None

    def conj_of(idx: int) -> Conjunction:
        tok = graph.token(idx)
        return Conjunction(tok.form.lower(), idx, token_char_span(graph, idx))

    bound = dict(match.bindings)
    # prefer the cc sibling of a matched conj edge
    for var, idx in match.bindings:
        tok = graph.token(idx)
        if tok.deprel == "conj" and tok.head in bound.values():
            for cc in graph.children(tok.head, {"cc"}):
                if cc.form.lower() in COORDINATORS:
                    return conj_of(cc.index)
    last = max(i for _, i in match.bindings)
    preceding = [i for i in coords if i < last]
    if preceding:
        return conj_of(preceding[-1])
    return conj_of(min(coords, key=lambda i: abs(i - last)))


def match_pattern(pattern: CompiledPattern, graph: DepGraph) -> list[PatternMatch]:
    out = []
    for m in pattern.match(graph):
        out.append(
            PatternMatch(m.pattern_id, m.bindings, attribute_conjunction(graph, m))
        )
    return out


def detect(graph: DepGraph, patterns: Iterable[CompiledPattern]) -> list[PatternMatch]:
    """Union of pattern matches over graphs containing a coordinator.

    Deduplicated by (pattern id, bindings); independent of pattern
    iteration order.
    """
    if not _coordinator_indices(graph):
        return []
    seen = set()
    out: list[PatternMatch] = []
    for pat in sorted(patterns, key=lambda p: p.id):
        for m in match_pattern(pat, graph):
            key = (m.pattern_id, m.bindings)
            if key not in seen:
                seen.add(key)
                out.append(m)
    out.sort(key=lambda m: (m.pattern_id, tuple(i for _, i in m.bindings)))
    return out


# --- catalog text format ---------------------------------------------------

def dump_catalog(specs: Sequence[PatternSpec]) -> str:
    lines: list[str] = []
    for s in specs:
        lines.append(f"pattern {s.id}")
        lines.append(f"family {s.family}")
        for n in s.nodes:
            lines.append(f"node {n.var} {n.constraint}")
        for e in s.edges:
            lines.append(f"edge {e.head} {e.dep} {e.labels}")
        for a, b in s.order:
            lines.append(f"order {a} {b}")
        if s.description:
            lines.append(f"example {s.description}")
        lines.append("end")
        lines.append("")
    return "\n".join(lines)


def load_catalog(text: str) -> list[PatternSpec]:
    specs: list[PatternSpec] = []
    cur: Optional[dict] = None
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        word, _, rest = line.partition(" ")
        if word == "pattern":
            if cur is not None:
                raise PatternError(f"line {line_no}: nested pattern block")
            cur = {"id": rest.strip(), "family": "", "nodes": [], "edges": [], "order": [], "desc": ""}
        elif cur is None:
            raise PatternError(f"line {line_no}: {word!r} outside a pattern block")
        elif word == "family":
            cur["family"] = rest.strip()
        elif word == "node":
            parts = rest.split()
            if len(parts) != 2:
                raise PatternError(f"line {line_no}: node wants 'var constraint'")
            cur["nodes"].append(NodeSpec(parts[0], parts[1]))
        elif word == "edge":
            parts = rest.split()
            if len(parts) != 3:
                raise PatternError(f"line {line_no}: edge wants 'head dep labels'")
            cur["edges"].append(EdgeSpec(parts[0], parts[1], parts[2]))
        elif word == "order":
            parts = rest.split()
            if len(parts) != 2:
                raise PatternError(f"line {line_no}: order wants 'before after'")
            cur["order"].append((parts[0], parts[1]))
        elif word == "example":
            cur["desc"] = rest.strip()
        elif word == "end":
            specs.append(
                PatternSpec(
                    id=cur["id"],
                    family=cur["family"],
                    nodes=tuple(cur["nodes"]),
                    edges=tuple(cur["edges"]),
                    order=tuple(cur["order"]),
                    description=cur["desc"],
                )
            )
            cur = None
        else:
            raise PatternError(f"line {line_no}: unknown directive {word!r}")
    if cur is not None:
        raise PatternError("unterminated pattern block")
    return specs


def builtin_catalog() -> list[PatternSpec]:
    text = resources.files("conjr.data").joinpath("builtin_patterns.txt").read_text("utf-8")
    return load_catalog(text)


def compile_catalog(
    specs: Optional[Sequence[PatternSpec]] = None,
    profile: LabelProfile = DEFAULT_PROFILE,
) -> list[CompiledPattern]:
    if specs is None:
        specs = builtin_catalog()
    return [compile_pattern(s, profile) for s in specs]


# --- corpus mining ---------------------------------------------------------

@dataclass
class MiningCounters:
    sentences: int = 0
    matched: int = 0
    skipped: int = 0
    records: int = 0
    audited: int = 0


def iter_conllu_blocks(lines: Iterable[str]) -> Iterator[str]:
    block: list[str] = []
    for line in lines:
        if line.strip():
            block.append(line.rstrip("\n"))
        elif block:
            yield "\n".join(block)
            block = []
    if block:
        yield "\n".join(block)


def candidate_records(graph: DepGraph, matches: Sequence[PatternMatch], record_id: str) -> list[dict]:
    """One JSON-ready record per distinct conjunction index in the matches."""
    from .depgraph import serialize_conllu

    by_conj: dict[int, list[PatternMatch]] = {}
    for m in matches:
        if m.conjunction is not None:
            by_conj.setdefault(m.conjunction.index, []).append(m)
    text = graph.text if graph.text is not None else " ".join(t.form for t in graph.tokens)
    records = []
    for conj_idx in sorted(by_conj):
        ms = by_conj[conj_idx]
        conj = ms[0].conjunction
        records.append(
            {
                "id": f"{record_id}-c{conj_idx}" if len(by_conj) > 1 else record_id,
                "text": text,
                "conllu": serialize_conllu([graph]),
                "conjunction": {
                    "form": conj.form,
                    "index": conj.index,
                    "char_span": list(conj.char_span),
                },
                "matched_patterns": sorted({m.pattern_id for m in ms}),
            }
        )
    return records


def mine_corpus(
    lines: Iterable[str],
    patterns: Sequence[CompiledPattern],
    sample_rate: float = 0.0,
    seed: int = 0,
    counters: Optional[MiningCounters] = None,
    audit_sink=None,
) -> Iterator[dict]:
    """Harvest candidate omission sentences from a CoNLL-U stream.

    Yields candidate records for every sentence with at least one match.
    A random sample (``sample_rate``) is additionally written to
    ``audit_sink`` for manual precision auditing. Malformed blocks are
    counted and skipped, never fatal.
    """
    if counters is None:
        counters = MiningCounters()
    rng = random.Random(seed)
    for n, block in enumerate(iter_conllu_blocks(lines)):
        try:
            graphs = parse_conllu(block)
        except (ConlluError, GraphError):
            counters.skipped += 1
            continue
        for graph in graphs:
            counters.sentences += 1
            matches = detect(graph, patterns)
            if not matches:
                continue
            counters.matched += 1
            rid = graph.id if graph.id else f"s{counters.sentences}"
            for record in candidate_records(graph, matches, rid):
                counters.records += 1
                if audit_sink is not None and rng.random() < sample_rate:
                    counters.audited += 1
                    audit_sink(record)
                yield record
