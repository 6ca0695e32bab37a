"""Verb nuclei: the unit of comparison for the rewrite metric.

A nucleus is a verb plus a bag of (w1, dep, w2) triplets drawn from its
subject, object, lexicalized prepositional modifiers (including those of
the object), and negation dependents. Words are case-folded surface
forms; two nuclei are equal iff their triplet bags are equal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .depgraph import DEFAULT_PROFILE, DepGraph, GraphError, LabelProfile, Token


class Triplet(NamedTuple):
    w1: str
    dep: str
    w2: str


# canonical bag key: sorted (triplet, count) pairs
NucleusKey = tuple


@dataclass(frozen=True)
class VerbNucleus:
    verb: str
    triplets: tuple[Triplet, ...]  # bag, canonical order

    @property
    def key(self) -> NucleusKey:
        return tuple(sorted(Counter(self.triplets).items()))

    def __eq__(self, other):
        if not isinstance(other, VerbNucleus):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)


class NucleusBag:
    """Multiset of verb nuclei, keyed by triplet-bag equality."""

    def __init__(self, nuclei: Iterable[VerbNucleus] = ()):
        self._counts: Counter = Counter()
        self._examples: dict[NucleusKey, VerbNucleus] = {}
        for n in nuclei:
            self.add(n)

    def add(self, nucleus: VerbNucleus, count: int = 1):
        self._counts[nucleus.key] += count
        self._examples.setdefault(nucleus.key, nucleus)

    def count(self, nucleus: VerbNucleus) -> int:
        return self._counts[nucleus.key]

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __iter__(self):
        for key, c in sorted(self._counts.items()):
            for _ in range(c):
                yield self._examples[key]

    def __eq__(self, other):
        if not isinstance(other, NucleusBag):
            return NotImplemented
        return self._counts == other._counts

    def _combine(self, other: "NucleusBag", counts: Counter) -> "NucleusBag":
        out = NucleusBag()
        out._counts = Counter({k: c for k, c in counts.items() if c > 0})
        out._examples = {**other._examples, **self._examples}
        return out

    def union(self, other: "NucleusBag") -> "NucleusBag":
        return self._combine(other, self._counts + other._counts)

    def difference(self, other: "NucleusBag") -> "NucleusBag":
        c = Counter(self._counts)
        c.subtract(other._counts)
        return self._combine(other, c)

    def intersection(self, other: "NucleusBag") -> "NucleusBag":
        keys = set(self._counts) & set(other._counts)
        return self._combine(
            other, Counter({k: min(self._counts[k], other._counts[k]) for k in keys})
        )

    def verbs(self) -> list[str]:
        return [n.verb for n in self]


def is_nucleus_verb(token: Token, profile: LabelProfile = DEFAULT_PROFILE) -> bool:
    return profile.is_verb(token)


def _prep_triplets(graph: DepGraph, prep: Token, profile: LabelProfile) -> list[Triplet]:
    out = [
        Triplet(prep.form.casefold(), kid.deprel, kid.form.casefold())
        for kid in graph.children(prep.index, profile.prep_modifiers)
        if not kid.is_punct
    ]
    return out


def nucleus_of_verb(
    graph: DepGraph, verb: int, profile: LabelProfile = DEFAULT_PROFILE
) -> VerbNucleus:
    """Extract the nucleus rooted at ``verb``.

    Raises GraphError when the token fails the verb test. A verb with no
    qualifying dependents yields an empty triplet bag.
    """
    tok = graph.token(verb)
    if not profile.is_verb(tok):
        raise GraphError(f"token {verb} ({tok.form!r}) is not a nucleus verb", graph.id)
    vform = tok.form.casefold()
    triplets: list[Triplet] = []
    for kid in graph.children(verb):
        if kid.is_punct:
            continue
        rel = kid.deprel
        kform = kid.form.casefold()
        if rel in profile.subjects or rel in profile.negation:
            triplets.append(Triplet(vform, rel, kform))
        elif rel in profile.objects:
            triplets.append(Triplet(vform, rel, kform))
            # prepositional modifiers of the object guard against
            # pp-attachment errors of the parser
            for prep in graph.children(kid.index, profile.prepositions):
                if prep.is_punct:
                    continue
                triplets.append(Triplet(kform, prep.deprel, prep.form.casefold()))
                triplets.extend(_prep_triplets(graph, prep, profile))
        elif rel in profile.prepositions:
            triplets.append(Triplet(vform, rel, kform))
            triplets.extend(_prep_triplets(graph, kid, profile))
    return VerbNucleus(verb=vform, triplets=tuple(sorted(triplets)))


def nuclei_of_graph(graph: DepGraph, profile: LabelProfile = DEFAULT_PROFILE) -> list[VerbNucleus]:
    return [
        nucleus_of_verb(graph, t.index, profile)
        for t in graph.tokens
        if profile.is_verb(t)
    ]


def extract_nuclei(
    graphs: Sequence[DepGraph], profile: LabelProfile = DEFAULT_PROFILE
) -> NucleusBag:
    bag = NucleusBag()
    for g in graphs:
        for n in nuclei_of_graph(g, profile):
            bag.add(n)
    return bag


def omitted_argument_histogram(
    instances: Iterable[tuple[DepGraph, Sequence[DepGraph]]],
    profile: LabelProfile = DEFAULT_PROFILE,
) -> dict:
    """Distribution over the number of omitted arguments per gold nucleus.

    For each gold nucleus missing from the input's bag, count its
    triplets whose (dep, w2) pair never occurs under the same verb form
    in any input nucleus. Instances are (input graph, gold graphs) pairs;
    pairs with a missing side are skipped and counted.
    """
    hist: Counter = Counter()
    skipped = 0
    for input_graph, gold_graphs in instances:
        if input_graph is None or not gold_graphs:
            skipped += 1
            continue
        input_nuclei = nuclei_of_graph(input_graph, profile)
        input_bag = NucleusBag(input_nuclei)
        by_verb: dict[str, set] = {}
        for n in input_nuclei:
            by_verb.setdefault(n.verb, set()).update((t.dep, t.w2) for t in n.triplets)
        for g in gold_graphs:
            for n in nuclei_of_graph(g, profile):
                if input_bag.count(n) > 0:
                    continue
                seen = by_verb.get(n.verb, set())
                omitted = sum(1 for t in n.triplets if (t.dep, t.w2) not in seen)
                hist[omitted] += 1
    return {"histogram": dict(sorted(hist.items())), "skipped": skipped}
