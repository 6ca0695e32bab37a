import itertools
from collections import Counter
from pathlib import Path

import pytest
from hypothesis import strategies as st

from conjr.depgraph import DEFAULT_PROFILE, DepGraph, Token, parse_conllu

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "conjr" / "data" / "fixtures"
MINI = FIXTURES.parent / "mini.jsonl"

FORMS = ["the", "dog", "runs", "wine", "and", "or", "big", "cat", "sees", "red", "box", "on"]
UPOS_POOL = ["VERB", "AUX", "NOUN", "PROPN", "ADJ", "NUM", "ADP", "ADV", "PART", "CCONJ", "PRON", "DET", "PUNCT"]
XPOS_POOL = ["VB", "VBD", "VBZ", "VBN", "NN", "NNP", "JJ", "IN", "RB", "CC", "_"]
DEPREL_POOL = [
    "nsubj", "nsubjpass", "dobj", "pobj", "attr", "prep", "agent", "pcomp",
    "conj", "cc", "advmod", "amod", "neg", "xcomp", "ccomp", "compound", "aux", "det",
]


def load_fixture(name: str) -> DepGraph:
    return parse_conllu((FIXTURES / f"{name}.conllu").read_text(encoding="utf-8"))[0]


@pytest.fixture(scope="session")
def fixture_graphs():
    return {p.stem: parse_conllu(p.read_text(encoding="utf-8"))[0] for p in FIXTURES.glob("*.conllu")}


@st.composite
def random_trees(draw, max_tokens=12):
    """Random labeled dependency trees: token i>1 attaches to an earlier
    token, so the result is a single-rooted acyclic tree by construction."""
    n = draw(st.integers(min_value=1, max_value=max_tokens))
    tokens = []
    for i in range(1, n + 1):
        form = draw(st.sampled_from(FORMS))
        upos = draw(st.sampled_from(UPOS_POOL))
        tokens.append(
            Token(
                index=i,
                form=form,
                lemma=form,
                upos=upos,
                xpos="." if upos == "PUNCT" else draw(st.sampled_from(XPOS_POOL)),
                head=0 if i == 1 else draw(st.integers(min_value=1, max_value=i - 1)),
                deprel="root" if i == 1 else draw(st.sampled_from(DEPREL_POOL)),
            )
        )
    return DepGraph(tuple(tokens), text=" ".join(t.form for t in tokens), id="random")


# --- independent oracles ----------------------------------------------------

def naive_is_verb(token, profile=DEFAULT_PROFILE):
    if token.xpos not in ("", "_"):
        return token.xpos in profile.verb_xpos
    return token.upos in profile.verb_upos


def naive_nucleus_triplets(graph, verb_index, profile=DEFAULT_PROFILE):
    """Re-derivation of the triplet bag straight from the edge list."""

    def kids(idx, labels=None):
        return [
            t
            for t in graph.tokens
            if t.head == idx and t.upos != "PUNCT" and (labels is None or t.deprel in labels)
        ]

    verb = graph.tokens[verb_index - 1]
    v = verb.form.casefold()
    bag = Counter()
    for k in kids(verb_index):
        w = k.form.casefold()
        if k.deprel in profile.subjects | profile.negation:
            bag[(v, k.deprel, w)] += 1
        elif k.deprel in profile.objects:
            bag[(v, k.deprel, w)] += 1
            for p in kids(k.index, profile.prepositions):
                bag[(w, p.deprel, p.form.casefold())] += 1
                for m in kids(p.index, profile.prep_modifiers):
                    bag[(p.form.casefold(), m.deprel, m.form.casefold())] += 1
        elif k.deprel in profile.prepositions:
            bag[(v, k.deprel, w)] += 1
            for m in kids(k.index, profile.prep_modifiers):
                bag[(w, m.deprel, m.form.casefold())] += 1
    return bag


def naive_nuclei(graph, profile=DEFAULT_PROFILE):
    """List of (verb form, triplet Counter) per verb token, surface order."""
    return [
        (t.form.casefold(), naive_nucleus_triplets(graph, t.index, profile))
        for t in graph.tokens
        if naive_is_verb(t, profile)
    ]


def _node_ok(constraint, upos):
    if constraint == "any":
        return True
    if constraint == "VERB-CLASS":
        return upos in {"VERB", "AUX"}
    if constraint == "NONVERB-CLASS":
        return upos in {"NOUN", "PROPN", "ADJ", "NUM"}
    return upos in constraint.split("|")


def _labels_ok(labels, deprel, profile=DEFAULT_PROFILE):
    if labels == "any":
        return True
    if labels == "@obj":
        return deprel in profile.objects
    if labels == "@subj":
        return deprel in profile.subjects
    if labels == "@prep":
        return deprel in profile.prepositions
    return deprel in labels.split("|")


def brute_force_matches(spec, graph, profile=DEFAULT_PROFILE):
    """All valid bindings by exhaustive enumeration, as a set of
    frozensets of (var, index) pairs."""
    indices = [t.index for t in graph.tokens if t.upos != "PUNCT"]
    vars_ = [n.var for n in spec.nodes]
    constraints = {n.var: n.constraint for n in spec.nodes}
    out = set()
    for combo in itertools.permutations(indices, len(vars_)):
        b = dict(zip(vars_, combo))
        if not all(_node_ok(constraints[v], graph.tokens[i - 1].upos) for v, i in b.items()):
            continue
        ok = True
        for e in spec.edges:
            dep_tok = graph.tokens[b[e.dep] - 1]
            if dep_tok.head != b[e.head] or not _labels_ok(e.labels, dep_tok.deprel, profile):
                ok = False
                break
        if ok and all(b[a] < b[c] for a, c in spec.order):
            out.add(frozenset(b.items()))
    return out
