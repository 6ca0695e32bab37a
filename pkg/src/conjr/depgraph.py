"""Dependency-parsed sentences and CoNLL-U I/O.

Everything downstream (pattern matching, nucleus extraction, the metric)
consumes the immutable graphs defined here. Parses always enter the
toolkit as CoNLL-U text produced by an external parser.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class ConlluError(Exception):
    """Malformed CoNLL-U input (wrong column count, bad integer fields)."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GraphError(Exception):
    """Structurally invalid dependency graph (bad heads, cycles, no root)."""

    def __init__(self, message: str, sent_id: Optional[str] = None):
        if sent_id:
            message = f"sentence {sent_id}: {message}"
        super().__init__(message)
        self.sent_id = sent_id


@dataclass(frozen=True)
class Token:
    index: int  # 1-based position
    form: str
    lemma: str
    upos: str
    xpos: str
    head: int  # 0 = root
    deprel: str

    def __post_init__(self):
        if self.index < 1:
            raise GraphError(f"token index must be >= 1, got {self.index}")
        if self.head < 0:
            raise GraphError(f"head must be >= 0, got {self.head}")
        if self.head == self.index:
            raise GraphError(f"token {self.index} is its own head")
        if not self.form:
            raise GraphError(f"token {self.index} has an empty form")

    @property
    def is_punct(self) -> bool:
        return self.upos == "PUNCT"


@dataclass(frozen=True)
class DepGraph:
    """One parsed sentence as a rooted labeled dependency tree."""

    tokens: tuple[Token, ...]
    text: Optional[str] = None
    id: Optional[str] = None
    _children: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        n = len(self.tokens)
        roots = [t for t in self.tokens if t.head == 0]
        if len(roots) != 1:
            raise GraphError(f"expected exactly one root, found {len(roots)}", self.id)
        for t in self.tokens:
            if t.head > n:
                raise GraphError(
                    f"token {t.index} has head {t.head} but sentence has {n} tokens",
                    self.id,
                )
        # cycle check: walk from every token to the root
        for t in self.tokens:
            seen = set()
            cur = t.index
            while cur != 0:
                if cur in seen:
                    raise GraphError(f"head cycle through token {cur}", self.id)
                seen.add(cur)
                cur = self.tokens[cur - 1].head
        kids: dict[int, list[Token]] = {}
        for t in self.tokens:
            kids.setdefault(t.head, []).append(t)
        object.__setattr__(self, "_children", kids)

    def __len__(self) -> int:
        return len(self.tokens)

    def token(self, index: int) -> Token:
        if not 1 <= index <= len(self.tokens):
            raise GraphError(f"token index {index} out of range", self.id)
        return self.tokens[index - 1]

    @property
    def root(self) -> Token:
        return self._children[0][0]

    def children(self, node: int, labels: Optional[Iterable[str]] = None) -> list[Token]:
        """Dependents of ``node`` in surface order, optionally label-filtered.

        An empty ``labels`` collection means no filter.
        """
        self.token(node)
        kids = self._children.get(node, [])
        if labels:
            wanted = set(labels)
            kids = [k for k in kids if k.deprel in wanted]
        return list(kids)


@dataclass(frozen=True)
class LabelProfile:
    """Deprel role sets and verb tag sets used by nuclei and patterns."""

    name: str
    subjects: frozenset[str]
    objects: frozenset[str]
    prepositions: frozenset[str]
    prep_modifiers: frozenset[str]
    negation: frozenset[str]
    verb_xpos: frozenset[str]
    verb_upos: frozenset[str]
    experimental: bool = False

    def __post_init__(self):
        # verb-attached role sets must not overlap; prep_modifiers sits one
        # level down (under a preposition) and may legitimately share labels
        # with the object set (pobj appears in both).
        roles = [self.subjects, self.objects, self.prepositions, self.negation]
        for i, a in enumerate(roles):
            for b in roles[i + 1 :]:
                if a & b:
                    raise ValueError(f"overlapping role sets in profile {self.name}: {a & b}")

    def is_verb(self, token: Token) -> bool:
        if token.xpos and token.xpos != "_":
            return token.xpos in self.verb_xpos
        return token.upos in self.verb_upos


DEFAULT_PROFILE = LabelProfile(
    name="default",
    subjects=frozenset({"nsubj", "nsubjpass", "expl"}),
    objects=frozenset({"dobj", "obj", "pobj", "iobj", "attr", "oprd"}),
    prepositions=frozenset({"prep", "agent"}),
    prep_modifiers=frozenset({"pobj", "pcomp"}),
    negation=frozenset({"neg"}),
    verb_xpos=frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}),
    verb_upos=frozenset({"VERB", "AUX"}),
)

# Approximate Universal Dependencies mapping. UD has no prepositional phrase
# heads, so obl/nmod stand in for prep and case for its internal structure;
# treat results with caution.
UD_PROFILE = LabelProfile(
    name="ud-experimental",
    subjects=frozenset({"nsubj", "nsubj:pass", "csubj", "expl"}),
    objects=frozenset({"obj", "iobj", "ccomp"}),
    prepositions=frozenset({"obl", "obl:agent", "nmod"}),
    prep_modifiers=frozenset({"case"}),
    negation=frozenset({"advmod:neg"}),
    verb_xpos=frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}),
    verb_upos=frozenset({"VERB", "AUX"}),
    experimental=True,
)

PROFILES = {p.name: p for p in (DEFAULT_PROFILE, UD_PROFILE)}


def children(graph: DepGraph, node: int, labels: Optional[Iterable[str]] = None) -> list[Token]:
    return graph.children(node, labels)


def parse_conllu(text: str) -> list[DepGraph]:
    """Parse a CoNLL-U document into one DepGraph per sentence block.

    Multi-word token ranges and empty nodes (decimal IDs) are skipped;
    ``# text =`` comments populate DepGraph.text, ``# sent_id =`` the id.
    """
    graphs: list[DepGraph] = []
    tokens: list[Token] = []
    sent_text: Optional[str] = None
    sent_id: Optional[str] = None

    def flush(line_no: int):
        nonlocal tokens, sent_text, sent_id
        if tokens:
            graphs.append(DepGraph(tuple(tokens), text=sent_text, id=sent_id))
        tokens = []
        sent_text = None
        sent_id = None

    for line_no, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        if not line.strip():
            flush(line_no)
            continue
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment.startswith("text ="):
                sent_text = comment[len("text =") :].strip()
            elif comment.startswith("sent_id ="):
                sent_id = comment[len("sent_id =") :].strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluError(f"expected 10 columns, got {len(cols)}", line_no)
        tid = cols[0]
        if "-" in tid or "." in tid:  # multi-word range / empty node
            continue
        try:
            index = int(tid)
        except ValueError:
            raise ConlluError(f"non-integer token id {tid!r}", line_no) from None
        try:
            head = int(cols[6])
        except ValueError:
            raise ConlluError(f"non-integer head {cols[6]!r}", line_no) from None
        tokens.append(
            Token(
                index=index,
                form=cols[1],
                lemma=cols[2],
                upos=cols[3],
                xpos=cols[4],
                head=head,
                deprel=cols[7],
            )
        )
    flush(0)
    return graphs


def serialize_conllu(graphs: Sequence[DepGraph]) -> str:
    """Serialize graphs to CoNLL-U; round-trips with parse_conllu."""
    out: list[str] = []
    for g in graphs:
        if g.id is not None:
            out.append(f"# sent_id = {g.id}")
        if g.text is not None:
            out.append(f"# text = {g.text}")
        for t in g.tokens:
            out.append(
                "\t".join(
                    [
                        str(t.index),
                        t.form,
                        t.lemma,
                        t.upos,
                        t.xpos,
                        "_",
                        str(t.head),
                        t.deprel,
                        "_",
                        "_",
                    ]
                )
            )
        out.append("")
    return "\n".join(out)
