"""Conjunct-resolution toolkit: suspicious-structure mining, rewrite
annotation machinery, and the verb-nucleus evaluation metric."""

from .depgraph import (
    ConlluError,
    DEFAULT_PROFILE,
    DepGraph,
    GraphError,
    LabelProfile,
    PROFILES,
    Token,
    UD_PROFILE,
    children,
    parse_conllu,
    serialize_conllu,
)
from .nucleus import NucleusBag, Triplet, VerbNucleus, extract_nuclei, nucleus_of_verb
from .metric import (
    EvalReport,
    InstanceScore,
    calibration,
    evaluate_corpus,
    exact_match,
    score_instance,
)
from .patterns import (
    CompiledPattern,
    PatternMatch,
    PatternSpec,
    builtin_catalog,
    compile_catalog,
    compile_pattern,
    detect,
    match_pattern,
    mine_corpus,
)

__version__ = "0.1.0"
