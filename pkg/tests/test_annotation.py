import itertools

import pytest

from conjr.annotation import (
    IAAReport,
    RewriteSet,
    ValidationReport,
    annotator_ranking,
    consolidate,
    iaa,
    jaccard,
    stem,
    tokenize,
    validate,
)
from conjr.dataset import load

from conftest import MINI, load_fixture

TEXT = "Josh likes wine and Jane water."
CONJ = "and"
GOOD = ["Josh likes wine.", "Jane likes water."]


def sub(sentences=None, rewritable=True, annotator="a1", reason=None, instance="mini-001"):
    return RewriteSet(
        instance_id=instance,
        annotator_id=annotator,
        rewritable=rewritable,
        sentences=sentences or [],
        not_rewritable_reason=reason,
    )


def codes(report):
    return [v.code for v in report.violations]


def test_clean_submission_passes():
    report = validate(TEXT, CONJ, sub(GOOD))
    assert report.passed
    assert report.to_dict()["verdict"] == "pass"


def test_duplicate_sentence():
    report = validate(TEXT, CONJ, sub(["Josh likes wine.", "Josh likes wine."]))
    assert codes(report) == ["DUPLICATE_SENTENCE"]


def test_conjunction_present():
    report = validate(TEXT, CONJ, sub(["Josh likes wine and water.", "Jane likes water."]))
    assert codes(report) == ["CONJUNCTION_PRESENT"]
    assert report.violations[0].location == 0


def test_new_content_word():
    report = validate(TEXT, CONJ, sub(["Josh likes wine.", "Jane drinks water."]))
    assert codes(report) == ["NEW_CONTENT_WORD"]
    assert "drinks" in report.violations[0].detail


def test_inflection_passes_via_stemmer():
    # input has "likes"; the rewrite's "like" reduces to the same stem
    report = validate(TEXT, CONJ, sub(["Josh like wine.", "Jane like water."]))
    assert report.passed


def test_function_words_allowed():
    report = validate(TEXT, CONJ, sub(["Josh likes the wine.", "Jane likes some water."]))
    assert report.passed


def test_too_many_rewrites():
    report = validate(TEXT, CONJ, sub(["Josh likes wine."] * 11))
    assert "TOO_MANY_REWRITES" in codes(report)


def test_empty_set():
    report = validate(TEXT, CONJ, sub([]))
    assert codes(report) == ["EMPTY_SET"]


def test_non_rewritable_passes_vacuously():
    report = validate(TEXT, CONJ, sub(rewritable=False, reason="joint predicate"))
    assert report.passed


def test_content_check_prefers_parse_lemmas():
    g = load_fixture("F3")
    # parse lemma of "likes" is "like", so the inflected form passes
    report = validate(TEXT, CONJ, sub(["Josh like wine.", "Jane like water."]), input_graph=g)
    assert report.passed


def test_mini_dataset_golds_pass():
    instances, _ = load(MINI)
    for inst in instances:
        if not inst.rewritable:
            continue
        s = sub([r.text for r in inst.rewrites], instance=inst.id)
        report = validate(inst.text, inst.conjunction.form, s, input_graph=inst.graph())
        assert report.passed, (inst.id, codes(report))


def test_tokenize_and_stem():
    assert tokenize("Josh likes wine.") == ["Josh", "likes", "wine"]
    assert stem("likes") == stem("like")
    assert stem("carried") == stem("carries")
    assert stem("running") != "running"


# --- consolidation ----------------------------------------------------------

def ranking(*annotators, scores=None):
    return {a: (scores or {}).get(a, 0.0) for a in annotators}


def test_consolidation_majority():
    subs = [
        sub(GOOD, annotator="a2"),
        sub(GOOD, annotator="a1"),
        sub(["Josh likes wine.", "Jane likes wine."], annotator="a3"),
    ]
    result = consolidate(subs, ranking("a1", "a2", "a3"))
    assert result.method == "majority"
    assert result.gold.annotator_id == "a1"  # lowest id in the winning class


def test_consolidation_fallback_to_ranked():
    subs = [
        sub(GOOD, annotator="a1"),
        sub(["Josh likes wine.", "Jane likes wine."], annotator="a2"),
        sub(["Josh likes wine.", "Jane drinks water."], annotator="a3"),
    ]
    result = consolidate(subs, ranking("a1", "a2", "a3", scores={"a2": 0.9}))
    assert result.method == "fallback"
    assert result.gold.annotator_id == "a2"


def test_consolidation_single_submission():
    result = consolidate([sub(GOOD, annotator="a9")], ranking("a9"))
    assert result.method == "majority"
    assert result.gold.annotator_id == "a9"


def test_consolidation_permutation_invariant():
    subs = [
        sub(GOOD, annotator="a1"),
        sub(GOOD, annotator="a2"),
        sub(["Josh likes wine.", "Jane likes wine."], annotator="a3"),
    ]
    rk = ranking("a1", "a2", "a3")
    golds = {
        consolidate(list(perm), rk).gold.annotator_id
        for perm in itertools.permutations(subs)
    }
    assert golds == {"a1"}


def test_consolidation_normalizes_before_comparing():
    subs = [
        sub(["Josh likes wine.", "Jane likes water."], annotator="a1"),
        sub(["josh likes wine", "jane likes water"], annotator="a2"),
        sub(["Josh likes wine!", "Jane likes water!"], annotator="a3"),
    ]
    result = consolidate(subs, ranking("a1", "a2", "a3"))
    assert result.method == "majority"
    assert result.gold.annotator_id == "a1"


def test_consolidation_requires_covering_ranking():
    with pytest.raises(ValueError):
        consolidate([sub(GOOD, annotator="aX")], {})


def test_annotator_ranking():
    golds = {"mini-001": sub(GOOD, annotator="gold")}
    subs = [
        sub(GOOD, annotator="a1"),
        sub(["Josh likes wine.", "Jane likes wine."], annotator="a2"),
    ]
    rk = annotator_ranking(subs, golds)
    assert rk == {"a1": 1.0, "a2": 0.0}


# --- agreement --------------------------------------------------------------

def test_jaccard():
    assert jaccard(set(), set()) == 1.0
    assert jaccard({"a"}, set()) == 0.0
    assert jaccard({"a", "b"}, {"b", "c"}) == pytest.approx(1 / 3)


def test_iaa_basic():
    groups = [
        [sub(GOOD, annotator="a1"), sub(GOOD, annotator="a2")],
        [
            sub(GOOD, annotator="a1"),
            sub(["Josh likes wine.", "Jane likes wine.", "Jo likes it."], annotator="a2"),
        ],
        [sub(GOOD, annotator="a1")],  # singleton, excluded
    ]
    report = iaa(groups)
    assert isinstance(report, IAAReport)
    assert report.groups == 2
    assert report.excluded == 1
    assert report.rewrite_agreement == 0.5
    assert report.exact_match == 0.5
    assert 0.0 < report.avg_jaccard <= 1.0


def test_rewrite_set_round_trip():
    s = sub(GOOD)
    assert RewriteSet.from_dict(s.to_dict()) == s
    nr = sub(rewritable=False, reason="joint")
    assert RewriteSet.from_dict(nr.to_dict()) == nr
