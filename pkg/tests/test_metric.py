import math

import pytest

from conjr.dataset import load
from conjr.metric import (
    MetricError,
    calibration,
    evaluate_corpus,
    evaluate_scored,
    exact_match,
    normalize_sentence,
    score_instance,
)

from conftest import MINI, load_fixture


@pytest.fixture(scope="module")
def fx():
    return {n: load_fixture(n) for n in ("F1", "F2", "F3")}


def test_perfect_rewrite(fx):
    s = score_instance(fx["F3"], [fx["F1"], fx["F2"]], [fx["F1"], fx["F2"]])
    assert (s.precision, s.recall) == (1.0, 1.0)
    assert s.f1 == 1.0
    assert not s.skip_rule_applied


def test_echo_hypothesis_scores_zero(fx):
    s = score_instance(fx["F3"], [fx["F1"], fx["F2"]], [fx["F3"]])
    assert (s.precision, s.recall) == (0.0, 0.0)
    assert s.f1 == 0.0


def test_skip_rule_single_gold_single_hyp(fx):
    s = score_instance(fx["F3"], [fx["F3"]], [fx["F3"]])
    assert (s.precision, s.recall) == (1.0, 1.0)
    assert s.skip_rule_applied


def test_skip_rule_needs_both_sides_singleton(fx):
    s = score_instance(fx["F3"], [fx["F3"]], [fx["F1"], fx["F2"]])
    assert not s.skip_rule_applied


def test_partial_credit(fx):
    # hyp brings F2's nucleus twice; the input nucleus is subtracted
    # once from each side, so predicted = 2, gold = 1, matched = 1
    s = score_instance(fx["F3"], [fx["F1"], fx["F2"]], [fx["F2"], fx["F2"]])
    assert s.precision == 0.5
    assert s.recall == 1.0


def test_input_nucleus_subtracted_as_bag(fx):
    # both hyp rewrites carry the input's nucleus; only one copy is
    # removed, so one stray copy stays on the hypothesis side
    s = score_instance(fx["F3"], [fx["F1"], fx["F2"]], [fx["F1"], fx["F3"]])
    assert s.predicted == 1
    assert s.gold == 1
    assert (s.precision, s.recall) == (0.0, 0.0)


def test_normalize_sentence():
    assert normalize_sentence("Josh  likes wine.") == "josh likes wine"
    assert normalize_sentence('He said, "Go!"') == "he said go"
    assert normalize_sentence("") == ""


def test_exact_match_ignores_punctuation_and_case():
    assert exact_match(["Josh likes wine."], ["josh likes WINE"])
    assert not exact_match(["Josh likes wine."], ["Josh likes beer."])


def test_exact_match_is_order_sensitive():
    gold = ["Josh likes wine.", "Jane likes water."]
    assert exact_match(gold, ["Josh likes wine.", "Jane likes water."])
    assert not exact_match(gold, ["Jane likes water.", "Josh likes wine."])


def test_exact_match_length_mismatch():
    assert not exact_match(["a."], ["a.", "b."])


def test_calibration_modes():
    assert calibration("Josh likes wine and Jane water.", "one") == [
        "Josh likes wine and Jane water."
    ]
    out = calibration("Josh likes wine and Jane water.", "k", gold_count=3)
    assert out == ["Josh likes wine and Jane water."] * 3
    with pytest.raises(MetricError):
        calibration("x", "k")
    with pytest.raises(MetricError):
        calibration("x", "nope")


def test_evaluate_corpus_gold_as_prediction_is_perfect():
    instances, _ = load(MINI)
    preds = {}
    for inst in instances:
        if inst.rewritable:
            preds[inst.id] = {
                "sentences": [r.text for r in inst.rewrites],
                "graphs": inst.rewrite_graphs(),
            }
        else:
            preds[inst.id] = {"sentences": [inst.text], "graphs": [inst.graph()]}
    for mode in ("macro", "micro"):
        rep = evaluate_corpus(instances, preds, mode=mode)
        assert rep.precision == rep.recall == rep.f1 == 1.0
        assert rep.exact_match_rate == 1.0
        assert rep.skipped == 0
        assert set(rep.per_conjunction) == {"and", "or", "but"}


def test_evaluate_corpus_echo_baseline():
    instances, _ = load(MINI)
    preds = {
        inst.id: {"sentences": [inst.text], "graphs": [inst.graph()]}
        for inst in instances
    }
    rep = evaluate_corpus(instances, preds, mode="macro")
    # echo is perfect exactly on the non-rewritable instances (skip rule)
    q = sum(1 for i in instances if not i.rewritable) / len(instances)
    assert math.isclose(rep.f1, q, abs_tol=1e-9)
    assert math.isclose(rep.exact_match_rate, q, abs_tol=1e-9)


def test_evaluate_corpus_missing_prediction_errors():
    instances, _ = load(MINI)
    with pytest.raises(MetricError):
        evaluate_corpus(instances, {})


def test_evaluate_scored_empty():
    rep = evaluate_scored([])
    assert rep.precision == rep.recall == 0.0
    assert rep.instances == 0


def test_report_serialization():
    instances, _ = load(MINI)
    preds = {
        inst.id: {"sentences": [inst.text], "graphs": [inst.graph()]}
        for inst in instances
    }
    rep = evaluate_corpus(instances, preds, per_instance=True)
    d = rep.to_dict()
    assert len(d["per_instance"]) == len(instances)
    table = rep.table()
    for label in ("Recall", "Precision", "F1", "Exact"):
        assert label in table
