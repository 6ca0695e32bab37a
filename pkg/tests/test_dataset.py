import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjr.dataset import (
    ConjunctionMark,
    DatasetError,
    Instance,
    Rewrite,
    load,
    save,
    split,
    stats,
)

from conftest import MINI


def make_instance(i, conj="and", rewritable=True):
    text = f"A{i} likes x and B{i} y."
    rewrites = (
        [Rewrite(text=f"A{i} likes x.", conllu=None), Rewrite(text=f"B{i} likes y.", conllu=None)]
        if rewritable
        else []
    )
    return Instance(
        id=f"t-{i:03d}",
        source="test",
        text=text,
        conjunction=ConjunctionMark(conj, 4, (10, 13)),
        conllu=None,
        rewritable=rewritable,
        rewrites=rewrites,
        not_rewritable_reason=None if rewritable else "joint predicate",
    )


def test_round_trip(tmp_path):
    path = tmp_path / "d.jsonl"
    instances = [make_instance(i) for i in range(5)]
    save(path, instances)
    loaded, bad = load(path)
    assert bad == 0
    assert loaded == instances


def test_invariants_enforced():
    with pytest.raises(DatasetError):
        make_instance(1, conj="plus")
    with pytest.raises(DatasetError):
        Instance(
            id="x",
            source="test",
            text="t",
            conjunction=ConjunctionMark("and", 1, (0, 3)),
            conllu=None,
            rewritable=True,
            rewrites=[Rewrite("only one", None)],
        )
    with pytest.raises(DatasetError):
        Instance(
            id="x",
            source="test",
            text="t",
            conjunction=ConjunctionMark("and", 1, (0, 3)),
            conllu=None,
            rewritable=False,
            rewrites=[Rewrite("a", None), Rewrite("b", None)],
        )


def test_strict_load_reports_line(tmp_path):
    path = tmp_path / "d.jsonl"
    path.write_text('{"id": "broken"}\n', encoding="utf-8")
    with pytest.raises(DatasetError) as err:
        load(path)
    assert "1" in str(err.value)


def test_lenient_load_counts_bad(tmp_path):
    path = tmp_path / "d.jsonl"
    good = make_instance(1)
    path.write_text(
        json.dumps(good.to_dict()) + "\nnot json\n" + '{"id": "broken"}\n',
        encoding="utf-8",
    )
    loaded, bad = load(path, lenient=True)
    assert len(loaded) == 1
    assert bad == 2


def test_split_deterministic_and_complete():
    instances = [make_instance(i) for i in range(50)]
    split(instances, seed=13)
    first = [i.split for i in instances]
    again = [make_instance(i) for i in range(50)]
    split(again, seed=13)
    assert first == [i.split for i in again]
    assert set(first) <= {"train", "validation", "test"}
    assert first.count("validation") == 5 and first.count("test") == 5
    assert first.count("train") == 40


def test_split_floor_allocation_remainder_to_train():
    instances = [make_instance(i) for i in range(10)]
    split(instances, ratios=(0.333, 0.333, 0.334), seed=0)
    counts = {s: [i.split for i in instances].count(s) for s in ("train", "validation", "test")}
    assert counts["validation"] == 3 and counts["test"] == 3
    assert counts["train"] == 4  # floor allocation, remainder joins train


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=40), st.integers(min_value=0, max_value=999))
def test_split_partitions_everything(n, seed):
    instances = [make_instance(i) for i in range(n)]
    split(instances, seed=seed)
    assert all(i.split in ("train", "validation", "test") for i in instances)


def test_mini_dataset_shape():
    instances, bad = load(MINI)
    assert bad == 0
    assert len(instances) == 20
    st_ = stats(instances)
    assert st_.conjunctions["full"] == {"and": 10, "or": 5, "but": 5}
    assert st_.rewrite_counts == {"2": 15, "3": 2, "4+": 1, "non-rewritable": 2}


def test_stats_verb_tallies():
    instances, _ = load(MINI)
    st_ = stats(instances)
    full = st_.verbs["full"]
    assert full["total"] == full["explicit"] + full["omitted"]
    assert math.isclose(st_.omitted_share, full["omitted"] / full["total"])
    d = st_.to_dict()
    json.dumps(d)


def test_stats_per_split():
    instances, _ = load(MINI)
    split(instances, seed=3)
    st_ = stats(instances)
    assert set(st_.conjunctions) == {"full", "train", "validation", "test"}
    total = sum(
        sum(st_.conjunctions[s].values()) for s in ("train", "validation", "test")
    )
    assert total == sum(st_.conjunctions["full"].values())
