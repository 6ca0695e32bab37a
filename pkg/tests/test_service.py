import json
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from conjr.service import build_app

from conftest import MINI

GOOD = ["Josh likes wine.", "Jane likes water."]


@pytest.fixture()
def store_path(tmp_path):
    return tmp_path / "journal.jsonl"


@pytest.fixture()
def client(store_path):
    return TestClient(build_app(MINI, store_path), raise_server_exceptions=False)


def submission(annotator="a1", instance="mini-001", sentences=GOOD):
    return {
        "instance_id": instance,
        "annotator_id": annotator,
        "rewritable": True,
        "sentences": sentences,
    }


def test_get_instance(client):
    r = client.get("/instances/mini-001")
    assert r.status_code == 200
    assert r.json()["id"] == "mini-001"
    assert client.get("/instances/nope").status_code == 404


def test_batches_are_seven_then_exhausted(client):
    sizes = []
    while True:
        r = client.get("/batches/next", params={"annotator": "a1"})
        if r.status_code == 204:
            break
        body = r.json()
        sizes.append(len(body["items"]))
        assert body["status"] == "assigned"
        for item in body["items"]:
            assert {"instance_id", "text", "conjunction"} <= set(item)
    # 20 instances -> 7 + 7 + final partial 6
    assert sizes == [7, 7, 6]


def test_validate_pass_and_fail(client):
    r = client.post("/validate", json={"instance_id": "mini-001", "sentences": GOOD})
    assert r.status_code == 200
    assert r.json()["verdict"] == "pass"
    r = client.post(
        "/validate",
        json={"instance_id": "mini-001", "sentences": ["Josh likes wine and Jane water."]},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["verdict"] == "fail"
    assert any(v["code"] == "CONJUNCTION_PRESENT" for v in body["violations"])


def test_validate_does_not_persist(client, store_path):
    client.post("/validate", json={"instance_id": "mini-001", "sentences": GOOD})
    assert not store_path.exists() or "submission" not in store_path.read_text()


def test_validate_unknown_instance_404(client):
    r = client.post("/validate", json={"instance_id": "nope", "sentences": GOOD})
    assert r.status_code == 404


def test_submission_accept_and_persist(client, store_path):
    r = client.post("/submissions", json=submission())
    assert r.status_code == 200
    entries = [json.loads(l) for l in store_path.read_text().splitlines()]
    assert any(e["kind"] == "submission" for e in entries)


def test_invalid_submission_422_with_report_not_persisted(client, store_path):
    r = client.post(
        "/submissions",
        json=submission(sentences=["Josh likes wine and Jane water."]),
    )
    assert r.status_code == 422
    assert any(v["code"] == "CONJUNCTION_PRESENT" for v in r.json()["detail"]["violations"])
    assert not store_path.exists() or "submission" not in store_path.read_text()


def test_consolidate_needs_enough_submissions(client):
    client.post("/submissions", json=submission("a1"))
    r = client.post("/consolidate/mini-001")
    assert r.status_code == 409
    client.post("/submissions", json=submission("a2"))
    client.post("/submissions", json=submission("a3"))
    r = client.post("/consolidate/mini-001")
    assert r.status_code == 200
    assert r.json()["method"] == "majority"
    assert r.json()["gold"]["annotator_id"] == "a1"


def test_consolidate_unknown_instance_404(client):
    assert client.post("/consolidate/nope").status_code == 404


def test_latest_submission_per_annotator_wins(client):
    client.post("/submissions", json=submission("a1"))
    client.post("/submissions", json=submission("a1", sentences=["Josh likes wine.", "Jane likes wine."]))
    assert client.get("/stats").json()["submissions"] == 1


def test_stats_shape(client):
    body = client.get("/stats").json()
    assert body["dataset"]["conjunctions"]["full"] == {"and": 10, "or": 5, "but": 5}
    assert body["submissions"] == 0
    assert body["consolidated"] == []
    assert set(body["iaa"]) == {
        "rewrite_agreement",
        "exact_match",
        "avg_jaccard",
        "groups",
        "excluded",
    }


def test_replay_determinism(store_path):
    client = TestClient(build_app(MINI, store_path))
    client.get("/batches/next", params={"annotator": "a1"})
    for a in ("a1", "a2", "a3"):
        client.post("/submissions", json=submission(a))
    client.post("/consolidate/mini-001")
    before = client.get("/stats").content
    # fresh process state, same journal
    replayed = TestClient(build_app(MINI, store_path))
    assert replayed.get("/stats").content == before


def test_concurrent_batch_assignment_no_duplicates(tmp_path):
    # a large synthetic dataset so >= 100 requests can race for batches
    src = [json.loads(l) for l in MINI.read_text().splitlines()]
    big = tmp_path / "big.jsonl"
    with open(big, "w", encoding="utf-8") as fh:
        for n in range(50):
            for rec in src:
                clone = dict(rec)
                clone["id"] = f"{rec['id']}-x{n}"
                fh.write(json.dumps(clone) + "\n")
    client = TestClient(build_app(big, tmp_path / "j.jsonl"))

    def grab(i):
        r = client.get("/batches/next", params={"annotator": f"w{i}"})
        return r.json()["batch_id"] if r.status_code == 200 else None

    with ThreadPoolExecutor(max_workers=32) as pool:
        got = list(pool.map(grab, range(120)))
    assigned = [b for b in got if b is not None]
    assert len(assigned) == len(set(assigned))
    assert len(assigned) == 120  # 1000 instances -> enough batches for all
