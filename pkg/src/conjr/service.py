"""HTTP facade for the annotation workflow.

State is a file-backed append-only JSON-lines journal plus an in-memory
index rebuilt by replay on startup, so restarting over the same journal
reproduces identical /stats output. All journal writes and batch
assignments go through a single lock.
"""

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException, Query, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .annotation import RewriteSet, annotator_ranking, consolidate, iaa, validate
from .dataset import Instance, load, stats

BATCH_SIZE = 7


class SubmissionIn(BaseModel):
    instance_id: str
    annotator_id: str
    rewritable: bool
    sentences: list[str] = []
    not_rewritable_reason: Optional[str] = None
    uncertain: bool = False
    long_list: bool = False

    def to_rewrite_set(self) -> RewriteSet:
        return RewriteSet(
            instance_id=self.instance_id,
            annotator_id=self.annotator_id,
            rewritable=self.rewritable,
            sentences=list(self.sentences),
            not_rewritable_reason=self.not_rewritable_reason,
            uncertain=self.uncertain,
            long_list=self.long_list,
        )


class ValidateIn(BaseModel):
    instance_id: str
    rewritable: bool = True
    sentences: list[str] = []
    not_rewritable_reason: Optional[str] = None
    uncertain: bool = False
    long_list: bool = False


@dataclass
class Store:
    """Journal-backed service state. The journal file is the source of
    truth; everything else is derived and reproducible by replay."""

    path: Path
    instances: list[Instance]
    min_submissions: int = 3
    lock: threading.Lock = field(default_factory=threading.Lock)
    submissions: dict[str, dict[str, RewriteSet]] = field(default_factory=dict)
    consolidated: dict[str, dict] = field(default_factory=dict)
    assignments: dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        self.by_id = {inst.id: inst for inst in self.instances}
        self.batches = [
            self.instances[i : i + BATCH_SIZE]
            for i in range(0, len(self.instances), BATCH_SIZE)
        ]
        if self.path.exists():
            self._replay()

    def _replay(self):
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                entry = json.loads(line)
                self._apply(entry)

    def _apply(self, entry: dict):
        kind = entry["kind"]
        if kind == "submission":
            sub = RewriteSet.from_dict(entry["submission"])
            # latest submission per annotator wins
            self.submissions.setdefault(sub.instance_id, {})[sub.annotator_id] = sub
        elif kind == "consolidation":
            self.consolidated[entry["instance_id"]] = entry
        elif kind == "assignment":
            self.assignments[entry["batch"]] = entry["annotator"]

    def append(self, entry: dict):
        # caller holds the lock
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(entry, ensure_ascii=False) + "\n")
        self._apply(entry)


def _batch_payload(store: Store, batch_index: int, annotator: str) -> dict:
    items = []
    for inst in store.batches[batch_index]:
        items.append(
            {
                "instance_id": inst.id,
                "text": inst.text,
                "conjunction": inst.conjunction.to_dict(),
            }
        )
    return {
        "batch_id": batch_index,
        "annotator": annotator,
        "status": "assigned",
        "items": items,
    }


def build_app(data_path, store_path, min_submissions: int = 3) -> FastAPI:
    instances, _ = load(data_path, lenient=True)
    store = Store(Path(store_path), instances, min_submissions=min_submissions)
    app = FastAPI(title="conjr annotation service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store

    @app.exception_handler(Exception)
    async def internal_fault(request, exc):
        fault_id = uuid.uuid4().hex[:12]
        return Response(
            content=json.dumps({"error": "internal fault", "id": fault_id}),
            status_code=500,
            media_type="application/json",
        )

    @app.get("/instances/{instance_id}")
    def get_instance(instance_id: str):
        inst = store.by_id.get(instance_id)
        if inst is None:
            raise HTTPException(404, f"unknown instance {instance_id!r}")
        return inst.to_dict()

    @app.get("/batches/next")
    def next_batch(annotator: str = Query(...)):
        with store.lock:
            for i in range(len(store.batches)):
                if i not in store.assignments:
                    store.append({"kind": "assignment", "batch": i, "annotator": annotator})
                    return _batch_payload(store, i, annotator)
        return Response(status_code=204)

    @app.post("/validate")
    def validate_draft(body: ValidateIn):
        inst = store.by_id.get(body.instance_id)
        if inst is None:
            raise HTTPException(404, f"unknown instance {body.instance_id!r}")
        sub = RewriteSet(
            instance_id=body.instance_id,
            annotator_id="draft",
            rewritable=body.rewritable,
            sentences=list(body.sentences),
            not_rewritable_reason=body.not_rewritable_reason,
        )
        report = validate(inst.text, inst.conjunction.form, sub, input_graph=inst.graph())
        return report.to_dict()

    @app.post("/submissions")
    def submit(body: SubmissionIn):
        inst = store.by_id.get(body.instance_id)
        if inst is None:
            raise HTTPException(404, f"unknown instance {body.instance_id!r}")
        sub = body.to_rewrite_set()
        report = validate(inst.text, inst.conjunction.form, sub, input_graph=inst.graph())
        if not report.passed:
            raise HTTPException(422, report.to_dict())
        with store.lock:
            store.append({"kind": "submission", "submission": sub.to_dict()})
        return {"status": "accepted", "report": report.to_dict()}

    @app.post("/consolidate/{instance_id}")
    def run_consolidation(instance_id: str):
        inst = store.by_id.get(instance_id)
        if inst is None:
            raise HTTPException(404, f"unknown instance {instance_id!r}")
        subs = list(store.submissions.get(instance_id, {}).values())
        if len(subs) < store.min_submissions:
            raise HTTPException(
                409,
                f"need {store.min_submissions} submissions, have {len(subs)}",
            )
        golds = {
            iid: RewriteSet.from_dict(entry["gold"])
            for iid, entry in store.consolidated.items()
        }
        all_subs = [s for per in store.submissions.values() for s in per.values()]
        ranking = {s.annotator_id: 0.0 for s in all_subs}
        ranking.update(annotator_ranking(all_subs, golds))
        result = consolidate(subs, ranking)
        entry = {
            "kind": "consolidation",
            "instance_id": instance_id,
            "method": result.method,
            "gold": result.gold.to_dict(),
        }
        with store.lock:
            store.append(entry)
        return {"instance_id": instance_id, "method": result.method, "gold": result.gold.to_dict()}

    @app.get("/stats")
    def get_stats():
        ds = stats(store.instances).to_dict()
        groups = [list(per.values()) for _, per in sorted(store.submissions.items())]
        agreement = iaa(groups).to_dict()
        return {
            "dataset": ds,
            "submissions": sum(len(per) for per in store.submissions.values()),
            "consolidated": sorted(store.consolidated),
            "iaa": agreement,
        }

    return app
