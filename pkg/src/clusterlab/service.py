"""HTTP session service over the mutation engine.

Each session owns an origin exchange matrix and a history of directions.
History stores (direction, fingerprint) pairs; full seeds live in a small
LRU cache keyed by history length, and undo falls back to replaying from
the origin when the cache has evicted the target.  Undo additionally
cross-checks the involution: mutating the current seed in the popped
direction must land on the recorded fingerprint.
"""

from __future__ import annotations

import json
import threading
from collections import OrderedDict
from contextlib import asynccontextmanager
from pathlib import Path

from fastapi import Body, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from .checks import run_full_suite
from .intmat import IntMatrix, SignSkewSymmetryError, find_skew_symmetrizer
from .io import MatrixFormatError, parse_matrix_literal, principal_base, seed_payload
from .seeds import Seed, mutate_seed, new_principal_seed

SEED_CACHE_SIZE = 64


class Session:
    def __init__(self, sid: str, B0: IntMatrix):
        self.id = sid
        self.b0 = B0
        self.symmetrizer = find_skew_symmetrizer(B0)
        self.origin = new_principal_seed(B0)
        self.current = self.origin
        self.history: list[tuple[int, str]] = []  # (direction, fingerprint)
        self.cache: OrderedDict[int, Seed] = OrderedDict()
        self.lock = threading.Lock()

    def _cache_put(self, length: int, seed: Seed) -> None:
        self.cache[length] = seed
        self.cache.move_to_end(length)
        while len(self.cache) > SEED_CACHE_SIZE:
            self.cache.popitem(last=False)

    def mutate(self, k: int) -> Seed:
        if not 1 <= k <= self.b0.rows:
            raise HTTPException(422, f"direction {k} outside 1..{self.b0.rows}")
        self.current = mutate_seed(self.current, k)
        self.history.append((k, self.current.fingerprint()))
        self._cache_put(len(self.history), self.current)
        return self.current

    def undo(self) -> Seed:
        if not self.history:
            raise HTTPException(409, "history is empty, nothing to undo")
        k, _ = self.history.pop()
        target_len = len(self.history)
        expected_fp = (self.history[-1][1] if self.history
                       else self.origin.fingerprint())
        back = mutate_seed(self.current, k)  # mutation is an involution
        if back.fingerprint() != expected_fp:
            raise HTTPException(500, "undo mismatch: involution left the recorded history")
        cached = self.cache.pop(target_len, None)
        if cached is not None and cached != back:
            raise HTTPException(500, "undo mismatch: cached seed disagrees with involution")
        if cached is None and target_len > 0:
            replayed = self.origin
            for step, _ in self.history:
                replayed = mutate_seed(replayed, step)
            if replayed != back:
                raise HTTPException(500, "undo mismatch: replay disagrees with involution")
        self.current = back
        self._cache_put(target_len, back)
        return self.current

    def payload(self) -> dict:
        return seed_payload(self.current, self.symmetrizer, symmetrizer_known=True)


class Registry:
    def __init__(self) -> None:
        self.sessions: dict[str, Session] = {}
        self.lock = threading.Lock()
        self._next = 1

    def create(self, B0: IntMatrix) -> Session:
        with self.lock:
            sid = f"s{self._next}"
            self._next += 1
            s = Session(sid, B0)
            self.sessions[sid] = s
            return s

    def get(self, sid: str) -> Session:
        s = self.sessions.get(sid)
        if s is None:
            raise HTTPException(404, f"unknown session {sid!r}")
        return s

    def snapshot_dict(self) -> dict:
        return {
            "v": 1,
            "sessions": {
                sid: {"B0": s.b0.to_lists(), "history": [k for k, _ in s.history]}
                for sid, s in sorted(self.sessions.items())
            },
        }

    def restore(self, data: dict) -> None:
        for sid, rec in data.get("sessions", {}).items():
            s = Session(sid, IntMatrix(rec["B0"]))
            for k in rec["history"]:
                s.mutate(k)
            self.sessions[sid] = s
            num = int(sid[1:]) if sid[1:].isdigit() else 0
            self._next = max(self._next, num + 1)


def build_app(snapshot_path: str | Path | None = None) -> FastAPI:
    registry = Registry()

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        if snapshot_path and Path(snapshot_path).exists():
            registry.restore(json.loads(Path(snapshot_path).read_text()))
        yield
        if snapshot_path:
            Path(snapshot_path).write_text(
                json.dumps(registry.snapshot_dict(), indent=2) + "\n")

    app = FastAPI(title="clusterlab", lifespan=lifespan)
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    app.state.registry = registry

    @app.post("/sessions", status_code=201)
    def create_session(literal: dict = Body(...)):
        try:
            B0 = principal_base(parse_matrix_literal(literal))
            s = registry.create(B0)
        except (MatrixFormatError, SignSkewSymmetryError) as e:
            raise HTTPException(422, str(e))
        return {"id": s.id, **s.payload()}

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        s = registry.get(sid)
        with s.lock:
            return {"id": s.id, **s.payload()}

    @app.post("/sessions/{sid}/mutate")
    def mutate(sid: str, body: dict = Body(...)):
        s = registry.get(sid)
        k = body.get("k")
        if not isinstance(k, int) or isinstance(k, bool):
            raise HTTPException(422, 'body must carry an integer "k"')
        with s.lock:
            s.mutate(k)
            return {"id": s.id, **s.payload()}

    @app.post("/sessions/{sid}/undo")
    def undo(sid: str):
        s = registry.get(sid)
        with s.lock:
            s.undo()
            return {"id": s.id, **s.payload()}

    @app.get("/sessions/{sid}/history")
    def history(sid: str):
        s = registry.get(sid)
        with s.lock:
            return {
                "v": 1,
                "id": s.id,
                "origin": {"n": s.b0.rows, "B": s.b0.to_lists()},
                "steps": [{"k": k, "fingerprint": fp} for k, fp in s.history],
                "current_fingerprint": s.current.fingerprint(),
            }

    @app.get("/sessions/{sid}/verify")
    def verify(sid: str, depth: int = 4, max_seeds: int = 100_000,
               require_closure: bool = False):
        s = registry.get(sid)
        try:
            _, report = run_full_suite(s.b0, depth, max_seeds=max_seeds)
        except SignSkewSymmetryError as e:
            raise HTTPException(422, str(e))
        body = report.to_json_dict()
        body["exit_code"] = report.exit_code(require_closure=require_closure)
        return body

    return app
