import json

import pytest
from fastapi.testclient import TestClient

from clusterlab.cli import main
from clusterlab.service import build_app

A2 = {"n": 2, "B": [[0, 1], [-1, 0]]}

PAYLOAD_KEYS = {
    "v", "n", "variables", "f_polynomials", "g_vectors", "B", "Bt", "C", "G",
    "sign_coherent", "symmetrizer", "duality_ok", "fingerprint",
}


@pytest.fixture()
def client():
    with TestClient(build_app()) as c:
        yield c


def strip_id(body):
    return {k: v for k, v in body.items() if k != "id"}


class TestSessions:
    def test_create_returns_origin_payload(self, client):
        r = client.post("/sessions", json=A2)
        assert r.status_code == 201
        body = r.json()
        assert set(body) == PAYLOAD_KEYS | {"id"}
        assert body["variables"] == ["x1", "x2"]
        assert body["C"] == [[1, 0], [0, 1]]
        assert body["duality_ok"] is True

    def test_mutate_matches_engine(self, client):
        sid = client.post("/sessions", json=A2).json()["id"]
        body = client.post(f"/sessions/{sid}/mutate", json={"k": 1}).json()
        assert body["variables"][0] == "x1^-1*x2 + x1^-1*y1"
        assert body["C"] == [[-1, 1], [0, 1]]
        assert body["G"] == [[-1, 0], [1, 1]]

    def test_get_reflects_current_state(self, client):
        sid = client.post("/sessions", json=A2).json()["id"]
        client.post(f"/sessions/{sid}/mutate", json={"k": 2})
        assert client.get(f"/sessions/{sid}").json()["variables"][1] != "x2"

    def test_isolation(self, client):
        a = client.post("/sessions", json=A2).json()
        b = client.post("/sessions", json=A2).json()
        client.post(f"/sessions/{b['id']}/mutate", json={"k": 1})
        again = client.get(f"/sessions/{a['id']}").json()
        assert strip_id(again) == strip_id(a)

    def test_unknown_session_404(self, client):
        assert client.get("/sessions/zzz").status_code == 404
        assert client.post("/sessions/zzz/mutate", json={"k": 1}).status_code == 404

    def test_invalid_inputs_422(self, client):
        assert client.post("/sessions", json={"n": 2}).status_code == 422
        assert client.post("/sessions", json={"n": 2, "B": [[0, 1], [1, 0]]}).status_code == 422
        sid = client.post("/sessions", json=A2).json()["id"]
        assert client.post(f"/sessions/{sid}/mutate", json={"k": "x"}).status_code == 422
        assert client.post(f"/sessions/{sid}/mutate", json={"k": 9}).status_code == 422


class TestUndo:
    def test_undo_restores_previous_payload(self, client):
        created = client.post("/sessions", json=A2).json()
        sid = created["id"]
        client.post(f"/sessions/{sid}/mutate", json={"k": 1})
        undone = client.post(f"/sessions/{sid}/undo").json()
        assert strip_id(undone) == strip_id(created)

    def test_undo_empty_history_409(self, client):
        sid = client.post("/sessions", json=A2).json()["id"]
        assert client.post(f"/sessions/{sid}/undo").status_code == 409

    def test_undo_beyond_cache_replays(self, client, monkeypatch):
        import clusterlab.service as service
        monkeypatch.setattr(service, "SEED_CACHE_SIZE", 3)
        created = client.post("/sessions", json=A2).json()
        sid = created["id"]
        snapshots = [created]
        for k in (1, 2, 1, 2, 1, 2, 1, 2):
            snapshots.append(client.post(f"/sessions/{sid}/mutate", json={"k": k}).json())
        for expect in reversed(snapshots[:-1]):
            got = client.post(f"/sessions/{sid}/undo").json()
            assert strip_id(got) == strip_id(expect)
        assert client.post(f"/sessions/{sid}/undo").status_code == 409

    def test_history_endpoint(self, client):
        sid = client.post("/sessions", json=A2).json()["id"]
        client.post(f"/sessions/{sid}/mutate", json={"k": 1})
        client.post(f"/sessions/{sid}/mutate", json={"k": 2})
        h = client.get(f"/sessions/{sid}/history").json()
        assert [s["k"] for s in h["steps"]] == [1, 2]
        assert h["origin"]["B"] == A2["B"]
        assert h["current_fingerprint"] == h["steps"][-1]["fingerprint"]
        client.post(f"/sessions/{sid}/undo")
        h = client.get(f"/sessions/{sid}/history").json()
        assert [s["k"] for s in h["steps"]] == [1]


class TestVerifyEndpoint:
    def test_runs_suite_from_origin(self, client):
        sid = client.post("/sessions", json=A2).json()["id"]
        client.post(f"/sessions/{sid}/mutate", json={"k": 1})  # must not matter
        r = client.get(f"/sessions/{sid}/verify", params={"depth": 12})
        body = r.json()
        assert body["seeds"] == 10 and body["passed"] is True
        assert body["exit_code"] == 0

    def test_require_closure_param(self, client):
        sid = client.post("/sessions", json={"n": 2, "B": [[0, 2], [-2, 0]]}).json()["id"]
        r = client.get(f"/sessions/{sid}/verify",
                       params={"depth": 3, "require_closure": True})
        assert r.json()["exit_code"] == 3


class TestTransportEquivalence:
    def test_cli_and_service_payloads_identical(self, client, tmp_path):
        f = tmp_path / "a2.json"
        f.write_text(json.dumps(A2))
        out = tmp_path / "payload.json"
        assert main(["mutate", str(f), "--path", "1,2", "--json", str(out)]) == 0
        cli_payload = json.loads(out.read_text())

        sid = client.post("/sessions", json=A2).json()["id"]
        client.post(f"/sessions/{sid}/mutate", json={"k": 1})
        body = client.post(f"/sessions/{sid}/mutate", json={"k": 2}).json()
        assert strip_id(body) == cli_payload


class TestSnapshot:
    def test_round_trip(self, tmp_path):
        snap = tmp_path / "snap.json"
        with TestClient(build_app(snapshot_path=snap)) as c:
            sid = c.post("/sessions", json=A2).json()["id"]
            c.post(f"/sessions/{sid}/mutate", json={"k": 1})
            before = c.get(f"/sessions/{sid}").json()
        assert snap.exists()
        with TestClient(build_app(snapshot_path=snap)) as c:
            after = c.get(f"/sessions/{sid}").json()
            assert after == before
            fresh = c.post("/sessions", json=A2).json()["id"]
            assert fresh != sid
