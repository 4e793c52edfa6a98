import json
import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient

from pyror.service import create_app
from pyror.session import SessionStore


@pytest.fixture()
def client(tmp_path):
    app = create_app(SessionStore(tmp_path / "sessions"))
    with TestClient(app, raise_server_exceptions=False) as tc:
        yield tc


def _create(client, problem):
    response = client.post("/problems", json=problem)
    assert response.status_code == 200, response.text
    return response.json()


def test_create_session_roundtrip(client, students_problem):
    created = _create(client, students_problem)
    assert created["version"] == 0
    assert created["compatible"] is True
    assert len(created["alternatives"]) == 10

    fetched = client.get(f"/sessions/{created['id']}").json()
    assert fetched == created


def test_create_rejects_bad_problems(client, students_problem):
    response = client.post("/problems", json={"n": 2, "criteria": [], "alternatives": {}})
    assert response.status_code == 422
    body = response.json()
    assert body["code"] == "validation_error"

    broken = json.loads(json.dumps(students_problem))
    broken["alternatives"]["A"]["Mat"] = ["Good", "Bad"]
    response = client.post("/problems", json=broken)
    assert response.status_code == 422


def test_statement_flow_with_undo(client, students_problem, dean_statements):
    sid = _create(client, students_problem)["id"]

    first = client.post(
        f"/sessions/{sid}/statements",
        json={"kind": "holistic-strict", "alternatives": ["M", "D"]},
    ).json()
    assert first == {"version": 1, "compatible": True, "epsilon": pytest.approx(1.0)}

    # a contradiction is flagged but not rolled back
    second = client.post(
        f"/sessions/{sid}/statements",
        json={"kind": "holistic-strict", "alternatives": ["D", "M"]},
    ).json()
    assert second["version"] == 2
    assert second["compatible"] is False

    relations = client.get(f"/sessions/{sid}/relations", params={"family": "necessary"})
    assert relations.status_code == 409
    assert relations.json()["code"] == "incompatible_session"

    assert client.post(f"/sessions/{sid}/revert", json={"version": 1}).json() == {"version": 1}
    relations = client.get(f"/sessions/{sid}/relations", params={"family": "necessary"})
    assert relations.status_code == 200
    matrix = relations.json()
    assert matrix["bits"][matrix["order"].index("M")][matrix["order"].index("D")] is True

    assert client.post(f"/sessions/{sid}/revert", json={"version": 0}).json() == {"version": 0}
    response = client.post(f"/sessions/{sid}/revert", json={"version": 5})
    assert response.status_code == 422


def test_statement_validation_errors(client, students_problem):
    sid = _create(client, students_problem)["id"]
    response = client.post(
        f"/sessions/{sid}/statements",
        json={"kind": "holistic-strict", "alternatives": ["M", "ZZ"]},
    )
    assert response.status_code == 422
    assert response.json()["code"] == "unknown_reference_alternative"


def test_cache_serves_identical_bytes(client, students_problem, dean_statements):
    sid = _create(client, students_problem)["id"]
    client.post(f"/sessions/{sid}/statements", json={"kind": "holistic-strict", "alternatives": ["M", "D"]})
    first = client.get(f"/sessions/{sid}/relations", params={"family": "necessary"})
    second = client.get(f"/sessions/{sid}/relations", params={"family": "necessary"})
    assert first.content == second.content

    # a new statement invalidates: recomputed at the new version
    client.post(f"/sessions/{sid}/statements", json={"kind": "intensity-strict", "alternatives": ["M", "I", "C", "H"]})
    third = client.get(f"/sessions/{sid}/relations", params={"family": "necessary"})
    assert third.status_code == 200
    assert third.content != first.content


def test_dominance_missing_cells_conflict(client):
    problem = {
        "n": 2,
        "criteria": [{"id": "g", "scale": {"kind": "quantitative", "range": [0, 9]}}],
        "alternatives": {"a": {"g": [1, 2]}, "b": {"g": None}},
    }
    sid = _create(client, problem)["id"]
    response = client.get(f"/sessions/{sid}/dominance", params={"kind": "strong"})
    assert response.status_code == 409
    assert response.json()["code"] == "missing_evaluation_unsupported"
    collapsed = client.get(f"/sessions/{sid}/dominance", params={"kind": "strong", "collapse": True})
    assert collapsed.status_code == 200
    matrix = collapsed.json()
    assert matrix["order"] == ["a", "b"]


def test_group_endpoint(client, students_problem):
    sid = _create(client, students_problem)["id"]
    client.post(
        f"/sessions/{sid}/statements",
        json={"kind": "holistic-strict", "alternatives": ["M", "D"], "author": "d1"},
    )
    client.post(
        f"/sessions/{sid}/statements",
        json={"kind": "holistic-strict", "alternatives": ["I", "B"], "author": "d2"},
    )
    response = client.get(
        f"/sessions/{sid}/group",
        params={"outer": "N", "inner": "P", "dms": "d1,d2"},
    )
    assert response.status_code == 200
    matrix = response.json()
    assert matrix["bits"][matrix["order"].index("M")][matrix["order"].index("D")] is True
    assert matrix["bits"][matrix["order"].index("I")][matrix["order"].index("B")] is True


def test_sweep_endpoint(client, students_problem, dean_statements):
    sid = _create(client, students_problem)["id"]
    for raw in (
        {"kind": "holistic-strict", "alternatives": ["M", "D"], "credibility": 1},
        {"kind": "intensity-strict", "alternatives": ["M", "I", "C", "H"], "credibility": 2},
    ):
        client.post(f"/sessions/{sid}/statements", json=raw)
    response = client.get(f"/sessions/{sid}/sweep")
    assert response.status_code == 200
    payload = response.json()
    assert [lvl["level"] for lvl in payload["levels"]] == [1, 2]
    assert payload["incompatible_from"] is None


def test_sorting_endpoints(client):
    problem = {
        "n": 2,
        "criteria": [{"id": "g", "scale": {"kind": "quantitative"}}],
        "alternatives": {"a": {"g": [3, 4]}, "b": {"g": [1, 2]}, "c": {"g": [0, 0]}},
    }
    sid = _create(client, problem)["id"]
    missing = client.get(f"/sessions/{sid}/sorting")
    assert missing.status_code == 422

    set_response = client.post(
        f"/sessions/{sid}/sorting",
        json={"classes": ["low", "high"], "examples": [{"alt": "c", "L": 1, "R": 1}, {"alt": "a", "L": 2, "R": 2}]},
    )
    assert set_response.status_code == 200
    response = client.get(f"/sessions/{sid}/sorting")
    assert response.status_code == 200
    payload = response.json()
    assert payload["compatible"] is True
    assert payload["assignments"]["a"]["possible"] == [2, 2]


def test_extreme_ranks_and_diagnose_endpoints(client, students_problem):
    sid = _create(client, students_problem)["id"]
    client.post(f"/sessions/{sid}/statements", json={"kind": "holistic-strict", "alternatives": ["M", "D"]})
    ranks = client.get(f"/sessions/{sid}/extreme-ranks", params={"alt": "A"})
    assert ranks.status_code == 200
    assert ranks.json()["ranks"]["A"]["best"] == 1

    diagnose = client.get(f"/sessions/{sid}/diagnose")
    assert diagnose.json()["compatible"] is True

    client.post(f"/sessions/{sid}/statements", json={"kind": "holistic-strict", "alternatives": ["D", "M"]})
    diagnose = client.get(f"/sessions/{sid}/diagnose").json()
    assert diagnose["compatible"] is False
    assert sorted(tuple(s) for s in diagnose["minimal_sets"]) == [(0,), (1,)]


def test_dot_export(client, students_problem):
    sid = _create(client, students_problem)["id"]
    client.post(f"/sessions/{sid}/statements", json={"kind": "holistic-strict", "alternatives": ["M", "D"]})
    response = client.get(
        f"/sessions/{sid}/export/dot", params={"relation": "necessary", "reduced": False}
    )
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("text/vnd.graphviz")
    assert '"M" -> "D";' in response.text
    reduced = client.get(f"/sessions/{sid}/export/dot", params={"relation": "necessary"})
    assert reduced.status_code == 200


def test_persistence_replays_identically(tmp_path, students_problem):
    root = tmp_path / "sessions"
    app = create_app(SessionStore(root))
    with TestClient(app) as tc:
        sid = _create(tc, students_problem)["id"]
        tc.post(f"/sessions/{sid}/statements", json={"kind": "holistic-strict", "alternatives": ["M", "D"]})
        original = tc.get(f"/sessions/{sid}/relations", params={"family": "necessary"}).content

    # a fresh process loads the persisted log and reproduces the result bit for bit
    app2 = create_app(SessionStore(root))
    with TestClient(app2) as tc2:
        summary = tc2.get(f"/sessions/{sid}").json()
        assert summary["version"] == 1
        replayed = tc2.get(f"/sessions/{sid}/relations", params={"family": "necessary"}).content
    assert replayed == original
