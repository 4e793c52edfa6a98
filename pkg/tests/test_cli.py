import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from pyror.cli import main

DATA = Path(__file__).parent / "data"

STUDENTS = str(DATA / "students.json")
DEAN = str(DATA / "dean_statements.json")
C1 = str(DATA / "c1.json")
ANTICHAIN = str(DATA / "antichain.json")
CYCLE = str(DATA / "cycle_statements.json")
SORTING = str(DATA / "sorting.json")


@pytest.fixture()
def runner():
    return CliRunner()


def test_validate_ok(runner):
    result = runner.invoke(main, ["validate", "--problem", STUDENTS])
    assert result.exit_code == 0, result.output
    assert "10 alternatives" in result.output


def test_validate_bad_problem_exits_3(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "criteria": [], "alternatives": {}}))
    result = runner.invoke(main, ["validate", "--problem", str(bad)])
    assert result.exit_code == 3


def test_dominance_strong_contains_d_f(runner):
    result = runner.invoke(main, ["dominance", "--problem", STUDENTS, "--index", "strong", "--json", "-"])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["bits"][payload["order"].index("D")][payload["order"].index("F")] is True


def test_relations_necessary_contains_m_d(runner):
    result = runner.invoke(
        main,
        ["relations", "--problem", STUDENTS, "--statements", C1, "--relation", "necessary",
         "--index", "classic", "--json", "-"],
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["bits"][payload["order"].index("M")][payload["order"].index("D")] is True


def test_relations_ik_index(runner):
    result = runner.invoke(
        main,
        ["relations", "--problem", STUDENTS, "--statements", C1, "--relation", "possible",
         "--index", "2,1", "--json", "-"],
    )
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["kind"] == "pos(2,1)"


def test_incompatible_statements_exit_2(runner, tmp_path):
    statements = tmp_path / "bad.json"
    statements.write_text(
        json.dumps(
            [
                {"kind": "holistic-strict", "alternatives": ["M", "D"]},
                {"kind": "holistic-strict", "alternatives": ["D", "M"]},
            ]
        )
    )
    result = runner.invoke(
        main,
        ["relations", "--problem", STUDENTS, "--statements", str(statements),
         "--relation", "necessary", "--index", "classic"],
    )
    assert result.exit_code == 2
    error = json.loads(result.stderr)
    assert error["code"] == "incompatible_session"


def test_dot_export(runner, tmp_path):
    out = tmp_path / "graph.dot"
    result = runner.invoke(
        main,
        ["relations", "--problem", STUDENTS, "--statements", C1, "--relation", "necessary",
         "--dot", str(out)],
    )
    assert result.exit_code == 0, result.output
    text = out.read_text()
    assert text.startswith("digraph")


def test_group_command(runner, tmp_path):
    statements = tmp_path / "group.json"
    statements.write_text(
        json.dumps(
            [
                {"kind": "holistic-strict", "alternatives": ["M", "D"], "author": "d1"},
                {"kind": "holistic-strict", "alternatives": ["I", "B"], "author": "d2"},
            ]
        )
    )
    result = runner.invoke(
        main,
        ["group", "--problem", STUDENTS, "--statements", str(statements),
         "--outer", "N", "--inner", "N", "--dms", "d1,d2", "--json", "-"],
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["kind"].startswith("nec-nec")


def test_sort_command(runner):
    result = runner.invoke(
        main, ["sort", "--problem", ANTICHAIN, "--sorting", SORTING, "--json", "-"]
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["compatible"] is True
    assert payload["assignments"]["a"]["possible"] == [3, 3]


def test_extreme_ranks_command(runner):
    result = runner.invoke(
        main, ["extreme-ranks", "--problem", STUDENTS, "--statements", DEAN, "--json", "-"]
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["ranks"]["A"]["best"] == 1


def test_diagnose_command(runner):
    result = runner.invoke(
        main, ["diagnose", "--problem", ANTICHAIN, "--statements", CYCLE, "--json", "-"]
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert sorted(tuple(s) for s in payload["minimal_sets"]) == [(0,), (1,), (2,)]


def test_sweep_command(runner):
    result = runner.invoke(
        main, ["sweep-credibility", "--problem", STUDENTS, "--statements", DEAN, "--json", "-"]
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert [lvl["level"] for lvl in payload["levels"]] == [1, 2, 3]


def test_check_properties_quick(runner):
    result = runner.invoke(
        main, ["check-properties", "--seed", "5", "--instances", "2", "--no-group"]
    )
    assert result.exit_code == 0, result.output
    assert "PASS" in result.output
    assert "violations" in result.output


def test_check_properties_on_given_problem(runner):
    result = runner.invoke(
        main, ["check-properties", "--problem", STUDENTS, "--statements", C1, "--no-group"]
    )
    assert result.exit_code == 0, result.output
    assert "FAIL" not in result.output


def test_cli_output_matches_service_bytes(runner, students_problem):
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    from pyror.service import create_app
    from pyror.session import SessionStore

    cli_result = runner.invoke(
        main,
        ["relations", "--problem", STUDENTS, "--statements", C1, "--relation", "necessary",
         "--index", "classic", "--json", "-"],
    )
    assert cli_result.exit_code == 0

    with TestClient(create_app(SessionStore(None))) as client:
        sid = client.post("/problems", json=students_problem).json()["id"]
        client.post(
            f"/sessions/{sid}/statements",
            json={"kind": "holistic-strict", "alternatives": ["M", "D"], "credibility": 1},
        )
        service_bytes = client.get(
            f"/sessions/{sid}/relations", params={"family": "necessary", "index": "classic"}
        ).content
    assert cli_result.stdout.strip().encode() == service_bytes
