"""Batch CLI: a thin client over the HTTP service.

Every data command talks to the service API (an in-process instance by default,
or a remote one via --server), so CLI output and service output are the same
bytes by construction.  Exit codes: 2 incompatible preferences, 3 validation
error, 4 solver failure.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

EXIT_BY_CODE = {
    "validation_error": 3,
    "unknown_reference_alternative": 3,
    "unknown_alternative": 3,
    "unknown_criterion": 3,
    "unknown_dm": 3,
    "index_out_of_range": 3,
    "bad_version": 3,
    "incompatible_session": 2,
    "incompatible_sorting": 2,
    "dm_incompatible": 2,
    "solver_failure": 4,
    "milp_failure": 4,
}


class ServiceClient:
    """Uniform .get/.post over either a remote server or an in-process app."""

    def __init__(self, server: str | None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=300.0)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from starlette.testclient import TestClient

            from .service import create_app
            from .session import SessionStore

            self._client = TestClient(
                create_app(SessionStore(None)), raise_server_exceptions=False
            )

    def get(self, url: str, **kwargs) -> httpx.Response:
        return self._client.get(url, **kwargs)

    def post(self, url: str, **kwargs) -> httpx.Response:
        return self._client.post(url, **kwargs)


def _fail(response: httpx.Response) -> None:
    try:
        body = response.json()
    except Exception:
        body = {"code": "error", "message": response.text, "details": None}
    click.echo(json.dumps(body), err=True)
    sys.exit(EXIT_BY_CODE.get(body.get("code", ""), 1))


def _ok(response: httpx.Response) -> httpx.Response:
    if response.status_code >= 400:
        _fail(response)
    return response


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(json.dumps({"code": "validation_error", "message": str(exc), "details": None}), err=True)
        sys.exit(3)


def _make_session(client: ServiceClient, problem: str, statements: str | None) -> str:
    created = _ok(client.post("/problems", json=_load_json(problem))).json()
    session_id = created["id"]
    if statements:
        for raw in _load_json(statements):
            _ok(client.post(f"/sessions/{session_id}/statements", json=raw))
    return session_id


def _write_outputs(response: httpx.Response, json_out: str | None) -> None:
    if json_out == "-":
        sys.stdout.buffer.write(response.content)
        sys.stdout.buffer.write(b"\n")
    elif json_out:
        Path(json_out).write_bytes(response.content)


def _print_matrix(payload: dict) -> None:
    order = payload["order"]
    width = max((len(a) for a in order), default=1)
    click.echo(f"relation: {payload['kind']}")
    header = " " * (width + 2) + " ".join(a.ljust(width) for a in order)
    click.echo(header)
    for alt, row in zip(order, payload["bits"]):
        cells = " ".join(("x" if bit else ".").ljust(width) for bit in row)
        click.echo(f"{alt.ljust(width)} | {cells}")
    if payload.get("boundary"):
        click.echo(f"boundary pairs: {payload['boundary']}")


def _export_dot(client: ServiceClient, session_id: str, dot_out: str, **params) -> None:
    response = _ok(client.get(f"/sessions/{session_id}/export/dot", params=params))
    if dot_out == "-":
        sys.stdout.write(response.text)
    else:
        Path(dot_out).write_text(response.text)


server_option = click.option("--server", default=None, help="Remote service URL (default: in-process)")
problem_option = click.option("--problem", required=True, type=click.Path(exists=True))
statements_option = click.option("--statements", default=None, type=click.Path(exists=True))
json_option = click.option("--json", "json_out", default=None, help="Write raw response JSON (- for stdout)")
dot_option = click.option("--dot", "dot_out", default=None, help="Write DOT export (- for stdout)")


@click.group()
def main() -> None:
    """Robust ordinal regression over interval evaluations."""


@main.command()
@server_option
@problem_option
def validate(server, problem):
    """Validate a problem file and print its summary."""
    client = ServiceClient(server)
    created = _ok(client.post("/problems", json=_load_json(problem))).json()
    click.echo(
        f"ok: {len(created['alternatives'])} alternatives, "
        f"{len(created['criteria'])} criteria, n={created['n']}"
    )


@main.command()
@server_option
@problem_option
@click.option("--index", default="normal", help="normal|strong|weak|i,k")
@click.option("--collapse", is_flag=True, help="Collapse to 2-point endpoints first")
@json_option
@dot_option
def dominance(server, problem, index, collapse, json_out, dot_out):
    """Print a dominance matrix."""
    client = ServiceClient(server)
    session_id = _make_session(client, problem, None)
    if index in ("normal", "strong", "weak"):
        params = {"kind": index, "collapse": collapse}
    else:
        i, k = (int(p) for p in index.split(","))
        params = {"kind": "ik", "i": i, "k": k, "collapse": collapse}
    response = _ok(client.get(f"/sessions/{session_id}/dominance", params=params))
    _write_outputs(response, json_out)
    if json_out != "-":
        _print_matrix(response.json())
    if dot_out:
        _export_dot(client, session_id, dot_out, relation="dominance", kind=params["kind"],
                    i=params.get("i"), k=params.get("k"), collapse=collapse)


@main.command()
@server_option
@problem_option
@statements_option
@click.option("--relation", "family", type=click.Choice(["necessary", "possible"]), required=True)
@click.option("--index", default="classic", help="classic|strong|weak|i,k")
@json_option
@dot_option
def relations(server, problem, statements, family, index, json_out, dot_out):
    """Print a necessary/possible relation matrix."""
    client = ServiceClient(server)
    session_id = _make_session(client, problem, statements)
    response = _ok(client.get(f"/sessions/{session_id}/relations", params={"family": family, "index": index}))
    _write_outputs(response, json_out)
    if json_out != "-":
        _print_matrix(response.json())
    if dot_out:
        _export_dot(client, session_id, dot_out, relation=family, index=index)


@main.command()
@server_option
@problem_option
@statements_option
@click.option("--outer", type=click.Choice(["N", "P"]), required=True)
@click.option("--inner", type=click.Choice(["N", "P"]), required=True)
@click.option("--dms", required=True, help="Comma-separated coalition of DM ids")
@click.option("--index", default="classic")
@click.option("--exclude-incompatible", is_flag=True)
@json_option
def group(server, problem, statements, outer, inner, dms, index, exclude_incompatible, json_out):
    """Print a group consensus matrix for a coalition."""
    client = ServiceClient(server)
    session_id = _make_session(client, problem, statements)
    response = _ok(
        client.get(
            f"/sessions/{session_id}/group",
            params={
                "outer": outer,
                "inner": inner,
                "dms": dms,
                "index": index,
                "exclude_incompatible": exclude_incompatible,
            },
        )
    )
    _write_outputs(response, json_out)
    if json_out != "-":
        _print_matrix(response.json())


@main.command()
@server_option
@problem_option
@statements_option
@click.option("--sorting", "sorting_file", default=None, type=click.Path(exists=True),
              help="JSON with {classes, examples}; may also live in the problem file")
@click.option("--i", "i", type=int, default=None)
@click.option("--k", "k", type=int, default=None)
@click.option("--joint", is_flag=True, help="Mix ranking statements into the sorting model")
@json_option
def sort(server, problem, statements, sorting_file, i, k, joint, json_out):
    """Print possible/necessary class assignments."""
    client = ServiceClient(server)
    session_id = _make_session(client, problem, statements)
    if sorting_file:
        _ok(client.post(f"/sessions/{session_id}/sorting", json=_load_json(sorting_file)))
    params = {"joint": joint}
    if i is not None:
        params.update({"i": i, "k": k})
    response = _ok(client.get(f"/sessions/{session_id}/sorting", params=params))
    _write_outputs(response, json_out)
    if json_out != "-":
        payload = response.json()
        click.echo(f"classes: {payload['classes']} (epsilon={payload['epsilon']})")
        for alt, cell in payload["assignments"].items():
            click.echo(f"{alt}: possible={cell['possible']} necessary={cell['necessary']}")


@main.command("extreme-ranks")
@server_option
@problem_option
@statements_option
@click.option("--index", default="classic")
@click.option("--i", "i", type=int, default=None)
@click.option("--k", "k", type=int, default=None)
@json_option
def extreme_ranks_cmd(server, problem, statements, index, i, k, json_out):
    """Print the best/worst achievable rank of every alternative."""
    client = ServiceClient(server)
    session_id = _make_session(client, problem, statements)
    if i is not None and k is not None:
        index = f"{i},{k}"
    response = _ok(client.get(f"/sessions/{session_id}/extreme-ranks", params={"index": index}))
    _write_outputs(response, json_out)
    if json_out != "-":
        payload = response.json()
        click.echo(f"index: {payload['index']}")
        for alt, cell in payload["ranks"].items():
            click.echo(f"{alt}: best={cell['best']} worst={cell['worst']}")


@main.command()
@server_option
@problem_option
@statements_option
@click.option("--max-sets", default=10, type=int)
@json_option
def diagnose(server, problem, statements, max_sets, json_out):
    """List minimal statement sets whose removal restores compatibility."""
    client = ServiceClient(server)
    session_id = _make_session(client, problem, statements)
    response = _ok(client.get(f"/sessions/{session_id}/diagnose", params={"max_sets": max_sets}))
    _write_outputs(response, json_out)
    if json_out != "-":
        payload = response.json()
        if payload["compatible"]:
            click.echo("session is compatible; nothing to diagnose")
            return
        for positions in payload["minimal_sets"]:
            names = [payload["statements"][p] for p in positions]
            click.echo(f"remove {positions}: {names}")
        click.echo(f"exhaustive: {payload['exhaustive']}")


@main.command("sweep-credibility")
@server_option
@problem_option
@statements_option
@click.option("--index", default="classic")
@json_option
def sweep_credibility(server, problem, statements, index, json_out):
    """Necessary/possible matrices per cumulative credibility level."""
    client = ServiceClient(server)
    session_id = _make_session(client, problem, statements)
    response = _ok(client.get(f"/sessions/{session_id}/sweep", params={"index": index}))
    _write_outputs(response, json_out)
    if json_out != "-":
        payload = response.json()
        for level in payload["levels"]:
            click.echo(f"-- credibility level {level['level']} (epsilon={level['epsilon']})")
            if level.get("necessary"):
                _print_matrix(level["necessary"])
        if payload.get("incompatible_from") is not None:
            click.echo(f"levels >= {payload['incompatible_from']} are incompatible")


@main.command("check-properties")
@click.option("--problem", default=None, type=click.Path(exists=True))
@click.option("--statements", default=None, type=click.Path(exists=True))
@click.option("--seed", default=0, type=int)
@click.option("--instances", default=50, type=int)
@click.option("--dms", default=3, type=int)
@click.option("--no-group", is_flag=True)
def check_properties(problem, statements, seed, instances, dms, no_group):
    """Run the algebraic law suite on random instances (or one problem file)."""
    from .lp import statement_from_dict
    from .model import validate_table
    from .properties import run_property_suite

    table = None
    stmts = None
    if problem:
        table = validate_table(_load_json(problem))
        stmts = [statement_from_dict(raw) for raw in (_load_json(statements) if statements else [])]
        instances = 1
    report = run_property_suite(
        seed=seed,
        instances=instances,
        dms=dms,
        group_checks=not no_group,
        table=table,
        statements=stmts,
    )
    for line in report.summary_lines():
        click.echo(line)
    total = sum(s.checked for s in report.sections.values())
    bad = sum(len(s.violations) for s in report.sections.values())
    click.echo(f"{report.instances} instances, {total} checks, {bad} violations")
    for section in report.sections.values():
        for violation in section.violations[:20]:
            click.echo(f"  {violation}", err=True)
    if not report.ok:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
@click.option("--data-dir", default=None, type=click.Path())
@click.option("--ui", "ui_dir", default=None, type=click.Path(exists=True),
              help="Serve a built frontend directory at /")
def serve(host, port, data_dir, ui_dir):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app
    from .session import SessionStore

    uvicorn.run(create_app(SessionStore(data_dir), ui_dir=ui_dir), host=host, port=port)


if __name__ == "__main__":
    main()
