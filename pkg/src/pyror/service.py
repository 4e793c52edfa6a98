"""HTTP facade over the engines: session upload, statement log, relation queries.

All heavy lifting happens in the core modules; handlers translate query
parameters, consult the per-version result cache and map domain errors onto
{code, message, details} bodies.
"""

from __future__ import annotations

import os
from typing import Any

from fastapi import FastAPI, Query, Response
from fastapi.responses import JSONResponse

from . import schemas
from .dominance import dominance_matrix
from .engine import CLASSIC, credibility_sweep
from .errors import (
    BadVersion,
    DmIncompatible,
    EmptyCoalition,
    IncompatibleSession,
    IncompatibleSorting,
    IndexOutOfRange,
    MilpFailure,
    MissingEvaluationUnsupported,
    NotTransitive,
    RangeUndeclared,
    RorError,
    SolverFailure,
    UnknownAlternative,
    UnknownCriterion,
    UnknownDm,
    UnknownReferenceAlternative,
    UnknownSession,
    ValidationError,
)
from .lp import PreferenceStatement
from .relations import hasse, to_dot
from .robustness import extreme_ranks, find_inconsistencies
from .session import DecisionSession, SessionStore

_STATUS = {
    ValidationError: 422,
    UnknownSession: 404,
    UnknownAlternative: 404,
    UnknownCriterion: 404,
    UnknownDm: 404,
    UnknownReferenceAlternative: 422,
    IndexOutOfRange: 422,
    BadVersion: 422,
    MissingEvaluationUnsupported: 409,
    RangeUndeclared: 409,
    IncompatibleSession: 409,
    IncompatibleSorting: 409,
    EmptyCoalition: 422,
    DmIncompatible: 409,
    NotTransitive: 409,
    SolverFailure: 500,
    MilpFailure: 500,
}


def parse_index(index: str, i: int | None, k: int | None, n: int):
    """Shared index-parameter convention: classic | strong | weak | ik (with i, k) | 'i,k'."""
    if index in (CLASSIC, "strong", "weak"):
        return index if index == CLASSIC else index
    if index == "ik":
        if i is None or k is None:
            raise IndexOutOfRange("index 'ik' requires both i and k")
        return (i, k)
    if "," in index:
        parts = index.split(",")
        if len(parts) == 2:
            try:
                return (int(parts[0]), int(parts[1]))
            except ValueError:
                pass
    raise IndexOutOfRange(f"bad index {index!r}; use classic|strong|weak|i,k")


def _matrix_response(matrix) -> schemas.MatrixResponse:
    return schemas.MatrixResponse(**matrix.to_json_dict())


def create_app(store: SessionStore | None = None, ui_dir: str | None = None) -> FastAPI:
    if store is None:
        store = SessionStore(os.environ.get("PYROR_SESSIONS_DIR") or None)
    app = FastAPI(title="pyror", version="0.1.0")
    app.state.store = store

    @app.exception_handler(RorError)
    async def handle_domain_error(_, exc: RorError):
        status = _STATUS.get(type(exc), 400)
        return JSONResponse(status_code=status, content=exc.as_dict())

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.post("/problems", response_model=schemas.SessionSummary)
    def create_problem(problem: schemas.ProblemRequest):
        session = store.create(problem.model_dump(exclude_none=True))
        return _summary(session)

    def _summary(session: DecisionSession) -> schemas.SessionSummary:
        compat = session.engine().compatibility()
        return schemas.SessionSummary(
            id=session.id,
            version=session.version,
            n=session.table.n,
            alternatives=list(session.table.alternatives),
            criteria=[c.id for c in session.table.criteria],
            reference=list(session.table.reference),
            compatible=compat.compatible,
            epsilon=compat.epsilon,
            statements=[entry.to_dict() for entry in session.log],
            sorting=session.sorting_spec,
        )

    @app.get("/sessions/{session_id}", response_model=schemas.SessionSummary)
    def get_session(session_id: str):
        return _summary(store.get(session_id))

    @app.post("/sessions/{session_id}/statements", response_model=schemas.AddStatementResponse)
    def add_statement(session_id: str, stmt: schemas.StatementIn):
        session = store.get(session_id)
        result = session.add_statement(
            PreferenceStatement(
                kind=stmt.kind,
                alternatives=tuple(stmt.alternatives),
                criterion=stmt.criterion,
                credibility=stmt.credibility,
                author=stmt.author,
            )
        )
        store.save(session)
        return schemas.AddStatementResponse(**result)

    @app.post("/sessions/{session_id}/revert", response_model=schemas.RevertResponse)
    def revert(session_id: str, req: schemas.RevertRequest):
        session = store.get(session_id)
        version = session.revert(req.version)
        store.save(session)
        return schemas.RevertResponse(version=version)

    @app.get("/sessions/{session_id}/dominance", response_model=schemas.MatrixResponse)
    def dominance(
        session_id: str,
        kind: str = Query("normal", pattern="^(normal|strong|weak|ik)$"),
        i: int | None = None,
        k: int | None = None,
        collapse: bool = False,
    ):
        session = store.get(session_id)

        def compute():
            table = session.collapsed_table() if collapse else session.table
            matrix = dominance_matrix(table, kind=kind, i=i, k=k)
            return matrix.to_json_dict()

        params = {"kind": kind, "i": i, "k": k, "collapse": collapse}
        return schemas.MatrixResponse(**session.cached("dominance", params, compute))

    @app.get("/sessions/{session_id}/relations", response_model=schemas.MatrixResponse)
    def relations(
        session_id: str,
        family: str = Query(..., pattern="^(necessary|possible)$"),
        index: str = "classic",
        i: int | None = None,
        k: int | None = None,
    ):
        session = store.get(session_id)
        idx = parse_index(index, i, k, session.table.n)

        def compute():
            return session.engine().relation_matrix(family, idx).to_json_dict()

        params = {"family": family, "index": str(idx)}
        return schemas.MatrixResponse(**session.cached("relations", params, compute))

    @app.get("/sessions/{session_id}/hasse", response_model=schemas.HasseResponse)
    def hasse_view(
        session_id: str,
        family: str = Query(..., pattern="^(necessary|possible)$"),
        index: str = "classic",
        i: int | None = None,
        k: int | None = None,
    ):
        session = store.get(session_id)
        idx = parse_index(index, i, k, session.table.n)

        def compute():
            matrix = session.engine().relation_matrix(family, idx)
            diagram = hasse(matrix)
            return {"kind": matrix.kind, **diagram.to_json_dict()}

        params = {"family": family, "index": str(idx)}
        return schemas.HasseResponse(**session.cached("hasse", params, compute))

    @app.get("/sessions/{session_id}/sweep", response_model=schemas.SweepResponse)
    def sweep(
        session_id: str,
        index: str = "classic",
        i: int | None = None,
        k: int | None = None,
    ):
        session = store.get(session_id)
        idx = parse_index(index, i, k, session.table.n)

        def compute():
            result = credibility_sweep(session.table, session.statements(), idx, solver=session.solver)
            levels = []
            for level in result.levels:
                entry: dict[str, Any] = {"level": level, "epsilon": result.epsilons.get(level)}
                if level in result.matrices:
                    entry["necessary"] = result.matrices[level]["necessary"].to_json_dict()
                    entry["possible"] = result.matrices[level]["possible"].to_json_dict()
                levels.append(entry)
                if result.incompatible_from == level:
                    break
            return {"levels": levels, "incompatible_from": result.incompatible_from}

        params = {"index": str(idx)}
        return schemas.SweepResponse(**session.cached("sweep", params, compute))

    @app.get("/sessions/{session_id}/group", response_model=schemas.MatrixResponse)
    def group(
        session_id: str,
        outer: str = Query(..., pattern="^[NP]$"),
        inner: str = Query(..., pattern="^[NP]$"),
        dms: str = Query(..., description="comma-separated DM ids"),
        index: str = "classic",
        i: int | None = None,
        k: int | None = None,
        exclude_incompatible: bool = False,
    ):
        session = store.get(session_id)
        idx = parse_index(index, i, k, session.table.n)
        coalition = [dm for dm in dms.split(",") if dm]

        def compute():
            gsession = session.group_session()
            matrix = gsession.relation(coalition, outer, inner, idx, exclude_incompatible=exclude_incompatible)
            return matrix.to_json_dict()

        params = {
            "outer": outer,
            "inner": inner,
            "dms": ",".join(coalition),
            "index": str(idx),
            "exclude": exclude_incompatible,
        }
        return schemas.MatrixResponse(**session.cached("group", params, compute))

    @app.post("/sessions/{session_id}/sorting", response_model=schemas.SessionSummary)
    def set_sorting(session_id: str, spec: schemas.SortingSpecIn):
        session = store.get(session_id)
        session.set_sorting(spec.model_dump())
        store.save(session)
        return _summary(session)

    @app.get("/sessions/{session_id}/sorting", response_model=schemas.SortingResponse)
    def sorting(
        session_id: str,
        i: int | None = None,
        k: int | None = None,
        joint: bool = False,
    ):
        session = store.get(session_id)

        def compute():
            engine = session.sorting_engine(joint=joint)
            compat = engine.compatibility()
            assignments = engine.assignment_table(i, k) if compat.compatible else {}
            return {
                "classes": list(engine.classes.labels),
                "compatible": compat.compatible,
                "epsilon": compat.epsilon,
                "assignments": assignments,
            }

        params = {"i": i, "k": k, "joint": joint, "spec": session.sorting_spec}
        return schemas.SortingResponse(**session.cached("sorting", params, compute))

    @app.get("/sessions/{session_id}/extreme-ranks", response_model=schemas.ExtremeRanksResponse)
    def ranks(
        session_id: str,
        index: str = "classic",
        i: int | None = None,
        k: int | None = None,
        alt: str | None = None,
    ):
        session = store.get(session_id)
        idx = parse_index(index, i, k, session.table.n)

        def compute():
            engine = session.engine()
            targets = [alt] if alt else list(session.table.alternatives)
            out = {}
            for name in targets:
                if name not in session.table.evaluations:
                    raise UnknownAlternative(f"unknown alternative {name!r}")
                ival = (
                    extreme_ranks(engine, name)
                    if idx == CLASSIC
                    else extreme_ranks(engine, name, idx[0], idx[1])
                )
                out[name] = {"best": ival.best, "worst": ival.worst}
            return {"index": str(idx), "ranks": out}

        params = {"index": str(idx), "alt": alt}
        return schemas.ExtremeRanksResponse(**session.cached("extreme-ranks", params, compute))

    @app.get("/sessions/{session_id}/diagnose", response_model=schemas.DiagnoseResponse)
    def diagnose(session_id: str, max_sets: int = 10, budget_seconds: float = 30.0):
        session = store.get(session_id)

        def compute():
            compat = session.engine().compatibility()
            if compat.compatible:
                return {
                    "compatible": True,
                    "minimal_sets": [],
                    "exhaustive": True,
                    "statements": [e.statement.describe() for e in session.log],
                }
            report = find_inconsistencies(
                session.table,
                session.statements(),
                max_sets=max_sets,
                budget_seconds=budget_seconds,
                solver=session.solver,
            )
            return {
                "compatible": False,
                "minimal_sets": [list(s) for s in report.minimal_sets],
                "exhaustive": report.exhaustive,
                "statements": [e.statement.describe() for e in session.log],
            }

        params = {"max_sets": max_sets}
        return schemas.DiagnoseResponse(**session.cached("diagnose", params, compute))

    @app.get("/sessions/{session_id}/export/dot")
    def export_dot(
        session_id: str,
        relation: str = Query(..., pattern="^(necessary|possible|dominance)$"),
        index: str = "classic",
        i: int | None = None,
        k: int | None = None,
        kind: str = "normal",
        reduced: bool = True,
        collapse: bool = False,
    ):
        session = store.get(session_id)

        def compute():
            if relation == "dominance":
                table = session.collapsed_table() if collapse else session.table
                matrix = dominance_matrix(table, kind=kind, i=i, k=k)
            else:
                idx = parse_index(index, i, k, session.table.n)
                matrix = session.engine().relation_matrix(relation, idx)
            return to_dot(matrix, reduced=reduced)

        params = {
            "relation": relation,
            "index": index,
            "i": i,
            "k": k,
            "kind": kind,
            "reduced": reduced,
            "collapse": collapse,
        }
        text = session.cached("dot", params, compute)
        return Response(content=text, media_type="text/vnd.graphviz")

    ui_root = ui_dir or os.environ.get("PYROR_UI_DIR")
    if ui_root:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_root, html=True), name="ui")

    return app


app = create_app()
