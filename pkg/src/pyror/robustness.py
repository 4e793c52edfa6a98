"""Extreme ranking analysis and diagnosis of inconsistent statement sets.

Extreme ranks are exact: a mixed-integer program counts, over all compatible
value functions, how few / how many alternatives can score strictly above the
queried one.  Inconsistency diagnosis relaxes each statement with a binary
switch and enumerates minimum-cardinality removal sets that restore a
compatible model, excluding supersets of already-found sets.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import sparse
from scipy.optimize import LinearConstraint

from .engine import CLASSIC, PreferenceEngine, canonical_index
from .errors import IncompatibleSession
from .lp import (
    DELTA,
    EPS_CAP,
    EQ,
    GE,
    LpSolver,
    PreferenceStatement,
    Row,
    ValueModel,
    assemble,
    check_compatibility,
    rows_for_statements,
)
from .model import PerformanceTable

BIG_M = 2.0  # all utilities live in [0, 1], so any statement row violation is < 2

# The diagnosis MILP must certify restored slack far above the integer solver's
# feasibility tolerance (1e-6), or relaxation binaries can be faked to zero by
# spreading tolerance over a cycle.  Candidates are re-verified by exact LP.
MILP_EPS_FLOOR = 1e-4


@dataclass(frozen=True)
class RankInterval:
    best: int
    worst: int


def _two_sided(model: ValueModel, rows: Sequence[Row], extra_cols: int):
    """Base + given rows as a (A, lb, ub) triple padded with `extra_cols` zero columns."""
    A_ub, b_ub, A_eq, b_eq = assemble(model, list(model.base_rows) + list(rows))
    blocks = [A_ub]
    lbs = [np.full(A_ub.shape[0], -np.inf)]
    ubs = [b_ub]
    if A_eq is not None:
        blocks.append(A_eq)
        lbs.append(b_eq)
        ubs.append(b_eq)
    A = sparse.vstack(blocks, format="csr")
    if extra_cols:
        pad = sparse.csr_matrix((A.shape[0], extra_cols))
        A = sparse.hstack([A, pad], format="csr")
    return A, np.concatenate(lbs), np.concatenate(ubs)


def extreme_ranks(
    engine: PreferenceEngine,
    alt: str,
    i: int | None = None,
    k: int | None = None,
) -> RankInterval:
    """Best and worst rank of `alt` over all compatible value functions.

    The rank of a under U is 1 + |{b != a : U(b) > U(a)}| (competition ranking);
    indexed queries compare U(a^(i)) against each U(b^(k)).
    """
    engine.require_compatible()
    model = engine.model
    table = engine.table
    idx = CLASSIC if i is None else canonical_index((i, k), table.n)

    if idx == CLASSIC:
        expr_a = model.whole_expr(alt)
        others = [(b, model.whole_expr(b)) for b in table.alternatives if b != alt]
    else:
        expr_a = model.uniform_expr(alt, idx[0])
        others = [(b, model.uniform_expr(b, idx[1])) for b in table.alternatives if b != alt]

    nv = model.num_vars
    nb = len(others)
    base_A, base_lb, base_ub = _two_sided(model, engine.statement_rows, extra_cols=nb)

    lb = np.concatenate([np.zeros(model.num_u), [engine.delta], np.zeros(nb)])
    ub = np.concatenate([np.ones(model.num_u), [EPS_CAP], np.ones(nb)])
    integrality = np.concatenate([np.zeros(nv), np.ones(nb)])

    def diff_row(expr_b, y_col: int, y_coef: float) -> np.ndarray:
        row = np.zeros(nv + nb)
        for var, coef in expr_b.items():
            row[var] += coef
        for var, coef in expr_a.items():
            row[var] -= coef
        row[nv + y_col] = y_coef
        return row

    def solve(kind: str) -> int:
        rows = []
        lo = []
        hi = []
        for col, (_, expr_b) in enumerate(others):
            if kind == "best":
                # y_b = 0 forces U(b) <= U(a) + delta: wins are counted delta-strictly
                rows.append(diff_row(expr_b, col, -BIG_M))
                lo.append(-np.inf)
                hi.append(engine.delta)
            else:
                # y_b = 1 forces U(b) >= U(a) + delta: maximizing counts achievable wins
                rows.append(diff_row(expr_b, col, -(BIG_M + engine.delta)))
                lo.append(-BIG_M)
                hi.append(np.inf)
        A = sparse.vstack([base_A, sparse.csr_matrix(np.array(rows))], format="csr")
        constraint = LinearConstraint(A, np.concatenate([base_lb, lo]), np.concatenate([base_ub, hi]))
        c = np.zeros(nv + nb)
        c[nv:] = 1.0 if kind == "best" else -1.0
        res = engine.solver.solve_milp(c, [constraint], integrality, lb, ub)
        if res.status != 0:
            raise IncompatibleSession("rank program infeasible; session is not compatible")
        return 1 + int(round(float(np.sum(res.x[nv:]))))

    return RankInterval(best=solve("best"), worst=solve("worst"))


def sample_compatible_values(
    engine: PreferenceEngine,
    count: int,
    rng: np.random.Generator,
) -> list[np.ndarray]:
    """Vertices of the compatible polytope found by randomized LP objectives."""
    engine.require_compatible()
    model = engine.model
    floor = Row(
        name="eps-floor",
        coeffs=((model.eps, 1.0),),
        sense=GE,
        rhs=engine.delta,
    )
    points = []
    for _ in range(count):
        objective = {var: float(c) for var, c in enumerate(rng.normal(size=model.num_u))}
        outcome = engine.solver.maximize(model, engine.statement_rows + [floor], objective)
        if outcome.optimal:
            points.append(outcome.x)
    return points


def ranks_at_point(
    engine: PreferenceEngine,
    x: np.ndarray,
    i: int | None = None,
    k: int | None = None,
    delta: float = DELTA,
) -> dict[str, int]:
    """Competition ranks induced by one value-function sample."""
    model = engine.model
    table = engine.table
    idx = CLASSIC if i is None else canonical_index((i, k), table.n)
    if idx == CLASSIC:
        scores = {alt: model.evaluate(model.whole_expr(alt), x) for alt in table.alternatives}
        own = scores
    else:
        scores = {alt: model.evaluate(model.uniform_expr(alt, idx[1]), x) for alt in table.alternatives}
        own = {alt: model.evaluate(model.uniform_expr(alt, idx[0]), x) for alt in table.alternatives}
    return {
        a: 1 + sum(1 for b in table.alternatives if b != a and scores[b] > own[a] + delta)
        for a in table.alternatives
    }


@dataclass(frozen=True)
class InconsistencyReport:
    """Minimal statement sets (by log position) whose removal restores compatibility."""

    minimal_sets: tuple[tuple[int, ...], ...]
    exhaustive: bool


def find_inconsistencies(
    table: PerformanceTable,
    statements: Sequence[PreferenceStatement],
    max_sets: int = 10,
    budget_seconds: float = 30.0,
    solver: LpSolver | None = None,
    delta: float = DELTA,
) -> InconsistencyReport:
    """Enumerate minimal inconsistent statement sets, smallest first.

    Each relaxation binary v_s lifts statement s's rows by BIG_M; minimizing the
    relaxed count yields one minimal set per solve, and a cut excluding its
    supersets drives the enumeration.  Ties in cardinality break toward
    statements appearing earlier in the log.
    """
    solver = solver or LpSolver()
    if check_compatibility(table, statements, solver=solver).compatible:
        return InconsistencyReport(minimal_sets=(), exhaustive=True)

    model = ValueModel(table)
    stmt_rows = rows_for_statements(model, statements)
    ns = len(statements)
    nv = model.num_vars

    base_A, base_lb, base_ub = _two_sided(model, [], extra_cols=ns)

    rows = []
    lo = []
    hi = []
    for s, row in enumerate(stmt_rows):
        dense = np.zeros(nv + ns)
        for var, coef in row.coeffs:
            dense[var] = coef
        if row.sense == GE:
            relaxed = dense.copy()
            relaxed[nv + s] = BIG_M
            rows.append(relaxed)
            lo.append(row.rhs)
            hi.append(np.inf)
        elif row.sense == EQ:
            up = dense.copy()
            up[nv + s] = -BIG_M
            rows.append(up)
            lo.append(-np.inf)
            hi.append(row.rhs)
            down = dense.copy()
            down[nv + s] = BIG_M
            rows.append(down)
            lo.append(row.rhs)
            hi.append(np.inf)

    A = sparse.vstack([base_A, sparse.csr_matrix(np.array(rows))], format="csr")
    con_lo = np.concatenate([base_lb, lo])
    con_hi = np.concatenate([base_ub, hi])

    lb = np.concatenate([np.zeros(model.num_u), [max(delta, MILP_EPS_FLOOR)], np.zeros(ns)])
    ub = np.concatenate([np.ones(model.num_u), [EPS_CAP], np.ones(ns)])
    integrality = np.concatenate([np.zeros(nv), np.ones(ns)])

    # cardinality dominates; the binary-weighted rebate prefers earlier statements
    c = np.zeros(nv + ns)
    for s in range(ns):
        c[nv + s] = 1.0 - 0.5 ** (s + 1)

    cuts: list[LinearConstraint] = []
    found: list[tuple[int, ...]] = []
    deadline = time.monotonic() + budget_seconds
    exhausted = False

    while len(found) < max_sets and time.monotonic() < deadline:
        res = solver.solve_milp(c, [LinearConstraint(A, con_lo, con_hi)] + cuts, integrality, lb, ub)
        if res.status == 2:
            exhausted = True
            break
        chosen = tuple(s for s in range(ns) if res.x[nv + s] > 0.5)
        if not chosen:
            break
        kept = [stmt for s, stmt in enumerate(statements) if s not in chosen]
        cut_row = np.zeros(nv + ns)
        if check_compatibility(table, kept, solver=solver).compatible:
            found.append(chosen)
            # exclude this set and every superset
            for s in chosen:
                cut_row[nv + s] = 1.0
            cuts.append(LinearConstraint(sparse.csr_matrix(cut_row), -np.inf, len(chosen) - 1))
        else:
            # near-threshold artifact: exclude exactly this assignment and continue
            for s in range(ns):
                cut_row[nv + s] = 1.0 if s in chosen else -1.0
            cuts.append(LinearConstraint(sparse.csr_matrix(cut_row), -np.inf, len(chosen) - 1))

    return InconsistencyReport(minimal_sets=tuple(found), exhaustive=exhausted)
