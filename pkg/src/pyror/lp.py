"""Variable grid, base constraint set, statement translation and the LP solve.

One sub-marginal value function per (criterion, point-index) pair, evaluated at
the characteristic values actually occurring in the table.  The model is the
classic disaggregation LP: monotonicity + anchoring + normalization rows, DM
statements weakened by an auxiliary epsilon that the solve maximizes.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Any, Mapping, Sequence

import numpy as np
from scipy import sparse
from scipy.optimize import Bounds, LinearConstraint, linprog, milp

from .errors import (
    MilpFailure,
    MissingEvaluationUnsupported,
    SolverFailure,
    UnknownReferenceAlternative,
    ValidationError,
    Violation,
)
from .model import PerformanceTable, Realization

#: strictness threshold on the normalized [0, 1] value scale
DELTA = 1e-6
#: cap keeping "maximize epsilon" bounded when no strict statement rows exist
EPS_CAP = 1.0

_SOLVER_OPTIONS = {
    "primal_feasibility_tolerance": 1e-9,
    "dual_feasibility_tolerance": 1e-9,
}

# indicator constraints sit at the delta threshold, so integer feasibility must
# be resolved well below it
_MILP_OPTIONS = {
    "primal_feasibility_tolerance": 1e-9,
    "dual_feasibility_tolerance": 1e-9,
    "mip_feasibility_tolerance": 1e-9,
}

GE, LE, EQ = ">=", "<=", "=="

STATEMENT_KINDS = (
    "holistic-strict",
    "holistic-indiff",
    "intensity-strict",
    "intensity-indiff",
    "marginal-strict",
    "marginal-indiff",
    "marginal-intensity-strict",
    "marginal-intensity-indiff",
)


@dataclass(frozen=True)
class PreferenceStatement:
    """One DM assertion about reference alternatives.

    Holistic and marginal kinds take 2 operands, intensity kinds 4 (read as:
    first is preferred to second at least as much as third to fourth).
    Credibility 1 is the most credible level.
    """

    kind: str
    alternatives: tuple[str, ...]
    criterion: str | None = None
    credibility: int = 1
    author: str = "dm"

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))

    @property
    def strict(self) -> bool:
        return self.kind.endswith("-strict")

    @property
    def marginal(self) -> bool:
        return self.kind.startswith("marginal")

    @property
    def intensity(self) -> bool:
        return "intensity" in self.kind

    def describe(self) -> str:
        rel = ">" if self.strict else "~"
        crit = f" on {self.criterion}" if self.marginal else ""
        if self.intensity:
            a, b, c, d = self.alternatives
            return f"({a} {rel} {b}) {rel}* ({c} {rel} {d}){crit}"
        a, b = self.alternatives
        return f"{a} {rel} {b}{crit}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "alternatives": list(self.alternatives),
            "criterion": self.criterion,
            "credibility": self.credibility,
            "author": self.author,
        }


def statement_from_dict(raw: Mapping[str, Any]) -> PreferenceStatement:
    try:
        return PreferenceStatement(
            kind=raw["kind"],
            alternatives=tuple(raw["alternatives"]),
            criterion=raw.get("criterion"),
            credibility=int(raw.get("credibility", 1)),
            author=str(raw.get("author", "dm")),
        )
    except (KeyError, TypeError) as exc:
        raise ValidationError(
            [Violation("statement", "malformed", f"bad statement payload: {exc}")]
        ) from exc


def validate_statement(table: PerformanceTable, stmt: PreferenceStatement) -> None:
    violations: list[Violation] = []
    if stmt.kind not in STATEMENT_KINDS:
        violations.append(Violation("kind", "unknown-kind", f"unknown statement kind {stmt.kind!r}"))
        raise ValidationError(violations)
    want = 4 if stmt.intensity else 2
    if len(stmt.alternatives) != want:
        violations.append(
            Violation("alternatives", "arity", f"{stmt.kind} takes {want} alternatives")
        )
    for alt in stmt.alternatives:
        if alt not in table.reference:
            raise UnknownReferenceAlternative(
                f"{alt!r} is not a reference alternative"
            )
    if stmt.marginal:
        if stmt.criterion is None or all(c.id != stmt.criterion for c in table.criteria):
            violations.append(
                Violation("criterion", "unknown-criterion", f"unknown criterion {stmt.criterion!r}")
            )
    if stmt.credibility < 1:
        violations.append(Violation("credibility", "bad-level", "credibility must be >= 1"))
    if violations:
        raise ValidationError(violations)


@dataclass(frozen=True)
class CharacteristicGrid:
    """Per criterion: the sorted distinct values taken by any indicator of any alternative."""

    levels: tuple[tuple[float, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(l) for l in self.levels)

    def slot(self, j: int, value: float) -> int:
        # exact membership; grid values are never snapped
        try:
            return self.levels[j].index(value)
        except ValueError:
            raise KeyError(f"value {value} not on the grid of criterion {j}") from None


def build_grid(table: PerformanceTable) -> CharacteristicGrid:
    if table.has_missing():
        raise MissingEvaluationUnsupported(
            "table has missing evaluations; collapse to 2 points first"
        )
    levels = []
    for j in range(table.m):
        values = {ev.points[i] for a in table.alternatives for ev in [table.row(a)[j]] for i in range(table.n)}
        levels.append(tuple(sorted(values)))
    return CharacteristicGrid(levels=tuple(levels))


@dataclass(frozen=True)
class Row:
    """One sparse constraint row: coeffs . x  <sense>  rhs."""

    name: str
    coeffs: tuple[tuple[int, float], ...]
    sense: str
    rhs: float = 0.0


def merge_exprs(*exprs: Mapping[int, float]) -> dict[int, float]:
    out: dict[int, float] = {}
    for expr in exprs:
        for var, coef in expr.items():
            out[var] = out.get(var, 0.0) + coef
    return {v: c for v, c in out.items() if c != 0.0}


def negate_expr(expr: Mapping[int, float]) -> dict[int, float]:
    return {v: -c for v, c in expr.items()}


class ValueModel:
    """LP variables u_{j,i}(x_j^k) plus epsilon, with the base constraint rows."""

    def __init__(self, table: PerformanceTable, grid: CharacteristicGrid | None = None):
        self.table = table
        self.grid = grid or build_grid(table)
        self.n = table.n
        sizes = self.grid.sizes
        self._offsets: list[list[int]] = []
        pos = 0
        for j in range(table.m):
            row = []
            for _ in range(self.n):
                row.append(pos)
                pos += sizes[j]
            self._offsets.append(row)
        self.num_u = pos
        self.eps = pos  # epsilon is the last variable
        self.num_vars = pos + 1
        self.base_rows = self._build_base_rows()

    # -- variables -------------------------------------------------------------

    def var(self, j: int, i: int, slot: int) -> int:
        """0-based index of u_{j,i}(x_j^slot); i and slot are 0-based here."""
        return self._offsets[j][i] + slot

    def value_var(self, j: int, i: int, value: float) -> int:
        return self.var(j, i, self.grid.slot(j, value))

    def var_name(self, idx: int) -> str:
        if idx == self.eps:
            return "eps"
        for j in range(self.table.m):
            for i in range(self.n):
                start = self._offsets[j][i]
                if start <= idx < start + self.grid.sizes[j]:
                    return f"u[{self.table.criteria[j].id},{i + 1}]({self.grid.levels[j][idx - start]:g})"
        raise IndexError(idx)

    def _build_base_rows(self) -> list[Row]:
        rows: list[Row] = []
        for j in range(self.table.m):
            for i in range(self.n):
                for k in range(1, self.grid.sizes[j]):
                    rows.append(
                        Row(
                            name=f"mono[{j},{i},{k}]",
                            coeffs=((self.var(j, i, k), 1.0), (self.var(j, i, k - 1), -1.0)),
                            sense=GE,
                        )
                    )
        for j in range(self.table.m):
            for i in range(self.n):
                rows.append(Row(name=f"anchor[{j},{i}]", coeffs=((self.var(j, i, 0), 1.0),), sense=EQ))
        top = tuple(
            (self.var(j, i, self.grid.sizes[j] - 1), 1.0)
            for j in range(self.table.m)
            for i in range(self.n)
        )
        rows.append(Row(name="normalization", coeffs=top, sense=EQ, rhs=1.0))
        return rows

    # -- linear expressions ------------------------------------------------------

    def whole_expr(self, alt: str) -> dict[int, float]:
        """U(a): each sub-marginal evaluated at its own indicator value."""
        expr: dict[int, float] = {}
        for j in range(self.table.m):
            for i in range(self.n):
                v = self.value_var(j, i, self.table.indicator(alt, j, i + 1))
                expr[v] = expr.get(v, 0.0) + 1.0
        return expr

    def uniform_expr(self, alt: str, i: int) -> dict[int, float]:
        """U(a^(i)): every sub-marginal evaluated at the i-th indicator value (i is 1-based)."""
        expr: dict[int, float] = {}
        for j in range(self.table.m):
            value = self.table.indicator(alt, j, i)
            for r in range(self.n):
                v = self.value_var(j, r, value)
                expr[v] = expr.get(v, 0.0) + 1.0
        return expr

    def vector_expr(self, alt: str, indices: Sequence[int]) -> dict[int, float]:
        expr: dict[int, float] = {}
        for j, idx in enumerate(indices):
            value = self.table.indicator(alt, j, idx)
            for r in range(self.n):
                v = self.value_var(j, r, value)
                expr[v] = expr.get(v, 0.0) + 1.0
        return expr

    def marginal_expr(self, alt: str, criterion_id: str) -> dict[int, float]:
        """U_j(a): the one-criterion slice of U(a)."""
        j = self.table.criterion_index(criterion_id)
        expr: dict[int, float] = {}
        for i in range(self.n):
            v = self.value_var(j, i, self.table.indicator(alt, j, i + 1))
            expr[v] = expr.get(v, 0.0) + 1.0
        return expr

    def realization_expr(self, r: Realization) -> dict[int, float]:
        if r.index is not None:
            return self.uniform_expr(r.base, r.index)
        return self.vector_expr(r.base, r.indices)

    def evaluate(self, expr: Mapping[int, float], x: np.ndarray) -> float:
        return float(sum(coef * x[var] for var, coef in expr.items()))


def statement_rows(model: ValueModel, stmt: PreferenceStatement, tag: str) -> list[Row]:
    """Translate one statement into constraint rows (strict kinds consume epsilon)."""
    validate_statement(model.table, stmt)
    if stmt.marginal:
        expr = lambda alt: model.marginal_expr(alt, stmt.criterion)  # noqa: E731
    else:
        expr = model.whole_expr
    if stmt.intensity:
        a, b, c, d = stmt.alternatives
        lhs = merge_exprs(expr(a), negate_expr(expr(b)), negate_expr(expr(c)), expr(d))
    else:
        a, b = stmt.alternatives
        lhs = merge_exprs(expr(a), negate_expr(expr(b)))
    if stmt.strict:
        coeffs = merge_exprs(lhs, {model.eps: -1.0})
        return [Row(name=tag, coeffs=tuple(sorted(coeffs.items())), sense=GE)]
    return [Row(name=tag, coeffs=tuple(sorted(lhs.items())), sense=EQ)]


def rows_for_statements(model: ValueModel, statements: Sequence[PreferenceStatement]) -> list[Row]:
    rows: list[Row] = []
    for idx, stmt in enumerate(statements):
        rows.extend(statement_rows(model, stmt, tag=f"stmt[{idx}]"))
    return rows


@dataclass(frozen=True)
class LpOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    epsilon: float | None = None
    x: np.ndarray | None = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def assemble(
    model: ValueModel, rows: Sequence[Row]
) -> tuple[sparse.csr_matrix, np.ndarray, sparse.csr_matrix | None, np.ndarray | None]:
    """Split rows into (A_ub, b_ub, A_eq, b_eq); GE rows are negated into LE form."""
    ub_data: list[float] = []
    ub_rows: list[int] = []
    ub_cols: list[int] = []
    b_ub: list[float] = []
    eq_data: list[float] = []
    eq_rows: list[int] = []
    eq_cols: list[int] = []
    b_eq: list[float] = []
    for row in rows:
        if row.sense == EQ:
            r = len(b_eq)
            for var, coef in row.coeffs:
                eq_rows.append(r)
                eq_cols.append(var)
                eq_data.append(coef)
            b_eq.append(row.rhs)
        else:
            flip = -1.0 if row.sense == GE else 1.0
            r = len(b_ub)
            for var, coef in row.coeffs:
                ub_rows.append(r)
                ub_cols.append(var)
                ub_data.append(flip * coef)
            b_ub.append(flip * row.rhs)
    nv = model.num_vars
    A_ub = sparse.csr_matrix((ub_data, (ub_rows, ub_cols)), shape=(len(b_ub), nv))
    A_eq = (
        sparse.csr_matrix((eq_data, (eq_rows, eq_cols)), shape=(len(b_eq), nv))
        if b_eq
        else None
    )
    return A_ub, np.array(b_ub), A_eq, (np.array(b_eq) if b_eq else None)


class LpSolver:
    """Deterministic LP/MILP backend (HiGHS) behind a sparse-row contract.

    Counts calls so certificate paths (answers with zero solves) are checkable.
    """

    def __init__(self):
        self.lp_calls = 0
        self.milp_calls = 0

    def _bounds(self, model: ValueModel) -> list[tuple[float | None, float]]:
        # u values live in [0, 1] by anchoring + normalization; epsilon may go negative
        return [(0.0, 1.0)] * model.num_u + [(None, EPS_CAP)]

    def maximize(
        self, model: ValueModel, rows: Sequence[Row], objective: Mapping[int, float]
    ) -> LpOutcome:
        """Maximize a linear objective over the base polytope plus `rows`."""
        self.lp_calls += 1
        all_rows = list(model.base_rows) + list(rows)
        A_ub, b_ub, A_eq, b_eq = assemble(model, all_rows)
        c = np.zeros(model.num_vars)
        for var, coef in objective.items():
            c[var] = -coef  # linprog minimizes
        res = linprog(
            c,
            A_ub=A_ub,
            b_ub=b_ub,
            A_eq=A_eq,
            b_eq=b_eq,
            bounds=self._bounds(model),
            method="highs",
            options=dict(_SOLVER_OPTIONS),
        )
        if res.status == 0:
            return LpOutcome(status="optimal", epsilon=float(res.x[model.eps]), x=res.x)
        if res.status == 2:
            return LpOutcome(status="infeasible")
        if res.status == 3:
            return LpOutcome(status="unbounded")
        raise SolverFailure(f"LP solve failed: {res.message}")

    def maximize_epsilon(self, model: ValueModel, rows: Sequence[Row]) -> LpOutcome:
        return self.maximize(model, rows, {model.eps: 1.0})

    def solve_milp(
        self,
        c: np.ndarray,
        constraints: list[LinearConstraint],
        integrality: np.ndarray,
        lb: np.ndarray,
        ub: np.ndarray,
    ) -> Any:
        """Minimize c.x; returns the scipy result, raising MilpFailure on breakdowns."""
        self.milp_calls += 1
        with warnings.catch_warnings():
            # scipy forwards non-standard option names to HiGHS with a warning
            warnings.simplefilter("ignore", RuntimeWarning)
            res = milp(
                c=c,
                constraints=constraints,
                integrality=integrality,
                bounds=Bounds(lb=lb, ub=ub),
                options=dict(_MILP_OPTIONS),
            )
        if res.status in (0, 2):  # optimal / infeasible
            return res
        raise MilpFailure(f"MILP solve failed: {res.message}")


@dataclass(frozen=True)
class CompatibilityResult:
    compatible: bool
    epsilon: float | None
    status: str


def check_compatibility(
    table: PerformanceTable,
    statements: Sequence[PreferenceStatement],
    solver: LpSolver | None = None,
    model: ValueModel | None = None,
    extra_rows: Sequence[Row] = (),
    delta: float = DELTA,
) -> CompatibilityResult:
    """A compatible value function exists iff max epsilon stays above the threshold."""
    solver = solver or LpSolver()
    model = model or ValueModel(table)
    rows = rows_for_statements(model, statements) + list(extra_rows)
    outcome = solver.maximize_epsilon(model, rows)
    if outcome.status == "infeasible":
        return CompatibilityResult(compatible=False, epsilon=None, status="infeasible")
    if outcome.status == "unbounded":  # cannot happen with the epsilon cap, kept for the contract
        return CompatibilityResult(compatible=True, epsilon=EPS_CAP, status="unbounded")
    return CompatibilityResult(
        compatible=outcome.epsilon > delta, epsilon=outcome.epsilon, status="optimal"
    )


def lp_text(model: ValueModel, rows: Sequence[Row]) -> str:
    """Readable dump of the LP (base + given rows) for external verification."""
    lines = ["maximize eps", "subject to"]
    for row in list(model.base_rows) + list(rows):
        terms = " + ".join(
            f"{coef:g}*{model.var_name(var)}" for var, coef in row.coeffs
        ).replace("+ -", "- ")
        lines.append(f"  {row.name}: {terms} {row.sense} {row.rhs:g}")
    lines.append("bounds: 0 <= u <= 1, eps <= 1 (free below)")
    return "\n".join(lines) + "\n"
