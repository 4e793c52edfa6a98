"""Necessary and possible preference queries, batched matrices and credibility sweeps.

Query LPs follow the standard pattern: "a possibly preferred to b" asks whether
the compatible polytope still has strictly positive slack once U(a) >= U(b) is
imposed; "a necessarily preferred to b" asks whether no compatible function makes
b strictly better (the adverse program is infeasible or its slack vanishes).

Matrix computation prunes LP calls with two certificates: dominance implies
necessary, and a failed necessary(b, a) solve certifies possible(a, b).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .dominance import dominance_matrix, IK, NORMAL, STRONG, WEAK
from .errors import IncompatibleSession, IndexOutOfRange
from .lp import (
    DELTA,
    GE,
    CompatibilityResult,
    LpSolver,
    PreferenceStatement,
    Row,
    ValueModel,
    merge_exprs,
    negate_expr,
    rows_for_statements,
)
from .model import PerformanceTable, evaluation_tensor
from .relations import RelationMatrix

CLASSIC = "classic"

Index = str | tuple[int, int]


def canonical_index(index: Index, n: int) -> str | tuple[int, int]:
    """Normalize an index spec: classic stays symbolic, strong/weak become (1,n)/(n,1)."""
    if index == CLASSIC:
        return CLASSIC
    if index == STRONG:
        return (1, n)
    if index == WEAK:
        return (n, 1)
    if isinstance(index, tuple) and len(index) == 2:
        i, k = index
        if not (1 <= i <= n and 1 <= k <= n):
            raise IndexOutOfRange(f"indices ({i},{k}) outside 1..{n}")
        return (i, k)
    raise IndexOutOfRange(f"bad relation index {index!r}")


def _index_tag(index: str | tuple[int, int]) -> str:
    return "" if index == CLASSIC else f"({index[0]},{index[1]})"


class PreferenceEngine:
    """All preference queries for one table and one fixed statement set."""

    def __init__(
        self,
        table: PerformanceTable,
        statements: Sequence[PreferenceStatement] = (),
        solver: LpSolver | None = None,
        delta: float = DELTA,
    ):
        self.table = table
        self.statements = list(statements)
        self.solver = solver or LpSolver()
        self.delta = delta
        self.model = ValueModel(table)
        self.statement_rows = rows_for_statements(self.model, self.statements)
        self._tensor = evaluation_tensor(table)
        self._compat: CompatibilityResult | None = None
        self._matrices: dict[tuple, RelationMatrix] = {}
        self._dominance: dict = {}

    # -- session state -----------------------------------------------------------

    def compatibility(self) -> CompatibilityResult:
        if self._compat is None:
            outcome = self.solver.maximize_epsilon(self.model, self.statement_rows)
            if outcome.status == "infeasible":
                self._compat = CompatibilityResult(False, None, "infeasible")
            else:
                self._compat = CompatibilityResult(
                    outcome.epsilon > self.delta, outcome.epsilon, outcome.status
                )
        return self._compat

    def require_compatible(self) -> None:
        if not self.compatibility().compatible:
            raise IncompatibleSession(
                "no compatible value function; revise or diagnose the statements"
            )

    def dominance(self, index: Index = CLASSIC) -> RelationMatrix:
        idx = canonical_index(index, self.table.n)
        if idx not in self._dominance:
            if idx == CLASSIC:
                mat = dominance_matrix(self.table, NORMAL, tensor=self._tensor)
            else:
                mat = dominance_matrix(self.table, IK, i=idx[0], k=idx[1], tensor=self._tensor)
            self._dominance[idx] = mat
        return self._dominance[idx]

    # -- single pair queries -------------------------------------------------------

    def _expr(self, alt: str, index: str | tuple[int, int], side: int) -> dict[int, float]:
        if index == CLASSIC:
            return self.model.whole_expr(alt)
        return self.model.uniform_expr(alt, index[side])

    def _possible_lp(self, a: str, b: str, index) -> tuple[bool, bool]:
        """Impose U(a) >= U(b) (no epsilon) and test for surviving slack."""
        row = Row(
            name=f"pos[{a},{b}]",
            coeffs=tuple(sorted(merge_exprs(self._expr(a, index, 0), negate_expr(self._expr(b, index, 1))).items())),
            sense=GE,
        )
        outcome = self.solver.maximize_epsilon(self.model, self.statement_rows + [row])
        if outcome.status == "infeasible":
            return False, False
        value = outcome.epsilon
        return value > self.delta, abs(value) <= self.delta

    def _necessary_lp(self, a: str, b: str, index) -> tuple[bool, bool]:
        """Impose U(b) >= U(a) + epsilon; necessity holds iff that program collapses."""
        coeffs = merge_exprs(
            self._expr(b, index, 1), negate_expr(self._expr(a, index, 0)), {self.model.eps: -1.0}
        )
        row = Row(name=f"nec[{a},{b}]", coeffs=tuple(sorted(coeffs.items())), sense=GE)
        outcome = self.solver.maximize_epsilon(self.model, self.statement_rows + [row])
        if outcome.status == "infeasible":
            return True, False
        value = outcome.epsilon
        return value <= self.delta, abs(value) <= self.delta

    def possible(self, a: str, b: str) -> bool:
        self.require_compatible()
        if self.dominance(CLASSIC).holds(a, b):
            return True
        return self._possible_lp(a, b, CLASSIC)[0]

    def necessary(self, a: str, b: str) -> bool:
        self.require_compatible()
        if self.dominance(CLASSIC).holds(a, b):
            return True
        return self._necessary_lp(a, b, CLASSIC)[0]

    def ik_possible(self, a: str, b: str, i: int, k: int) -> bool:
        self.require_compatible()
        idx = canonical_index((i, k), self.table.n)
        if self.dominance(idx).holds(a, b):
            return True
        return self._possible_lp(a, b, idx)[0]

    def ik_necessary(self, a: str, b: str, i: int, k: int) -> bool:
        self.require_compatible()
        idx = canonical_index((i, k), self.table.n)
        if self.dominance(idx).holds(a, b):
            return True
        return self._necessary_lp(a, b, idx)[0]

    # -- full matrices ---------------------------------------------------------

    def relation_matrix(self, family: str, index: Index = CLASSIC) -> RelationMatrix:
        """Full pairwise matrix for one relation; results cached per (family, index)."""
        if family not in ("necessary", "possible"):
            raise ValueError(f"unknown relation family {family!r}")
        self.require_compatible()
        idx = canonical_index(index, self.table.n)
        key = (family, idx)
        if key not in self._matrices:
            if family == "necessary":
                self._matrices[key] = self._necessary_matrix(idx)
            else:
                self._matrices[key] = self._possible_matrix(idx)
        return self._matrices[key]

    def _necessary_matrix(self, idx) -> RelationMatrix:
        order = self.table.alternatives
        size = len(order)
        bits = np.zeros((size, size), dtype=bool)
        boundary: list[tuple[str, str]] = []
        dom = self.dominance(idx)
        for r, a in enumerate(order):
            for c, b in enumerate(order):
                if dom.bits[r, c]:
                    bits[r, c] = True  # dominance certificate, no LP
                    continue
                holds, near = self._necessary_lp(a, b, idx)
                bits[r, c] = holds
                if near:
                    boundary.append((a, b))
        tag = "nec" + _index_tag(idx)
        return RelationMatrix(kind=tag, order=order, bits=bits, boundary=tuple(boundary))

    def _possible_matrix(self, idx) -> RelationMatrix:
        order = self.table.alternatives
        size = len(order)
        # the (k,i)-necessary matrix certifies most possible bits via completeness:
        # not necessary(b, a) implies possible(a, b)
        tidx = CLASSIC if idx == CLASSIC else (idx[1], idx[0])
        nec = self.relation_matrix("necessary", tidx)
        bits = np.zeros((size, size), dtype=bool)
        boundary: list[tuple[str, str]] = []
        dom = self.dominance(idx)
        for r, a in enumerate(order):
            for c, b in enumerate(order):
                if dom.bits[r, c] or not nec.bits[c, r]:
                    bits[r, c] = True
                    continue
                holds, near = self._possible_lp(a, b, idx)
                bits[r, c] = holds
                if near:
                    boundary.append((a, b))
        tag = "pos" + _index_tag(idx)
        return RelationMatrix(kind=tag, order=order, bits=bits, boundary=tuple(boundary))

    def all_relation_matrices(self) -> dict[tuple[str, object], RelationMatrix]:
        """Every (family, index) matrix: classic plus all n^2 index pairs."""
        out = {}
        indices: list[Index] = [CLASSIC] + [
            (i, k) for i in range(1, self.table.n + 1) for k in range(1, self.table.n + 1)
        ]
        for family in ("necessary", "possible"):
            for index in indices:
                idx = canonical_index(index, self.table.n)
                out[(family, idx)] = self.relation_matrix(family, idx)
        return out


@dataclass(frozen=True)
class SweepResult:
    """Per-credibility-level relation matrices; levels from the first incompatible one are absent."""

    levels: tuple[int, ...]
    matrices: Mapping[int, Mapping[str, RelationMatrix]]
    epsilons: Mapping[int, float | None]
    incompatible_from: int | None


def credibility_sweep(
    table: PerformanceTable,
    statements: Sequence[PreferenceStatement],
    index: Index = CLASSIC,
    solver: LpSolver | None = None,
) -> SweepResult:
    """Recompute relations over the cumulative statement sets E_1 within E_2 within ...

    Level t uses every statement with credibility <= t, so necessary matrices
    grow with t and possible matrices shrink.
    """
    solver = solver or LpSolver()
    levels = tuple(sorted({s.credibility for s in statements})) or (1,)
    matrices: dict[int, dict[str, RelationMatrix]] = {}
    epsilons: dict[int, float | None] = {}
    incompatible_from = None
    for t in levels:
        cumulative = [s for s in statements if s.credibility <= t]
        engine = PreferenceEngine(table, cumulative, solver=solver)
        compat = engine.compatibility()
        epsilons[t] = compat.epsilon
        if not compat.compatible:
            incompatible_from = t
            break
        matrices[t] = {
            "necessary": engine.relation_matrix("necessary", index),
            "possible": engine.relation_matrix("possible", index),
        }
    return SweepResult(
        levels=levels,
        matrices=matrices,
        epsilons=epsilons,
        incompatible_from=incompatible_from,
    )
