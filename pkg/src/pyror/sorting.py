"""Example-based sorting: assignment compatibility and possible/necessary class intervals.

A value function is sorting-compatible when every pair of reference assignments
with disjointly ordered class intervals gets strictly ordered utilities.  Each
compatible function then assigns any alternative an interval of classes; the
possible assignment is the union of those intervals over all compatible
functions, the necessary assignment their intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .engine import CLASSIC, canonical_index
from .errors import IncompatibleSorting, ValidationError, Violation
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
from .model import PerformanceTable


@dataclass(frozen=True)
class ClassStructure:
    """Ordered classes, worst to best."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) < 2:
            raise ValidationError([Violation("classes", "too-few", "need at least 2 classes")])
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError([Violation("classes", "duplicate", "class labels must be unique")])

    @property
    def p(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class AssignmentExample:
    """DM's exemplary assignment: alternative belongs between classes low..high (1-based)."""

    alternative: str
    low: int
    high: int


def validate_examples(
    table: PerformanceTable, classes: ClassStructure, examples: Sequence[AssignmentExample]
) -> None:
    violations = []
    for pos, ex in enumerate(examples):
        where = f"examples[{pos}]"
        if ex.alternative not in table.evaluations:
            violations.append(Violation(where, "unknown-alternative", f"unknown alternative {ex.alternative!r}"))
        if not (1 <= ex.low <= ex.high <= classes.p):
            violations.append(
                Violation(where, "bad-interval", f"need 1 <= low <= high <= {classes.p}, got [{ex.low},{ex.high}]")
            )
    if violations:
        raise ValidationError(violations)


class SortingEngine:
    """Assignment queries for one table, class structure and example set.

    Ranking statements are kept out of the model unless passed explicitly
    (a joint session mixes both constraint families on request).
    """

    def __init__(
        self,
        table: PerformanceTable,
        classes: ClassStructure,
        examples: Sequence[AssignmentExample] = (),
        statements: Sequence[PreferenceStatement] = (),
        solver: LpSolver | None = None,
        delta: float = DELTA,
    ):
        validate_examples(table, classes, examples)
        self.table = table
        self.classes = classes
        self.examples = list(examples)
        self.solver = solver or LpSolver()
        self.delta = delta
        self.model = ValueModel(table)
        self.base_rows = rows_for_statements(self.model, statements) + self._cvf_rows()
        self._compat: CompatibilityResult | None = None

    def _cvf_rows(self) -> list[Row]:
        # disjointly lower examples must get strictly lower utility
        rows: list[Row] = []
        for upper in self.examples:
            for lower in self.examples:
                if upper.low > lower.high:
                    coeffs = merge_exprs(
                        self.model.whole_expr(upper.alternative),
                        negate_expr(self.model.whole_expr(lower.alternative)),
                        {self.model.eps: -1.0},
                    )
                    rows.append(
                        Row(
                            name=f"cvf[{upper.alternative}>{lower.alternative}]",
                            coeffs=tuple(sorted(coeffs.items())),
                            sense=GE,
                        )
                    )
        return rows

    # -- compatibility ----------------------------------------------------------

    def compatibility(self) -> CompatibilityResult:
        if self._compat is None:
            outcome = self.solver.maximize_epsilon(self.model, self.base_rows)
            if outcome.status == "infeasible":
                self._compat = CompatibilityResult(False, None, "infeasible")
            else:
                self._compat = CompatibilityResult(
                    outcome.epsilon > self.delta, outcome.epsilon, outcome.status
                )
        return self._compat

    def require_compatible(self) -> None:
        if not self.compatibility().compatible:
            raise IncompatibleSorting("assignment examples admit no compatible value function")

    # -- assignment intervals ------------------------------------------------------

    def _expr(self, alt: str, idx, side: int) -> dict[int, float]:
        if idx == CLASSIC:
            return self.model.whole_expr(alt)
        return self.model.uniform_expr(alt, idx[side])

    def _slack_positive(self, rows: list[Row]) -> bool:
        outcome = self.solver.maximize_epsilon(self.model, self.base_rows + rows)
        return outcome.status == "optimal" and outcome.epsilon > self.delta

    def _at_least_possible(self, alt: str, ref: AssignmentExample, idx) -> bool:
        """Some compatible function puts alt at least as high as the reference."""
        coeffs = merge_exprs(self._expr(alt, idx, 0), negate_expr(self._expr(ref.alternative, idx, 1)))
        row = Row(name=f"ge[{alt},{ref.alternative}]", coeffs=tuple(sorted(coeffs.items())), sense=GE)
        return self._slack_positive([row])

    def _at_most_possible(self, alt: str, ref: AssignmentExample, idx) -> bool:
        coeffs = merge_exprs(self._expr(ref.alternative, idx, 1), negate_expr(self._expr(alt, idx, 0)))
        row = Row(name=f"le[{alt},{ref.alternative}]", coeffs=tuple(sorted(coeffs.items())), sense=GE)
        return self._slack_positive([row])

    def _class_possible(self, alt: str, h: int, idx) -> bool:
        """Is there a compatible function assigning alt to class h?

        Every example pinned strictly above h must beat alt, every example pinned
        strictly below must lose to it.
        """
        rows: list[Row] = []
        for ex in self.examples:
            if ex.low > h:
                coeffs = merge_exprs(
                    self._expr(ex.alternative, idx, 1),
                    negate_expr(self._expr(alt, idx, 0)),
                    {self.model.eps: -1.0},
                )
                rows.append(Row(name=f"above[{ex.alternative}]", coeffs=tuple(sorted(coeffs.items())), sense=GE))
            if ex.high < h:
                coeffs = merge_exprs(
                    self._expr(alt, idx, 0),
                    negate_expr(self._expr(ex.alternative, idx, 1)),
                    {self.model.eps: -1.0},
                )
                rows.append(Row(name=f"below[{ex.alternative}]", coeffs=tuple(sorted(coeffs.items())), sense=GE))
        return self._slack_positive(rows)

    def possible_interval(self, alt: str, i: int | None = None, k: int | None = None) -> tuple[int, int]:
        """Union over compatible functions of the class intervals assigned to alt."""
        self.require_compatible()
        idx = CLASSIC if i is None else canonical_index((i, k), self.table.n)
        member = [h for h in range(1, self.classes.p + 1) if self._class_possible(alt, h, idx)]
        if not member:
            raise IncompatibleSorting(f"no class is possible for {alt!r}")
        return member[0], member[-1]

    def necessary_interval(self, alt: str, i: int | None = None, k: int | None = None) -> tuple[int, int] | None:
        """Intersection over compatible functions; None when it is empty."""
        self.require_compatible()
        idx = CLASSIC if i is None else canonical_index((i, k), self.table.n)
        # the intersection of the per-function intervals is [max of lows, min of highs];
        # a reference's low bound is attained by some function iff alt can reach it
        low = 1
        high = self.classes.p
        for ex in self.examples:
            if ex.low > low and self._at_least_possible(alt, ex, idx):
                low = ex.low
            if ex.high < high and self._at_most_possible(alt, ex, idx):
                high = ex.high
        if low > high:
            return None
        return low, high

    def assignment_table(self, i: int | None = None, k: int | None = None) -> dict[str, dict]:
        out: dict[str, dict] = {}
        for alt in self.table.alternatives:
            possible = self.possible_interval(alt, i, k)
            necessary = self.necessary_interval(alt, i, k)
            out[alt] = {
                "possible": list(possible),
                "necessary": list(necessary) if necessary else None,
            }
        return out


def sorting_compatible(
    table: PerformanceTable,
    classes: ClassStructure,
    examples: Sequence[AssignmentExample],
    solver: LpSolver | None = None,
) -> CompatibilityResult:
    return SortingEngine(table, classes, examples, solver=solver).compatibility()
