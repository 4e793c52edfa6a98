"""Problem data model: criteria, scales, interval evaluations and their validation.

Evaluations are n-point intervals per criterion: an ordered tuple of n possible
values, a precise value being n identical points.  Qualitative scales are mapped
to integer ranks 1..L internally, so every engine downstream works on numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence

import numpy as np

from .errors import (
    IndexOutOfRange,
    MissingEvaluationUnsupported,
    RangeUndeclared,
    UnknownAlternative,
    ValidationError,
    Violation,
)

QUANTITATIVE = "quantitative"
QUALITATIVE = "qualitative"


@dataclass(frozen=True)
class Scale:
    """Evaluation scale of one criterion (gain direction: higher is better).

    Qualitative scales carry their labels worst-to-best; label at position p has
    rank p+1.  `bounds` is the declared (worst, best) value range, used only to
    expand missing evaluations; qualitative scales imply bounds (1, L).
    """

    kind: str
    labels: tuple[str, ...] = ()
    bounds: tuple[float, float] | None = None

    def __post_init__(self):
        if self.kind not in (QUANTITATIVE, QUALITATIVE):
            raise ValueError(f"unknown scale kind {self.kind!r}")
        if self.kind == QUALITATIVE:
            if len(self.labels) < 2:
                raise ValueError("qualitative scale needs at least 2 labels")
            if len(set(self.labels)) != len(self.labels):
                raise ValueError("qualitative labels must be unique")

    def rank_of(self, label: str) -> int:
        return self.labels.index(label) + 1

    def label_of(self, rank: float) -> str:
        return self.labels[int(rank) - 1]

    def value_bounds(self) -> tuple[float, float] | None:
        if self.kind == QUALITATIVE:
            return (1.0, float(len(self.labels)))
        return self.bounds


@dataclass(frozen=True)
class Criterion:
    id: str
    scale: Scale


@dataclass(frozen=True)
class IntervalEvaluation:
    """n ordered possible values, or a missing marker (points is None)."""

    points: tuple[float, ...] | None

    @property
    def missing(self) -> bool:
        return self.points is None

    @property
    def precise(self) -> bool:
        return self.points is not None and len(set(self.points)) == 1


MISSING = IntervalEvaluation(points=None)


@dataclass(frozen=True)
class Realization:
    """Selects one precise value vector out of an alternative's intervals.

    Either a uniform index i (the fictitious alternative taking the i-th point
    on every criterion) or one index per criterion.
    """

    base: str
    index: int | None = None
    indices: tuple[int, ...] | None = None

    def __post_init__(self):
        if (self.index is None) == (self.indices is None):
            raise ValueError("exactly one of index / indices must be given")

    @classmethod
    def uniform(cls, base: str, i: int) -> "Realization":
        return cls(base=base, index=i)

    @classmethod
    def per_criterion(cls, base: str, indices: Sequence[int]) -> "Realization":
        return cls(base=base, indices=tuple(indices))


@dataclass(frozen=True)
class PerformanceTable:
    """Alternatives x criteria with n-point interval evaluations.

    `alternatives` fixes the canonical ordering used by every relation matrix.
    `reference` is the subset the decision maker may reference in statements.
    """

    criteria: tuple[Criterion, ...]
    n: int
    alternatives: tuple[str, ...]
    evaluations: Mapping[str, tuple[IntervalEvaluation, ...]]
    reference: tuple[str, ...] = ()

    @property
    def m(self) -> int:
        return len(self.criteria)

    def criterion_index(self, criterion_id: str) -> int:
        for j, c in enumerate(self.criteria):
            if c.id == criterion_id:
                return j
        from .errors import UnknownCriterion

        raise UnknownCriterion(f"unknown criterion {criterion_id!r}")

    def evaluation(self, alt: str, j: int) -> IntervalEvaluation:
        try:
            return self.evaluations[alt][j]
        except KeyError:
            raise UnknownAlternative(f"unknown alternative {alt!r}") from None

    def row(self, alt: str) -> tuple[IntervalEvaluation, ...]:
        try:
            return self.evaluations[alt]
        except KeyError:
            raise UnknownAlternative(f"unknown alternative {alt!r}") from None

    def has_missing(self, alt: str | None = None) -> bool:
        alts = [alt] if alt is not None else list(self.alternatives)
        return any(ev.missing for a in alts for ev in self.row(a))

    def indicator(self, alt: str, j: int, i: int) -> float:
        """g_j^i(alt) for index i in 1..n; missing cells resolve endpoints only."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"point index {i} outside 1..{self.n}")
        ev = self.evaluation(alt, j)
        if not ev.missing:
            return ev.points[i - 1]
        if self.n < 2 or i not in (1, self.n):
            raise MissingEvaluationUnsupported(
                f"{alt!r} has no evaluation on {self.criteria[j].id!r}; only endpoint indices are defined"
            )
        bounds = self.criteria[j].scale.value_bounds()
        if bounds is None:
            raise RangeUndeclared(
                f"criterion {self.criteria[j].id!r} has a missing evaluation and no declared range"
            )
        return bounds[0] if i == 1 else bounds[1]


def realize(table: PerformanceTable, r: Realization) -> tuple[float, ...]:
    """Precise evaluation vector of a realization (length m)."""
    if r.base not in table.evaluations:
        raise UnknownAlternative(f"unknown alternative {r.base!r}")
    if r.indices is not None:
        if len(r.indices) != table.m:
            raise IndexOutOfRange(
                f"selector has {len(r.indices)} indices for {table.m} criteria"
            )
        return tuple(table.indicator(r.base, j, idx) for j, idx in enumerate(r.indices))
    return tuple(table.indicator(r.base, j, r.index) for j in range(table.m))


def collapse_to_two_point(table: PerformanceTable) -> PerformanceTable:
    """Reduce every evaluation to its worst/best endpoints; n becomes 2.

    Missing cells become the declared (worst, best) range of their criterion.
    Idempotent; the only route that makes tables with missing cells queryable.
    """
    evaluations: dict[str, tuple[IntervalEvaluation, ...]] = {}
    for alt in table.alternatives:
        row = []
        for j, ev in enumerate(table.row(alt)):
            if ev.missing:
                bounds = table.criteria[j].scale.value_bounds()
                if bounds is None:
                    raise RangeUndeclared(
                        f"criterion {table.criteria[j].id!r} has a missing evaluation "
                        "and no declared range"
                    )
                row.append(IntervalEvaluation(points=(bounds[0], bounds[1])))
            else:
                row.append(IntervalEvaluation(points=(ev.points[0], ev.points[-1])))
        evaluations[alt] = tuple(row)
    return PerformanceTable(
        criteria=table.criteria,
        n=2,
        alternatives=table.alternatives,
        evaluations=evaluations,
        reference=table.reference,
    )


def evaluation_tensor(table: PerformanceTable) -> np.ndarray:
    """Dense |A| x m x n array of indicator values; requires no missing cells."""
    if table.has_missing():
        raise MissingEvaluationUnsupported(
            "table has missing evaluations; collapse to 2 points first"
        )
    out = np.empty((len(table.alternatives), table.m, table.n), dtype=float)
    for ai, alt in enumerate(table.alternatives):
        for j, ev in enumerate(table.row(alt)):
            out[ai, j, :] = ev.points
    return out


def _coerce_points(
    value: Any, scale: Scale, n: int, where: str, violations: list[Violation]
) -> tuple[float, ...] | None:
    """Turn one raw cell into n ordered numeric points, or record violations."""
    if isinstance(value, (list, tuple)):
        raw = list(value)
        if len(raw) != n:
            violations.append(
                Violation(where, "length", f"expected {n} points, got {len(raw)}")
            )
            return None
    else:
        raw = [value] * n  # precise shorthand: one value repeated n times

    points: list[float] = []
    for item in raw:
        if scale.kind == QUALITATIVE:
            if not isinstance(item, str) or item not in scale.labels:
                violations.append(
                    Violation(where, "unknown-label", f"unknown label {item!r}")
                )
                return None
            points.append(float(scale.rank_of(item)))
        else:
            if isinstance(item, bool) or not isinstance(item, (int, float)):
                violations.append(
                    Violation(where, "not-numeric", f"expected a number, got {item!r}")
                )
                return None
            points.append(float(item))
    for lo, hi in zip(points, points[1:]):
        if lo > hi:
            violations.append(
                Violation(where, "unsorted", f"points must be non-decreasing, got {points}")
            )
            return None
    return tuple(points)


def validate_table(raw: Mapping[str, Any]) -> PerformanceTable:
    """Validate a raw problem description; raises ValidationError with all violations.

    Expected shape::

        { "n": int,
          "criteria": [ {"id": str, "scale": {"kind": "qualitative", "labels": [...]}
                                   | {"kind": "quantitative", "range": [lo, hi]?}} ],
          "alternatives": { id: { criterionId: [points...] | scalar | null } },
          "reference": [ids]?  }                      # defaults to all alternatives

    null encodes a missing evaluation; a scalar is expanded to n equal points.
    """
    violations: list[Violation] = []

    n = raw.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        violations.append(Violation("n", "bad-n", f"n must be an integer >= 1, got {n!r}"))
        raise ValidationError(violations)

    criteria: list[Criterion] = []
    seen_ids: set[str] = set()
    raw_criteria = raw.get("criteria") or []
    if not raw_criteria:
        violations.append(Violation("criteria", "empty", "at least one criterion required"))
    for pos, rc in enumerate(raw_criteria):
        where = f"criteria[{pos}]"
        cid = rc.get("id") if isinstance(rc, Mapping) else None
        if not isinstance(cid, str) or not cid:
            violations.append(Violation(where, "bad-id", "criterion id must be a non-empty string"))
            continue
        if cid in seen_ids:
            violations.append(Violation(where, "duplicate-id", f"duplicate criterion id {cid!r}"))
            continue
        seen_ids.add(cid)
        rs = rc.get("scale") if isinstance(rc, Mapping) else None
        kind = rs.get("kind") if isinstance(rs, Mapping) else None
        if kind == QUALITATIVE:
            labels = rs.get("labels")
            if (
                not isinstance(labels, (list, tuple))
                or len(labels) < 2
                or len(set(labels)) != len(labels)
                or not all(isinstance(l, str) for l in labels)
            ):
                violations.append(
                    Violation(f"{where}.scale", "bad-labels", "need >= 2 unique string labels")
                )
                continue
            criteria.append(Criterion(cid, Scale(QUALITATIVE, labels=tuple(labels))))
        elif kind == QUANTITATIVE:
            bounds = None
            rng = rs.get("range")
            if rng is not None:
                ok = (
                    isinstance(rng, (list, tuple))
                    and len(rng) == 2
                    and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in rng)
                    and rng[0] <= rng[1]
                )
                if not ok:
                    violations.append(
                        Violation(f"{where}.scale", "bad-range", f"range must be [lo, hi], got {rng!r}")
                    )
                    continue
                bounds = (float(rng[0]), float(rng[1]))
            criteria.append(Criterion(cid, Scale(QUANTITATIVE, bounds=bounds)))
        else:
            violations.append(
                Violation(f"{where}.scale", "bad-kind", f"scale kind must be quantitative|qualitative, got {kind!r}")
            )

    raw_alts = raw.get("alternatives")
    if not isinstance(raw_alts, Mapping) or not raw_alts:
        violations.append(Violation("alternatives", "empty", "at least one alternative required"))
        raise ValidationError(violations)

    crit_by_id = {c.id: c for c in criteria}
    evaluations: dict[str, tuple[IntervalEvaluation, ...]] = {}
    for alt, cells in raw_alts.items():
        if not isinstance(cells, Mapping):
            violations.append(Violation(f"alternatives.{alt}", "bad-row", "expected a mapping"))
            continue
        for key in cells:
            if key not in crit_by_id:
                violations.append(
                    Violation(f"alternatives.{alt}.{key}", "unknown-criterion", f"unknown criterion {key!r}")
                )
        row: list[IntervalEvaluation] = []
        for c in criteria:
            where = f"alternatives.{alt}.{c.id}"
            if c.id not in cells:
                violations.append(Violation(where, "missing-criterion", f"no evaluation on {c.id!r}"))
                row.append(MISSING)
                continue
            value = cells[c.id]
            if value is None:
                row.append(MISSING)
                continue
            points = _coerce_points(value, c.scale, n, where, violations)
            row.append(IntervalEvaluation(points=points) if points is not None else MISSING)
        evaluations[alt] = tuple(row)

    reference = raw.get("reference")
    if reference is None:
        reference_ids = tuple(raw_alts.keys())
    else:
        reference_ids = tuple(reference)
        for rid in reference_ids:
            if rid not in raw_alts:
                violations.append(
                    Violation("reference", "unknown-reference", f"unknown alternative {rid!r}")
                )

    if violations:
        raise ValidationError(violations)

    return PerformanceTable(
        criteria=tuple(criteria),
        n=n,
        alternatives=tuple(raw_alts.keys()),
        evaluations=evaluations,
        reference=reference_ids,
    )
