"""Independent brute-force oracles the engine answers are checked against.

Deliberately decoupled from the package: they work on plain dicts of rank
tuples and itertools enumeration, so an engine bug cannot hide in its oracle.
"""

from __future__ import annotations

import itertools
from typing import Mapping, Sequence


def ik_dominates_oracle(
    rows: Mapping[str, Sequence[Sequence[float]]], a: str, b: str, i: int, k: int
) -> bool:
    """Definition applied literally: i-th point of a beats k-th point of b on every criterion."""
    return all(cell_a[i - 1] >= cell_b[k - 1] for cell_a, cell_b in zip(rows[a], rows[b]))


def normal_dominates_oracle(rows: Mapping[str, Sequence[Sequence[float]]], a: str, b: str) -> bool:
    n = len(next(iter(rows.values()))[0])
    return all(ik_dominates_oracle(rows, a, b, i, i) for i in range(1, n + 1))


def dominance_matrix_oracle(
    rows: Mapping[str, Sequence[Sequence[float]]], kind: str
) -> dict[tuple[str, str], bool]:
    n = len(next(iter(rows.values()))[0])
    out = {}
    for a in rows:
        for b in rows:
            if kind == "strong":
                out[(a, b)] = ik_dominates_oracle(rows, a, b, 1, n)
            elif kind == "weak":
                out[(a, b)] = ik_dominates_oracle(rows, a, b, n, 1)
            elif kind == "normal":
                out[(a, b)] = normal_dominates_oracle(rows, a, b)
            else:
                raise ValueError(kind)
    return out


def minimal_removal_sets_oracle(statements: Sequence, is_compatible) -> list[tuple[int, ...]]:
    """All inclusion-minimal index sets whose removal restores compatibility.

    `is_compatible(kept_statements)` is the compatibility checker under test's
    own LP; the oracle owns only the subset enumeration.
    """
    indices = range(len(statements))
    restoring: list[tuple[int, ...]] = []
    for size in range(0, len(statements) + 1):
        for combo in itertools.combinations(indices, size):
            kept = [s for idx, s in enumerate(statements) if idx not in combo]
            if is_compatible(kept):
                restoring.append(combo)
    minimal = [
        s
        for s in restoring
        if not any(set(t) < set(s) for t in restoring)
    ]
    return sorted(minimal, key=lambda s: (len(s), s))
