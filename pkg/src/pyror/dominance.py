"""Dominance relations over indicator vectors: indexed, normal, strong and weak."""

from __future__ import annotations

import numpy as np

from .errors import IndexOutOfRange, MissingEvaluationUnsupported
from .model import PerformanceTable, evaluation_tensor
from .relations import RelationMatrix

IK = "ik"
NORMAL = "normal"
STRONG = "strong"
WEAK = "weak"


def _vector(table: PerformanceTable, alt: str, i: int) -> tuple[float, ...]:
    if not 1 <= i <= table.n:
        raise IndexOutOfRange(f"point index {i} outside 1..{table.n}")
    row = table.row(alt)
    if any(ev.missing for ev in row):
        raise MissingEvaluationUnsupported(
            f"{alt!r} has missing evaluations; collapse to 2 points first"
        )
    return tuple(ev.points[i - 1] for ev in row)


def ik_dominates(table: PerformanceTable, a: str, b: str, i: int, k: int) -> bool:
    """True iff the i-th point of a is at least the k-th point of b on every criterion."""
    va = _vector(table, a, i)
    vb = _vector(table, b, k)
    return all(x >= y for x, y in zip(va, vb))


def dominates(table: PerformanceTable, a: str, b: str) -> bool:
    """Normal dominance: a's i-th point beats b's i-th point for every criterion and i."""
    return all(ik_dominates(table, a, b, i, i) for i in range(1, table.n + 1))


def _ik_bits(tensor: np.ndarray, i: int, k: int) -> np.ndarray:
    # bits[a][b] = all_j tensor[a,j,i-1] >= tensor[b,j,k-1]
    va = tensor[:, :, i - 1]
    vb = tensor[:, :, k - 1]
    return np.all(va[:, None, :] >= vb[None, :, :], axis=2)


def dominance_matrix(
    table: PerformanceTable,
    kind: str = NORMAL,
    i: int | None = None,
    k: int | None = None,
    tensor: np.ndarray | None = None,
) -> RelationMatrix:
    """Full pairwise dominance matrix; strong = (1, n), weak = (n, 1)."""
    if kind == STRONG:
        i, k = 1, table.n
    elif kind == WEAK:
        i, k = table.n, 1
    elif kind == IK:
        if i is None or k is None:
            raise IndexOutOfRange("kind 'ik' requires both i and k")
    elif kind != NORMAL:
        raise ValueError(f"unknown dominance kind {kind!r}")

    if tensor is None:
        tensor = evaluation_tensor(table)

    if kind == NORMAL:
        bits = np.ones((len(table.alternatives),) * 2, dtype=bool)
        for idx in range(1, table.n + 1):
            bits &= _ik_bits(tensor, idx, idx)
        tag = "dom"
    else:
        if not (1 <= i <= table.n and 1 <= k <= table.n):
            raise IndexOutOfRange(f"indices ({i},{k}) outside 1..{table.n}")
        bits = _ik_bits(tensor, i, k)
        tag = f"dom({i},{k})"
    return RelationMatrix(kind=tag, order=table.alternatives, bits=bits)
