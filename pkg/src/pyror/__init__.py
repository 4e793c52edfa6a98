"""Robust ordinal regression for alternatives with n-point interval evaluations."""

from .dominance import dominance_matrix, dominates, ik_dominates
from .engine import CLASSIC, PreferenceEngine, credibility_sweep
from .groups import GroupSession
from .lp import (
    DELTA,
    CharacteristicGrid,
    LpSolver,
    PreferenceStatement,
    ValueModel,
    build_grid,
    check_compatibility,
)
from .model import (
    Criterion,
    IntervalEvaluation,
    PerformanceTable,
    Realization,
    Scale,
    collapse_to_two_point,
    realize,
    validate_table,
)
from .relations import HasseDiagram, RelationMatrix, hasse, to_dot
from .robustness import RankInterval, extreme_ranks, find_inconsistencies
from .sorting import AssignmentExample, ClassStructure, SortingEngine, sorting_compatible

__all__ = [
    "CLASSIC",
    "DELTA",
    "AssignmentExample",
    "CharacteristicGrid",
    "ClassStructure",
    "Criterion",
    "GroupSession",
    "HasseDiagram",
    "IntervalEvaluation",
    "LpSolver",
    "PerformanceTable",
    "PreferenceEngine",
    "PreferenceStatement",
    "RankInterval",
    "Realization",
    "RelationMatrix",
    "Scale",
    "SortingEngine",
    "ValueModel",
    "build_grid",
    "check_compatibility",
    "collapse_to_two_point",
    "credibility_sweep",
    "dominance_matrix",
    "dominates",
    "extreme_ranks",
    "find_inconsistencies",
    "hasse",
    "ik_dominates",
    "realize",
    "sorting_compatible",
    "to_dot",
    "validate_table",
]
