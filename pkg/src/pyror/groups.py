"""Coalition-level consensus relations combining per-DM necessary/possible matrices."""

from __future__ import annotations

from typing import Mapping, Sequence

from .engine import CLASSIC, Index, PreferenceEngine, canonical_index, _index_tag
from .errors import DmIncompatible, EmptyCoalition, UnknownDm
from .lp import LpSolver, PreferenceStatement
from .model import PerformanceTable
from .relations import RelationMatrix

FAMILY_TAG = {"N": "nec", "P": "pos"}


class GroupSession:
    """A shared table with one statement log per decision maker.

    Group relations quantify a per-DM relation over a coalition: the inner
    quantifier N requires it for every member, P for at least one.  They are
    computed from cached per-DM matrices, never by a joint LP.
    """

    def __init__(
        self,
        table: PerformanceTable,
        dm_statements: Mapping[str, Sequence[PreferenceStatement]],
        solver: LpSolver | None = None,
    ):
        self.table = table
        self.solver = solver or LpSolver()
        self._logs = {dm: list(stmts) for dm, stmts in dm_statements.items()}
        self._engines: dict[str, PreferenceEngine] = {}

    @property
    def dms(self) -> tuple[str, ...]:
        return tuple(self._logs.keys())

    def engine(self, dm: str) -> PreferenceEngine:
        if dm not in self._logs:
            raise UnknownDm(f"unknown decision maker {dm!r}")
        if dm not in self._engines:
            self._engines[dm] = PreferenceEngine(self.table, self._logs[dm], solver=self.solver)
        return self._engines[dm]

    def incompatible_dms(self, coalition: Sequence[str] | None = None) -> list[str]:
        members = list(coalition) if coalition is not None else list(self.dms)
        return [dm for dm in members if not self.engine(dm).compatibility().compatible]

    def relation(
        self,
        coalition: Sequence[str],
        outer: str,
        inner: str,
        index: Index = CLASSIC,
        exclude_incompatible: bool = False,
    ) -> RelationMatrix:
        """Combine the per-DM `outer` relation over `coalition` with quantifier `inner`."""
        if outer not in ("N", "P") or inner not in ("N", "P"):
            raise ValueError("outer and inner must be 'N' or 'P'")
        members = list(dict.fromkeys(coalition))
        if not members:
            raise EmptyCoalition("coalition must name at least one decision maker")
        for dm in members:
            if dm not in self._logs:
                raise UnknownDm(f"unknown decision maker {dm!r}")
        bad = self.incompatible_dms(members)
        if bad:
            if not exclude_incompatible:
                raise DmIncompatible(bad)
            members = [dm for dm in members if dm not in bad]
            if not members:
                raise EmptyCoalition("every coalition member has inconsistent statements")

        family = "necessary" if outer == "N" else "possible"
        idx = canonical_index(index, self.table.n)
        per_dm = [self.engine(dm).relation_matrix(family, idx) for dm in members]
        bits = per_dm[0].bits.copy()
        for mat in per_dm[1:]:
            bits = (bits & mat.bits) if inner == "N" else (bits | mat.bits)
        tag = f"{FAMILY_TAG[outer]}-{FAMILY_TAG[inner]}{_index_tag(idx)}[{','.join(members)}]"
        return RelationMatrix(kind=tag, order=self.table.alternatives, bits=bits)
