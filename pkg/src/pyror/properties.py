"""Algebraic law suite for dominance and preference relations on random instances.

Every law that must hold at full generality (reflexivity/transitivity families,
inclusion chains, completeness dualities, composition laws, their group
variants) is checked here as boolean-matrix algebra over engine-computed
relations.  The CLI `check-properties` subcommand and the acceptance tests both
drive this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .dominance import dominance_matrix, IK, NORMAL
from .engine import CLASSIC, PreferenceEngine
from .groups import GroupSession
from .lp import LpSolver, PreferenceStatement, STATEMENT_KINDS, check_compatibility
from .model import Criterion, IntervalEvaluation, PerformanceTable, Scale, QUANTITATIVE
from .relations import RelationMatrix
from .robustness import sample_compatible_values

POINT_TOL = 1e-7  # slack for float sums over solver-feasible points


# -- random instances ---------------------------------------------------------


def random_table(
    rng: np.random.Generator,
    max_alts: int = 8,
    max_criteria: int = 4,
    max_n: int = 3,
    value_pool: int = 6,
) -> PerformanceTable:
    """Small random problem with clustered integer values (ties make laws bite)."""
    n = int(rng.integers(1, max_n + 1))
    m = int(rng.integers(1, max_criteria + 1))
    size = int(rng.integers(2, max_alts + 1))
    criteria = tuple(Criterion(f"g{j + 1}", Scale(QUANTITATIVE)) for j in range(m))
    alts = tuple(f"a{idx + 1}" for idx in range(size))
    evaluations = {}
    for alt in alts:
        row = []
        for _ in range(m):
            if rng.random() < 0.3:  # precise evaluation
                v = float(rng.integers(0, value_pool + 1))
                row.append(IntervalEvaluation(points=(v,) * n))
            else:
                pts = sorted(float(rng.integers(0, value_pool + 1)) for _ in range(n))
                row.append(IntervalEvaluation(points=tuple(pts)))
        evaluations[alt] = tuple(row)
    return PerformanceTable(
        criteria=criteria, n=n, alternatives=alts, evaluations=evaluations, reference=alts
    )


def random_statements(
    rng: np.random.Generator,
    table: PerformanceTable,
    limit: int = 5,
    solver: LpSolver | None = None,
    attempts: int | None = None,
) -> list[PreferenceStatement]:
    """Sample statements one by one, keeping each only while the set stays compatible."""
    solver = solver or LpSolver()
    kept: list[PreferenceStatement] = []
    alts = list(table.reference)
    crits = [c.id for c in table.criteria]
    attempts = attempts if attempts is not None else 4 * limit
    for _ in range(attempts):
        if len(kept) >= limit:
            break
        kind = STATEMENT_KINDS[int(rng.integers(0, len(STATEMENT_KINDS)))]
        arity = 4 if "intensity" in kind else 2
        if len(alts) < 2:
            break
        operands = tuple(alts[int(v)] for v in rng.choice(len(alts), size=arity, replace=len(alts) < arity))
        criterion = crits[int(rng.integers(0, len(crits)))] if kind.startswith("marginal") else None
        candidate = PreferenceStatement(
            kind=kind,
            alternatives=operands,
            criterion=criterion,
            credibility=int(rng.integers(1, 4)),
            author="dm",
        )
        trial = kept + [candidate]
        if check_compatibility(table, trial, solver=solver).compatible:
            kept.append(candidate)
    return kept


# -- reporting ----------------------------------------------------------------


@dataclass
class LawReport:
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    def check(self, ok: bool, message: str) -> None:
        self.checked += 1
        if not ok:
            self.violations.append(message)


@dataclass
class PropertyReport:
    sections: dict[str, LawReport] = field(default_factory=dict)
    instances: int = 0

    def section(self, name: str) -> LawReport:
        return self.sections.setdefault(name, LawReport())

    @property
    def ok(self) -> bool:
        return not any(s.violations for s in self.sections.values())

    def summary_lines(self) -> list[str]:
        lines = []
        for name in sorted(self.sections):
            rep = self.sections[name]
            status = "PASS" if not rep.violations else f"FAIL ({len(rep.violations)} violations)"
            lines.append(f"{status:<22} {name}: {rep.checked} checks")
        return lines


def _subset(a: RelationMatrix, b: RelationMatrix) -> bool:
    return a.issubset(b)


# -- dominance laws -----------------------------------------------------------


def check_dominance_laws(table: PerformanceTable, report: PropertyReport, ctx: str) -> None:
    n = table.n
    rep = report.section("dominance: reflexivity and transitivity")
    inc = report.section("dominance: index inclusion and mixed transitivity")
    chain = report.section("dominance: strong/normal/weak chain")

    dom = {
        (i, k): dominance_matrix(table, IK, i=i, k=k)
        for i in range(1, n + 1)
        for k in range(1, n + 1)
    }
    normal = dominance_matrix(table, NORMAL)

    for (i, k), mat in dom.items():
        if i >= k:
            rep.check(mat.is_reflexive(), f"{ctx}: dom({i},{k}) not reflexive")
        if i <= k:
            rep.check(mat.is_transitive(), f"{ctx}: dom({i},{k}) not transitive")
    rep.check(normal.is_reflexive() and normal.is_transitive(), f"{ctx}: normal dominance not a preorder")

    inter = None
    for i in range(1, n + 1):
        inter = dom[(i, i)] if inter is None else inter.intersect(dom[(i, i)])
    rep.check(bool(np.array_equal(inter.bits, normal.bits)), f"{ctx}: dom != intersection of dom(i,i)")

    for (i, k), mat in dom.items():
        for r in range(i, n + 1):
            for s in range(1, k + 1):
                inc.check(_subset(mat, dom[(r, s)]), f"{ctx}: dom({i},{k}) !<= dom({r},{s})")
        # mixed transitivity through a second indexed relation
        for i1 in range(1, k + 1):  # k >= i1
            for k1 in range(1, n + 1):
                comp = mat.compose(dom[(i1, k1)])
                for r in range(i, n + 1):
                    for s in range(1, k1 + 1):
                        inc.check(
                            _subset(comp, dom[(r, s)]),
                            f"{ctx}: dom({i},{k});dom({i1},{k1}) !<= dom({r},{s})",
                        )
        # through normal dominance on either side
        comp = mat.compose(normal)
        comp2 = normal.compose(mat)
        for r in range(i, n + 1):
            for s in range(1, k + 1):
                inc.check(_subset(comp, dom[(r, s)]), f"{ctx}: dom({i},{k});dom !<= dom({r},{s})")
                inc.check(_subset(comp2, dom[(r, s)]), f"{ctx}: dom;dom({i},{k}) !<= dom({r},{s})")

    chain.check(_subset(dom[(1, n)], normal), f"{ctx}: strong !<= normal")
    chain.check(_subset(normal, dom[(n, 1)]), f"{ctx}: normal !<= weak")
    for (i, k), mat in dom.items():
        chain.check(_subset(dom[(1, n)], mat), f"{ctx}: strong !<= dom({i},{k})")
        chain.check(_subset(mat, dom[(n, 1)]), f"{ctx}: dom({i},{k}) !<= weak")


# -- necessary/possible preference laws ----------------------------------------


def check_preference_laws(
    engine: PreferenceEngine,
    report: PropertyReport,
    ctx: str,
    rng: np.random.Generator,
    point_samples: int = 4,
) -> None:
    table = engine.table
    n = table.n
    N = {CLASSIC: engine.relation_matrix("necessary", CLASSIC)}
    P = {CLASSIC: engine.relation_matrix("possible", CLASSIC)}
    D = {CLASSIC: engine.dominance(CLASSIC)}
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            N[(i, k)] = engine.relation_matrix("necessary", (i, k))
            P[(i, k)] = engine.relation_matrix("possible", (i, k))
            D[(i, k)] = engine.dominance((i, k))

    pts = report.section("values: realization monotonicity and bounds")
    for x in sample_compatible_values(engine, point_samples, rng):
        for alt in table.alternatives:
            whole = engine.model.evaluate(engine.model.whole_expr(alt), x)
            uniform = [engine.model.evaluate(engine.model.uniform_expr(alt, i), x) for i in range(1, n + 1)]
            for i in range(n):
                for k in range(i):
                    pts.check(
                        uniform[i] >= uniform[k] - POINT_TOL,
                        f"{ctx}: U({alt}^({i + 1})) < U({alt}^({k + 1}))",
                    )
            pts.check(
                -POINT_TOL <= uniform[0] <= whole + POINT_TOL
                and whole <= uniform[-1] + POINT_TOL
                and uniform[-1] <= 1 + POINT_TOL,
                f"{ctx}: value chain 0 <= U({alt}^(1)) <= U({alt}) <= U({alt}^(n)) <= 1 broken",
            )

    basic = report.section("preference: inclusion, order structure, completeness")
    basic.check(_subset(N[CLASSIC], P[CLASSIC]), f"{ctx}: N !<= P")
    basic.check(N[CLASSIC].is_reflexive() and N[CLASSIC].is_transitive(), f"{ctx}: N not a preorder")
    basic.check(P[CLASSIC].is_strongly_complete(), f"{ctx}: P not strongly complete")
    basic.check(P[CLASSIC].is_negatively_transitive(), f"{ctx}: P not negatively transitive")
    basic.check(
        bool(np.all(N[CLASSIC].bits | P[CLASSIC].bits.T)), f"{ctx}: N(a,b) or P(b,a) fails"
    )
    basic.check(_subset(D[CLASSIC], N[CLASSIC]), f"{ctx}: dom !<= N")

    for i in range(1, n + 1):
        for k in range(1, n + 1):
            basic.check(_subset(N[(i, k)], P[(i, k)]), f"{ctx}: N({i},{k}) !<= P({i},{k})")
            basic.check(_subset(D[(i, k)], N[(i, k)]), f"{ctx}: dom({i},{k}) !<= N({i},{k})")
            basic.check(
                bool(np.all(N[(i, k)].bits | P[(k, i)].bits.T)),
                f"{ctx}: N({i},{k})(a,b) or P({k},{i})(b,a) fails",
            )
            if i >= k:
                basic.check(N[(i, k)].is_reflexive(), f"{ctx}: N({i},{k}) not reflexive")
                basic.check(P[(i, k)].is_strongly_complete(), f"{ctx}: P({i},{k}) not strongly complete")
                basic.check(
                    P[(i, k)].is_negatively_transitive(), f"{ctx}: P({i},{k}) not negatively transitive"
                )
            if i <= k:
                basic.check(N[(i, k)].is_transitive(), f"{ctx}: N({i},{k}) not transitive")
            for i1 in range(i, n + 1):
                for k1 in range(1, k + 1):
                    basic.check(_subset(N[(i, k)], N[(i1, k1)]), f"{ctx}: N({i},{k}) !<= N({i1},{k1})")
                    basic.check(_subset(P[(i, k)], P[(i1, k1)]), f"{ctx}: P({i},{k}) !<= P({i1},{k1})")
            basic.check(
                _subset(N[(1, n)], N[(i, k)]) and _subset(N[(i, k)], N[(n, 1)]),
                f"{ctx}: N sandwich at ({i},{k})",
            )
            basic.check(
                _subset(P[(1, n)], P[(i, k)]) and _subset(P[(i, k)], P[(n, 1)]),
                f"{ctx}: P sandwich at ({i},{k})",
            )
    basic.check(
        _subset(N[(1, n)], N[CLASSIC]) and _subset(N[CLASSIC], N[(n, 1)]),
        f"{ctx}: strong N <= N <= weak N fails",
    )
    basic.check(
        _subset(P[(1, n)], P[CLASSIC]) and _subset(P[CLASSIC], P[(n, 1)]),
        f"{ctx}: strong P <= P <= weak P fails",
    )

    mixed = report.section("preference: mixed transitivity with dominance")
    for left, right, out, tag in (
        (N[CLASSIC], P[CLASSIC], P[CLASSIC], "N;P<=P"),
        (P[CLASSIC], N[CLASSIC], P[CLASSIC], "P;N<=P"),
        (D[CLASSIC], N[CLASSIC], N[CLASSIC], "dom;N<=N"),
        (N[CLASSIC], D[CLASSIC], N[CLASSIC], "N;dom<=N"),
        (D[CLASSIC], P[CLASSIC], P[CLASSIC], "dom;P<=P"),
        (P[CLASSIC], D[CLASSIC], P[CLASSIC], "P;dom<=P"),
    ):
        mixed.check(_subset(left.compose(right), out), f"{ctx}: {tag} fails")

    bridge = report.section("preference: endpoint-bridged transitivity")
    for i in range(1, n + 1):
        for fam, famtag in ((N, "N"), (P, "P"), (D, "dom")):
            outfam = P if famtag != "N" else N
            # X(i,n) ; N  and the dominance variants, landing at (r, 1)
            comp_nec = fam[(i, n)].compose(N[CLASSIC])
            comp_pos = fam[(i, n)].compose(P[CLASSIC]) if famtag != "P" else None
            for r in range(i, n + 1):
                bridge.check(
                    _subset(comp_nec, (N if famtag != "P" else P)[(r, 1)]),
                    f"{ctx}: {famtag}({i},n);N !<= out({r},1)",
                )
                if comp_pos is not None:
                    bridge.check(_subset(comp_pos, P[(r, 1)]), f"{ctx}: {famtag}({i},n);P !<= P({r},1)")
            if famtag != "dom":
                comp_dom = fam[(i, n)].compose(D[CLASSIC])
                for r in range(i, n + 1):
                    bridge.check(_subset(comp_dom, fam[(r, 1)]), f"{ctx}: {famtag}({i},n);dom !<= {famtag}({r},1)")
    for k in range(1, n + 1):
        for fam, famtag in ((N, "N"), (P, "P"), (D, "dom")):
            comp_nec = N[CLASSIC].compose(fam[(1, k)])
            comp_pos = P[CLASSIC].compose(fam[(1, k)]) if famtag != "P" else None
            for s in range(1, k + 1):
                bridge.check(
                    _subset(comp_nec, (N if famtag != "P" else P)[(n, s)]),
                    f"{ctx}: N;{famtag}(1,{k}) !<= out(n,{s})",
                )
                if comp_pos is not None:
                    bridge.check(_subset(comp_pos, P[(n, s)]), f"{ctx}: P;{famtag}(1,{k}) !<= P(n,{s})")
            if famtag != "dom":
                comp_dom = D[CLASSIC].compose(fam[(1, k)])
                for s in range(1, k + 1):
                    bridge.check(_subset(comp_dom, fam[(n, s)]), f"{ctx}: dom;{famtag}(1,{k}) !<= {famtag}(n,{s})")

    chained = report.section("preference: indexed composition laws")
    cases = (
        (N, N, N, "N;N"),
        (N, P, P, "N;P"),
        (P, N, P, "P;N"),
        (D, N, N, "dom;N"),
        (N, D, N, "N;dom"),
        (D, P, P, "dom;P"),
        (P, D, P, "P;dom"),
    )
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            for i1 in range(1, k + 1):  # k >= i1
                for k1 in range(1, n + 1):
                    for left, right, out, tag in cases:
                        comp = left[(i, k)].compose(right[(i1, k1)])
                        for r in range(i, n + 1):
                            for s in range(1, k1 + 1):
                                chained.check(
                                    _subset(comp, out[(r, s)]),
                                    f"{ctx}: {tag} ({i},{k});({i1},{k1}) !<= ({r},{s})",
                                )


# -- strong/normal/weak implication lattice --------------------------------------


def check_lattice_consequences(engine: PreferenceEngine, report: PropertyReport, ctx: str) -> None:
    n = engine.table.n
    DS = engine.dominance((1, n))
    DD = engine.dominance(CLASSIC)
    DW = engine.dominance((n, 1))
    SN = engine.relation_matrix("necessary", (1, n))
    NN = engine.relation_matrix("necessary", CLASSIC)
    WN = engine.relation_matrix("necessary", (n, 1))
    SP = engine.relation_matrix("possible", (1, n))
    PP = engine.relation_matrix("possible", CLASSIC)
    WP = engine.relation_matrix("possible", (n, 1))

    lat = report.section("lattice: dominance-to-preference implications")
    for sub, sup, tag in (
        (DS, DD, "DS<=D"),
        (DD, DW, "D<=DW"),
        (SN, NN, "SN<=N"),
        (NN, WN, "N<=WN"),
        (SP, PP, "SP<=P"),
        (PP, WP, "P<=WP"),
        (DS, SN, "DS<=SN"),
        (DD, NN, "D<=N"),
        (DW, WN, "DW<=WN"),
        (SN, SP, "SN<=SP"),
        (NN, PP, "N<=P"),
        (WN, WP, "WN<=WP"),
    ):
        lat.check(_subset(sub, sup), f"{ctx}: {tag} fails")

    cons = report.section("lattice: enumerated composition consequences")
    compositions = (
        (SN, NN, NN, "SN;N<=N"),
        (SN, PP, PP, "SN;P<=P"),
        (NN, SN, NN, "N;SN<=N"),
        (NN, SP, PP, "N;SP<=P"),
        (SP, NN, PP, "SP;N<=P"),
        (PP, SN, PP, "P;SN<=P"),
        (DS, DD, DS, "DS;D<=DS"),
        (DS, DW, DW, "DS;DW<=DW"),
        (DS, SN, SN, "DS;SN<=SN"),
        (DS, NN, NN, "DS;N<=N"),
        (DS, WN, WN, "DS;WN<=WN"),
        (DS, SP, SP, "DS;SP<=SP"),
        (DS, PP, PP, "DS;P<=P"),
        (DS, WP, WP, "DS;WP<=WP"),
        (DD, DS, DS, "D;DS<=DS"),
        (DD, DW, DW, "D;DW<=DW"),
        (DD, SN, NN, "D;SN<=N"),
        (DD, SP, PP, "D;SP<=P"),
        (DW, DD, DW, "DW;D<=DW"),
        (DW, SN, WN, "DW;SN<=WN"),
        (DW, SP, WP, "DW;SP<=WP"),
        (SN, DS, SN, "SN;DS<=SN"),
        (SN, DD, NN, "SN;D<=N"),
        (SN, DW, WN, "SN;DW<=WN"),
        (SN, WN, WN, "SN;WN<=WN"),
        (SN, SP, SP, "SN;SP<=SP"),
        (SN, WP, WP, "SN;WP<=WP"),
        (NN, DS, NN, "N;DS<=N"),
        (WN, DS, WN, "WN;DS<=WN"),
        (WN, SN, WN, "WN;SN<=WN"),
        (WN, SP, WP, "WN;SP<=WP"),
        (SP, DS, SP, "SP;DS<=SP"),
        (SP, DD, PP, "SP;D<=P"),
        (SP, DW, WP, "SP;DW<=WP"),
        (SP, SN, SP, "SP;SN<=SP"),
        (SP, WN, WP, "SP;WN<=WP"),
        (PP, DS, PP, "P;DS<=P"),
        (WP, DS, WP, "WP;DS<=WP"),
        (WP, SN, WP, "WP;SN<=WP"),
    )
    for left, right, out, tag in compositions:
        cons.check(_subset(left.compose(right), out), f"{ctx}: {tag} fails")
    cons.check(bool(np.all(NN.bits | PP.bits.T)), f"{ctx}: N or P^T completeness fails")
    cons.check(bool(np.all(SN.bits | WP.bits.T)), f"{ctx}: SN or WP^T completeness fails")
    cons.check(bool(np.all(WN.bits | SP.bits.T)), f"{ctx}: WN or SP^T completeness fails")


# -- group consensus laws ---------------------------------------------------------


def _coalitions(dms: Sequence[str]) -> list[tuple[str, ...]]:
    singles = [(dm,) for dm in dms]
    out = singles + [tuple(dms)]
    if len(dms) >= 2:
        out.append(tuple(dms[:2]))
    return out


def check_group_laws(
    gsession: GroupSession,
    report: PropertyReport,
    ctx: str,
    rng: np.random.Generator,
    index_samples: int = 2,
) -> None:
    n = gsession.table.n
    dms = list(gsession.dms)
    pairs = [(int(rng.integers(1, n + 1)), int(rng.integers(1, n + 1))) for _ in range(index_samples)]
    indices: list = [CLASSIC, (1, n), (n, 1)] + pairs

    bullets = report.section("group: quantifier inclusion chains (NN<=NP<=PP, NN<=PN<=PP)")
    mono = report.section("group: index/strength monotonicity")
    chains = report.section("group: strong/normal/weak chains")
    duality = report.section("group: completeness dualities")
    transit = report.section("group: composition transitivity")

    for coalition in _coalitions(dms):
        G = {}

        def g(outer: str, inner: str, idx):
            key = (outer, inner, idx)
            if key not in G:
                G[key] = gsession.relation(coalition, outer, inner, idx)
            return G[key]

        for idx in indices:
            nn, np_, pn, pp = (g("N", "N", idx), g("N", "P", idx), g("P", "N", idx), g("P", "P", idx))
            bullets.check(_subset(nn, np_), f"{ctx}: NN !<= NP at {idx}")
            bullets.check(_subset(np_, pp), f"{ctx}: NP !<= PP at {idx}")
            bullets.check(_subset(nn, pn), f"{ctx}: NN !<= PN at {idx}")
            bullets.check(_subset(pn, pp), f"{ctx}: PN !<= PP at {idx}")

        # monotonicity on one sampled index pair and its widened form
        (i, k) = pairs[0]
        widened = [(i1, k1) for i1 in range(i, n + 1) for k1 in range(1, k + 1)]
        for (r1, r1p) in (("N", "N"), ("P", "P"), ("N", "P")):  # per-DM inclusion holds
            for r2 in ("N", "P"):
                r2ps = ("N", "P") if r2 == "N" else ("P",)
                for (i1, k1) in widened:
                    for r2p in r2ps:
                        mono.check(
                            _subset(g(r1, r2, (i, k)), g(r1p, r2p, (i1, k1))),
                            f"{ctx}: {r1}{r2}({i},{k}) !<= {r1p}{r2p}({i1},{k1})",
                        )

        for r in ("N", "P"):
            chains.check(
                _subset(g("N", r, (1, n)), g("N", r, CLASSIC))
                and _subset(g("N", r, CLASSIC), g("N", r, (n, 1))),
                f"{ctx}: SN,{r} <= N,{r} <= WN,{r} fails",
            )
            chains.check(
                _subset(g("P", r, (1, n)), g("P", r, CLASSIC))
                and _subset(g("P", r, CLASSIC), g("P", r, (n, 1))),
                f"{ctx}: SP,{r} <= P,{r} <= WP,{r} fails",
            )

        for (i, k) in pairs:
            duality.check(
                bool(np.all(g("N", "N", (i, k)).bits | g("P", "P", (k, i)).bits.T)),
                f"{ctx}: NN({i},{k}) or PP({k},{i})^T fails",
            )
            duality.check(
                bool(np.all(g("N", "P", (i, k)).bits | g("P", "N", (k, i)).bits.T)),
                f"{ctx}: NP({i},{k}) or PN({k},{i})^T fails",
            )

        # composition: outer-family cases x quantifier rules, on one sampled index tuple
        (i, k) = pairs[0]
        i1 = int(rng.integers(1, k + 1))  # k >= i1
        k1 = int(rng.integers(1, n + 1))
        for fam1, fam2, famc in (("N", "N", "N"), ("N", "P", "P"), ("P", "N", "P")):
            for r1, r2 in (("N", "N"), ("N", "P"), ("P", "N")):
                rbar = "N" if (r1, r2) == ("N", "N") else "P"
                comp = g(fam1, r1, (i, k)).compose(g(fam2, r2, (i1, k1)))
                for r in range(i, n + 1):
                    for s in range(1, k1 + 1):
                        transit.check(
                            _subset(comp, g(famc, rbar, (r, s))),
                            f"{ctx}: {fam1}{r1}({i},{k});{fam2}{r2}({i1},{k1}) !<= {famc}{rbar}({r},{s})",
                        )


# -- the whole suite --------------------------------------------------------------


def run_property_suite(
    seed: int = 0,
    instances: int = 50,
    dms: int = 3,
    point_samples: int = 4,
    statement_limit: int = 5,
    group_checks: bool = True,
    table: PerformanceTable | None = None,
    statements: Sequence[PreferenceStatement] | None = None,
) -> PropertyReport:
    """Check every law on `instances` random instances (or one supplied problem)."""
    rng = np.random.default_rng(seed)
    report = PropertyReport()
    for count in range(instances):
        ctx = f"instance {count}"
        solver = LpSolver()
        if table is not None:
            tbl = table
            stmts = list(statements or [])
        else:
            tbl = random_table(rng)
            stmts = random_statements(rng, tbl, limit=statement_limit, solver=solver)
        check_dominance_laws(tbl, report, ctx)
        engine = PreferenceEngine(tbl, stmts, solver=solver)
        if engine.compatibility().compatible:
            check_preference_laws(engine, report, ctx, rng, point_samples=point_samples)
            check_lattice_consequences(engine, report, ctx)
        if group_checks:
            gtbl = random_table(rng, max_alts=6, max_criteria=3, max_n=2)
            glogs = {
                f"dm{d + 1}": random_statements(rng, gtbl, limit=3, solver=solver)
                for d in range(dms)
            }
            gsession = GroupSession(gtbl, glogs, solver=solver)
            if not gsession.incompatible_dms():
                check_group_laws(gsession, report, f"{ctx} (group)", rng)
        report.instances += 1
    return report
