import numpy as np
import pytest

from pyror.engine import CLASSIC, PreferenceEngine
from pyror.errors import DmIncompatible, EmptyCoalition, UnknownDm
from pyror.groups import GroupSession
from pyror.lp import PreferenceStatement


def _stmt(kind, *alts):
    return PreferenceStatement(kind=kind, alternatives=alts)


def test_singleton_coalition_equals_dm_relation(students_table, dean_statements):
    gsession = GroupSession(students_table, {"dean": dean_statements[:1]})
    own = PreferenceEngine(students_table, dean_statements[:1]).relation_matrix("necessary")
    nn = gsession.relation(["dean"], "N", "N")
    np_ = gsession.relation(["dean"], "N", "P")
    assert np.array_equal(nn.bits, own.bits)
    assert np.array_equal(np_.bits, own.bits)


def test_dominance_implies_group_necessary_for_all(students_table):
    logs = {
        "d1": [_stmt("holistic-strict", "M", "D")],
        "d2": [_stmt("holistic-strict", "I", "B")],
        "d3": [],
    }
    gsession = GroupSession(students_table, logs)
    nn = gsession.relation(["d1", "d2", "d3"], "N", "N")
    dom = gsession.engine("d1").dominance(CLASSIC)
    assert dom.issubset(nn)


def test_opposing_dms_split_quantifiers(students_table):
    logs = {
        "d1": [_stmt("holistic-strict", "B", "I")],
        "d2": [_stmt("holistic-strict", "I", "B")],
    }
    gsession = GroupSession(students_table, logs)
    assert gsession.engine("d1").necessary("B", "I")
    assert not gsession.engine("d2").necessary("B", "I")
    coalition = ["d1", "d2"]
    assert gsession.relation(coalition, "N", "P").holds("B", "I")
    assert not gsession.relation(coalition, "N", "N").holds("B", "I")


def test_group_inclusion_chains(students_table, dean_statements):
    logs = {"d1": dean_statements[:1], "d2": dean_statements[:2]}
    gsession = GroupSession(students_table, logs)
    coalition = ["d1", "d2"]
    nn = gsession.relation(coalition, "N", "N")
    np_ = gsession.relation(coalition, "N", "P")
    pn = gsession.relation(coalition, "P", "N")
    pp = gsession.relation(coalition, "P", "P")
    assert nn.issubset(np_) and np_.issubset(pp)
    assert nn.issubset(pn) and pn.issubset(pp)


def test_group_indexed_completeness(students_table, dean_statements):
    logs = {"d1": dean_statements[:1], "d2": []}
    gsession = GroupSession(students_table, logs)
    coalition = ["d1", "d2"]
    for (i, k) in ((1, 1), (1, 2), (2, 1), (2, 2)):
        nn = gsession.relation(coalition, "N", "N", (i, k))
        pp = gsession.relation(coalition, "P", "P", (k, i))
        assert bool(np.all(nn.bits | pp.bits.T))
        np_ = gsession.relation(coalition, "N", "P", (i, k))
        pn = gsession.relation(coalition, "P", "N", (k, i))
        assert bool(np.all(np_.bits | pn.bits.T))


def test_incompatible_dm_refused_then_excluded(students_table):
    logs = {
        "ok": [_stmt("holistic-strict", "M", "D")],
        "broken": [_stmt("holistic-strict", "M", "D"), _stmt("holistic-strict", "D", "M")],
    }
    gsession = GroupSession(students_table, logs)
    assert gsession.incompatible_dms() == ["broken"]
    with pytest.raises(DmIncompatible):
        gsession.relation(["ok", "broken"], "N", "N")
    relation = gsession.relation(["ok", "broken"], "N", "N", exclude_incompatible=True)
    own = gsession.engine("ok").relation_matrix("necessary")
    assert np.array_equal(relation.bits, own.bits)
    with pytest.raises(EmptyCoalition):
        gsession.relation(["broken"], "N", "N", exclude_incompatible=True)


def test_bad_coalitions(students_table):
    gsession = GroupSession(students_table, {"d1": []})
    with pytest.raises(EmptyCoalition):
        gsession.relation([], "N", "N")
    with pytest.raises(UnknownDm):
        gsession.relation(["ghost"], "N", "N")
