import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dominance_matrix_oracle, ik_dominates_oracle
from pyror.dominance import dominance_matrix, dominates, ik_dominates
from pyror.errors import MissingEvaluationUnsupported
from pyror.model import validate_table


def test_ik_dominates_students_examples(students_table):
    # D's worst profile ties F's best profile
    assert ik_dominates(students_table, "D", "F", 1, 2) is True
    # B's worst loses to M's worst on Phy
    assert ik_dominates(students_table, "B", "M", 1, 1) is False
    # reflexivity whenever i >= k
    for alt in students_table.alternatives:
        for i in range(1, 3):
            for k in range(1, i + 1):
                assert ik_dominates(students_table, alt, alt, i, k)


def test_normal_dominance_students_examples(students_table):
    assert dominates(students_table, "A", "M") is True
    assert dominates(students_table, "H", "F") is True
    for alt in students_table.alternatives:
        assert dominates(students_table, alt, alt)


def test_strong_matrix_spot_checks(students_table):
    strong = dominance_matrix(students_table, "strong")
    assert strong.holds("D", "L")
    assert strong.holds("A", "L")
    assert strong.holds("H", "L")


def test_weak_matrix_diagonal(students_table):
    weak = dominance_matrix(students_table, "weak")
    assert all(weak.holds(a, a) for a in students_table.alternatives)


def test_matrices_match_bruteforce_oracle(students_table, students_ranks):
    for kind in ("strong", "normal", "weak"):
        matrix = dominance_matrix(students_table, kind)
        expected = dominance_matrix_oracle(students_ranks, kind)
        for a in students_table.alternatives:
            for b in students_table.alternatives:
                assert matrix.holds(a, b) == expected[(a, b)], (kind, a, b)


def test_ik_matrix_matches_pointwise_oracle(students_table, students_ranks):
    for i in (1, 2):
        for k in (1, 2):
            matrix = dominance_matrix(students_table, "ik", i=i, k=k)
            for a in students_table.alternatives:
                for b in students_table.alternatives:
                    assert matrix.holds(a, b) == ik_dominates_oracle(students_ranks, a, b, i, k)


def test_missing_cells_rejected_without_collapse():
    problem = {
        "n": 2,
        "criteria": [{"id": "g", "scale": {"kind": "quantitative", "range": [0, 9]}}],
        "alternatives": {"a": {"g": [1, 2]}, "b": {"g": None}},
    }
    table = validate_table(problem)
    with pytest.raises(MissingEvaluationUnsupported):
        ik_dominates(table, "a", "b", 1, 2)
    with pytest.raises(MissingEvaluationUnsupported):
        dominance_matrix(table, "strong")


tables = st.tuples(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=2, max_value=6),
    st.integers(min_value=1, max_value=3),
).flatmap(
    lambda dims: st.lists(
        st.lists(
            st.lists(st.integers(min_value=0, max_value=5), min_size=dims[0], max_size=dims[0]).map(sorted),
            min_size=dims[2],
            max_size=dims[2],
        ),
        min_size=dims[1],
        max_size=dims[1],
    )
)


def _table_from(rows):
    m = len(rows[0])
    n = len(rows[0][0])
    problem = {
        "n": n,
        "criteria": [{"id": f"g{j}", "scale": {"kind": "quantitative"}} for j in range(m)],
        "alternatives": {
            f"a{i}": {f"g{j}": list(cell) for j, cell in enumerate(row)} for i, row in enumerate(rows)
        },
    }
    return validate_table(problem)


@settings(max_examples=40, deadline=None)
@given(rows=tables)
def test_dominance_laws_on_random_tables(rows):
    table = _table_from(rows)
    n = table.n
    mats = {
        (i, k): dominance_matrix(table, "ik", i=i, k=k) for i in range(1, n + 1) for k in range(1, n + 1)
    }
    normal = dominance_matrix(table, "normal")

    inter = None
    for i in range(1, n + 1):
        inter = mats[(i, i)] if inter is None else inter.intersect(mats[(i, i)])
    assert np.array_equal(inter.bits, normal.bits)

    for (i, k), mat in mats.items():
        if i >= k:
            assert mat.is_reflexive()
        if i <= k:
            assert mat.is_transitive()
        assert mats[(1, n)].issubset(mat)
        assert mat.issubset(mats[(n, 1)])
        for r in range(i, n + 1):
            for s in range(1, k + 1):
                assert mat.issubset(mats[(r, s)])
    assert mats[(1, n)].issubset(normal)
    assert normal.issubset(mats[(n, 1)])
