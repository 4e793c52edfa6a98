import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pyror.model import validate_table

DATA_DIR = Path(__file__).parent / "data"

GRADE_LABELS = ["Very Bad", "Bad", "Medium", "Good", "Very Good"]

# the 10-student scholarship problem: 3 qualitative criteria, 2-point intervals
STUDENTS_PROBLEM = {
    "n": 2,
    "criteria": [
        {"id": "Mat", "scale": {"kind": "qualitative", "labels": GRADE_LABELS}},
        {"id": "Phy", "scale": {"kind": "qualitative", "labels": GRADE_LABELS}},
        {"id": "Com", "scale": {"kind": "qualitative", "labels": GRADE_LABELS}},
    ],
    "alternatives": {
        "A": {"Mat": "Medium", "Phy": "Very Good", "Com": "Very Good"},
        "B": {"Mat": ["Good", "Very Good"], "Phy": ["Very Bad", "Medium"], "Com": ["Bad", "Good"]},
        "C": {"Mat": ["Bad", "Very Good"], "Phy": "Good", "Com": ["Medium", "Good"]},
        "D": {"Mat": ["Good", "Very Good"], "Phy": ["Medium", "Good"], "Com": ["Medium", "Good"]},
        "E": {"Mat": "Very Good", "Phy": ["Very Bad", "Good"], "Com": ["Medium", "Good"]},
        "F": {"Mat": ["Very Bad", "Good"], "Phy": ["Bad", "Medium"], "Com": ["Bad", "Medium"]},
        "H": {"Mat": ["Medium", "Good"], "Phy": ["Medium", "Good"], "Com": ["Medium", "Good"]},
        "I": {"Mat": "Very Good", "Phy": ["Medium", "Very Good"], "Com": "Bad"},
        "L": {"Mat": ["Very Bad", "Bad"], "Phy": ["Bad", "Medium"], "Com": ["Very Bad", "Medium"]},
        "M": {"Mat": ["Very Bad", "Bad"], "Phy": ["Good", "Very Good"], "Com": "Very Good"},
    },
}

# the same table as rank tuples per criterion, for the independent oracles
STUDENTS_RANKS = {
    "A": [(3, 3), (5, 5), (5, 5)],
    "B": [(4, 5), (1, 3), (2, 4)],
    "C": [(2, 5), (4, 4), (3, 4)],
    "D": [(4, 5), (3, 4), (3, 4)],
    "E": [(5, 5), (1, 4), (3, 4)],
    "F": [(1, 4), (2, 3), (2, 3)],
    "H": [(3, 4), (3, 4), (3, 4)],
    "I": [(5, 5), (3, 5), (2, 2)],
    "L": [(1, 2), (2, 3), (1, 3)],
    "M": [(1, 2), (4, 5), (5, 5)],
}

# the elicitation sequence: M preferred to D; (M over I) more than (C over H); C ~ M
DEAN_STATEMENTS = [
    {"kind": "holistic-strict", "alternatives": ["M", "D"], "credibility": 1},
    {"kind": "intensity-strict", "alternatives": ["M", "I", "C", "H"], "credibility": 2},
    {"kind": "holistic-indiff", "alternatives": ["C", "M"], "credibility": 3},
]

# three pairwise non-dominated alternatives on two opposing criteria
ANTICHAIN_PROBLEM = {
    "n": 1,
    "criteria": [
        {"id": "g1", "scale": {"kind": "quantitative"}},
        {"id": "g2", "scale": {"kind": "quantitative"}},
    ],
    "alternatives": {
        "a": {"g1": 3, "g2": 1},
        "b": {"g1": 2, "g2": 2},
        "c": {"g1": 1, "g2": 3},
    },
}


@pytest.fixture(scope="session")
def students_problem():
    return json.loads(json.dumps(STUDENTS_PROBLEM))


@pytest.fixture(scope="session")
def students_table():
    return validate_table(STUDENTS_PROBLEM)


@pytest.fixture(scope="session")
def students_ranks():
    return STUDENTS_RANKS


@pytest.fixture(scope="session")
def dean_statements():
    from pyror.lp import statement_from_dict

    return [statement_from_dict(raw) for raw in DEAN_STATEMENTS]


@pytest.fixture(scope="session")
def antichain_table():
    return validate_table(ANTICHAIN_PROBLEM)
