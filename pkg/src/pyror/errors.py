"""Exception hierarchy shared by all engine layers and the HTTP service."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    """One validation problem, addressable by field path."""

    field: str
    code: str
    message: str

    def as_dict(self) -> dict[str, str]:
        return {"field": self.field, "code": self.code, "message": self.message}


class RorError(Exception):
    """Base error. `code` is stable and machine-readable; `details` is JSON-able."""

    code = "error"

    def __init__(self, message: str, details: Any = None):
        super().__init__(message)
        self.details = details

    def as_dict(self) -> dict[str, Any]:
        return {"code": self.code, "message": str(self), "details": self.details}


class ValidationError(RorError):
    code = "validation_error"

    def __init__(self, violations: list[Violation] | None = None, message: str = "invalid input"):
        self.violations = list(violations or [])
        super().__init__(message, details=[v.as_dict() for v in self.violations])


class UnknownAlternative(RorError):
    code = "unknown_alternative"


class UnknownCriterion(RorError):
    code = "unknown_criterion"


class UnknownReferenceAlternative(RorError):
    code = "unknown_reference_alternative"


class IndexOutOfRange(RorError):
    code = "index_out_of_range"


class MissingEvaluationUnsupported(RorError):
    code = "missing_evaluation_unsupported"


class RangeUndeclared(RorError):
    code = "range_undeclared"


class SolverFailure(RorError):
    code = "solver_failure"


class MilpFailure(RorError):
    code = "milp_failure"


class IncompatibleSession(RorError):
    code = "incompatible_session"


class IncompatibleSorting(RorError):
    code = "incompatible_sorting"


class EmptyCoalition(RorError):
    code = "empty_coalition"


class UnknownDm(RorError):
    code = "unknown_dm"


class DmIncompatible(RorError):
    code = "dm_incompatible"

    def __init__(self, dms: list[str]):
        super().__init__(f"decision makers with inconsistent statements: {', '.join(dms)}", details=dms)
        self.dms = list(dms)


class NotTransitive(RorError):
    code = "not_transitive"


class UnknownSession(RorError):
    code = "unknown_session"


class BadVersion(RorError):
    code = "bad_version"
