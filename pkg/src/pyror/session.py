"""Stateful sessions: problem + append-only statement log, caching and persistence.

One JSON document per session, written atomically (temp file + rename).  Query
results are cached keyed by the log version, so replaying a persisted log
reproduces every response bit for bit.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable, Mapping

from .engine import PreferenceEngine
from .errors import BadVersion, UnknownSession, ValidationError, Violation
from .groups import GroupSession
from .lp import LpSolver, PreferenceStatement, statement_from_dict, validate_statement
from .model import PerformanceTable, collapse_to_two_point, validate_table
from .sorting import AssignmentExample, ClassStructure, SortingEngine, validate_examples


@dataclass
class LogEntry:
    statement: PreferenceStatement
    added_at: str

    def to_dict(self) -> dict[str, Any]:
        d = self.statement.to_dict()
        d["added_at"] = self.added_at
        return d


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class DecisionSession:
    """One elicitation session: immutable problem, growing statement log."""

    def __init__(self, session_id: str, problem: Mapping[str, Any], table: PerformanceTable):
        self.id = session_id
        self.problem = dict(problem)
        self.table = table
        self.log: list[LogEntry] = []
        self.sorting_spec: dict[str, Any] | None = None
        self.solver = LpSolver()
        self._cache: dict[str, Any] = {}
        self._engines: dict[int, PreferenceEngine] = {}
        self._collapsed: PerformanceTable | None = None
        self.lock = threading.Lock()

    @property
    def version(self) -> int:
        return len(self.log)

    def statements(self, version: int | None = None) -> list[PreferenceStatement]:
        upto = self.version if version is None else version
        return [entry.statement for entry in self.log[:upto]]

    def collapsed_table(self) -> PerformanceTable:
        if self._collapsed is None:
            self._collapsed = collapse_to_two_point(self.table)
        return self._collapsed

    def effective_table(self) -> PerformanceTable:
        """Preference queries on tables with missing cells run on the 2-point reduction."""
        return self.collapsed_table() if self.table.has_missing() else self.table

    def engine(self, version: int | None = None) -> PreferenceEngine:
        v = self.version if version is None else version
        if v not in self._engines:
            self._engines[v] = PreferenceEngine(
                self.effective_table(), self.statements(v), solver=self.solver
            )
        return self._engines[v]

    def group_session(self) -> GroupSession:
        logs: dict[str, list[PreferenceStatement]] = {}
        for entry in self.log:
            logs.setdefault(entry.statement.author, []).append(entry.statement)
        return GroupSession(self.effective_table(), logs, solver=self.solver)

    def sorting_engine(self, joint: bool = False) -> SortingEngine:
        if not self.sorting_spec:
            raise ValidationError(
                [Violation("sorting", "unset", "session has no class structure or assignment examples")]
            )
        classes = ClassStructure(labels=tuple(self.sorting_spec["classes"]))
        examples = [
            AssignmentExample(alternative=e["alt"], low=int(e["L"]), high=int(e["R"]))
            for e in self.sorting_spec.get("examples", [])
        ]
        statements = self.statements() if joint else ()
        return SortingEngine(
            self.effective_table(), classes, examples, statements=statements, solver=self.solver
        )

    # -- mutations ---------------------------------------------------------------

    def add_statement(self, stmt: PreferenceStatement) -> dict[str, Any]:
        validate_statement(self.table, stmt)
        with self.lock:
            self.log.append(LogEntry(statement=stmt, added_at=_now()))
            compat = self.engine().compatibility()
            return {
                "version": self.version,
                "compatible": compat.compatible,
                "epsilon": compat.epsilon,
            }

    def revert(self, version: int) -> int:
        with self.lock:
            if not 0 <= version <= self.version:
                raise BadVersion(f"version {version} outside 0..{self.version}")
            del self.log[version:]
            self._engines = {v: e for v, e in self._engines.items() if v <= version}
            self._cache = {k: v for k, v in self._cache.items() if json.loads(k)[0] <= version}
            return self.version

    def set_sorting(self, spec: Mapping[str, Any] | None) -> None:
        if spec is not None:
            classes = ClassStructure(labels=tuple(spec.get("classes", ())))
            examples = [
                AssignmentExample(alternative=e["alt"], low=int(e["L"]), high=int(e["R"]))
                for e in spec.get("examples", [])
            ]
            validate_examples(self.table, classes, examples)
        with self.lock:
            self.sorting_spec = dict(spec) if spec is not None else None
            self._cache = {}  # sorting answers depend on classes/examples, not only the log

    # -- caching -----------------------------------------------------------------

    def cached(self, kind: str, params: Mapping[str, Any], compute: Callable[[], Any]) -> Any:
        key = json.dumps([self.version, kind, params], sort_keys=True, default=str)
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    # -- persistence ---------------------------------------------------------------

    def to_document(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "problem": self.problem,
            "sorting": self.sorting_spec,
            "log": [entry.to_dict() for entry in self.log],
        }

    @classmethod
    def from_document(cls, doc: Mapping[str, Any]) -> "DecisionSession":
        table = validate_table(doc["problem"])
        session = cls(doc["id"], doc["problem"], table)
        session.sorting_spec = doc.get("sorting")
        for raw in doc.get("log", []):
            stmt = statement_from_dict(raw)
            session.log.append(LogEntry(statement=stmt, added_at=raw.get("added_at", _now())))
        return session


class SessionStore:
    """Registry of sessions, optionally persisted one JSON document each."""

    def __init__(self, root: Path | str | None = None):
        self.root = Path(root) if root is not None else None
        if self.root is not None:
            self.root.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, DecisionSession] = {}
        self._lock = threading.Lock()

    def create(self, problem: Mapping[str, Any]) -> DecisionSession:
        table = validate_table(problem)
        session_id = uuid.uuid4().hex[:12]
        session = DecisionSession(session_id, problem, table)
        sorting = problem.get("sorting")
        if sorting:
            session.set_sorting(sorting)
        with self._lock:
            self._sessions[session_id] = session
        self.save(session)
        return session

    def get(self, session_id: str) -> DecisionSession:
        with self._lock:
            if session_id in self._sessions:
                return self._sessions[session_id]
        if self.root is not None:
            path = self.root / f"{session_id}.json"
            if path.exists():
                session = DecisionSession.from_document(json.loads(path.read_text()))
                with self._lock:
                    self._sessions[session_id] = session
                return session
        raise UnknownSession(f"unknown session {session_id!r}")

    def save(self, session: DecisionSession) -> None:
        if self.root is None:
            return
        path = self.root / f"{session.id}.json"
        payload = json.dumps(session.to_document(), indent=2)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(payload)
            os.replace(tmp, path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)

    def ids(self) -> list[str]:
        with self._lock:
            known = set(self._sessions)
        if self.root is not None:
            known.update(p.stem for p in self.root.glob("*.json"))
        return sorted(known)
