"""Verification report records and their JSON form."""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_arith import rat_str
from .graded_ring import GradedPoly
from .qseries import QSeries

VERSION = "1"
STATUSES = ("pass", "fail", "reference-mismatch", "skip")


def render(value) -> object:
    """Exact JSON rendering: rationals as "p/q", polynomials and series as maps."""
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return rat_str(value)
    if isinstance(value, (GradedPoly, QSeries)):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    if isinstance(value, float):
        return value
    return str(value)


def detail(name: str, expected, got, ok: bool | None = None) -> dict:
    d = {"name": name, "expected": render(expected), "got": render(got)}
    if ok is not None:
        d["ok"] = ok
    return d


@dataclass
class CheckEntry:
    check_id: str
    identity: str
    params: dict
    status: str
    details: list = field(default_factory=list)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_json(self) -> dict:
        return {"check_id": self.check_id, "identity": self.identity,
                "params": render(self.params), "status": self.status,
                "details": self.details}

    @classmethod
    def from_dict(cls, d: dict) -> "CheckEntry":
        return cls(d["check_id"], d["identity"], d["params"], d["status"], d.get("details", []))


def entry(check_id: str, identity: str, params: dict, ok: bool, details=(),
          mismatch: bool = False) -> CheckEntry:
    """Pass/fail entry; ``mismatch`` downgrades a failure to reference-mismatch."""
    status = "pass" if ok else ("reference-mismatch" if mismatch else "fail")
    return CheckEntry(check_id, identity, params, status, list(details))


def skip(check_id: str, identity: str, params: dict, reason: str) -> CheckEntry:
    return CheckEntry(check_id, identity, params, "skip",
                      [{"name": "reason", "expected": None, "got": reason}])


class VerificationReport:
    """Thread-safe accumulator; output is sorted by check id."""

    def __init__(self, config: dict | None = None):
        self.config = dict(config or {})
        self._entries: list[CheckEntry] = []
        self._lock = threading.Lock()

    def add(self, *items):
        with self._lock:
            for item in items:
                if isinstance(item, dict):
                    item = CheckEntry.from_dict(item)
                if isinstance(item, CheckEntry):
                    self._entries.append(item)
                else:
                    self._entries.extend(CheckEntry.from_dict(i) if isinstance(i, dict) else i
                                         for i in item)

    @property
    def entries(self) -> list[CheckEntry]:
        with self._lock:
            return sorted(self._entries, key=lambda e: (e.check_id, json.dumps(e.params, sort_keys=True)))

    def counts(self) -> dict[str, int]:
        out = dict.fromkeys(STATUSES, 0)
        for e in self.entries:
            out[e.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    def to_json(self) -> dict:
        return {"version": VERSION, "config": render(self.config),
                "checks": [e.to_json() for e in self.entries]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def human(self, verbose: bool = False) -> str:
        lines = []
        for e in self.entries:
            lines.append(f"[{e.status.upper():^18}] {e.check_id}: {e.identity}")
            show = verbose or e.status in ("fail", "reference-mismatch", "skip")
            for d in e.details:
                if show and (verbose or d.get("ok") is not True):
                    lines.append(f"    {d['name']}: expected {_short(d['expected'])}, "
                                 f"got {_short(d['got'])}")
                    if e.status == "fail":
                        break
        c = self.counts()
        lines.append("summary: " + ", ".join(f"{k} {v}" for k, v in c.items()))
        return "\n".join(lines)


def _short(x, limit: int = 160) -> str:
    s = x if isinstance(x, str) else json.dumps(x, sort_keys=True)
    return s if len(s) <= limit else s[: limit - 3] + "..."
