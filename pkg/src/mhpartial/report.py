"""Structured results of axiom suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
PRECONDITION_FAILED = "precondition_failed"
EXPECTED_FAIL = "expected_fail_confirmed"

STATUSES = (PASS, FAIL, INCONCLUSIVE, PRECONDITION_FAILED, EXPECTED_FAIL)

REPORT_VERSION = 1
MAX_WITNESSES = 3  # per clause, so every failing clause keeps a witness


def render(x):
    """JSON-friendly, deterministic rendering of keys, scalars and vectors."""
    from .algebra import Vec

    if isinstance(x, Vec):
        return x.to_json()
    if isinstance(x, tuple):
        return [render(i) for i in x]
    if isinstance(x, list):
        return [render(i) for i in x]
    if isinstance(x, dict):
        return {str(k): render(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class CheckReport:
    """Outcome of one suite.

    ``clauses`` maps clause name to its own status; ``witnesses`` carries the
    failing inputs with both evaluated sides.
    """

    suite: str
    status: str = PASS
    witnesses: list = field(default_factory=list)
    window: str = ""
    seed: int = 0
    clauses: dict = field(default_factory=dict)
    checked: int = 0
    notes: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.status == PASS

    def clause(self, name, ok=True):
        """Record a clause outcome; a failing clause fails the report."""
        prev = self.clauses.get(name, PASS)
        status = PASS if ok else FAIL
        if ok is None:
            status = INCONCLUSIVE
        if prev == FAIL or status == FAIL:
            self.clauses[name] = FAIL
        elif prev == INCONCLUSIVE or status == INCONCLUSIVE:
            self.clauses[name] = INCONCLUSIVE
        else:
            self.clauses[name] = PASS
        self._update()
        return ok

    def check(self, name, lhs, rhs, inputs):
        """Compare two evaluated sides; store a witness on mismatch."""
        self.checked += 1
        ok = lhs == rhs
        if not ok:
            self.fail(name, inputs, lhs, rhs)
        else:
            self.clause(name, True)
        return ok

    def fail(self, name, inputs, lhs=None, rhs=None):
        self.clause(name, False)
        self._witness({"clause": name, "inputs": render(inputs), "lhs": render(lhs), "rhs": render(rhs)})

    def _witness(self, w):
        if sum(x["clause"] == w["clause"] for x in self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(w)

    def inconclusive(self, name, reason):
        self.clause(name, None)
        self.notes.append(f"{name}: {reason}")

    def _update(self):
        if self.status == PRECONDITION_FAILED:
            return
        vals = self.clauses.values()
        if FAIL in vals:
            self.status = FAIL
        elif INCONCLUSIVE in vals:
            self.status = INCONCLUSIVE
        else:
            self.status = PASS

    def precondition_failed(self, reason):
        self.status = PRECONDITION_FAILED
        self.notes.append(reason)
        return self

    def merge(self, other: "CheckReport", prefix=None):
        """Fold another report's clauses into this one."""
        pre = prefix or other.suite
        if other.status == PRECONDITION_FAILED:
            self.clauses[pre] = FAIL
            self.notes.append(f"{pre}: precondition failed")
        for name, st in other.clauses.items():
            self.clauses[f"{pre}.{name}"] = st
        for w in other.witnesses:
            self._witness(dict(w, clause=f"{pre}.{w['clause']}"))
        self.notes.extend(f"{pre}: {n}" for n in other.notes)
        self.checked += other.checked
        self._update()
        return self

    def expect_fail(self):
        """Turn a confirmed failure into ``expected_fail_confirmed``.

        A pass where a failure was expected is itself a failure.
        """
        if self.status == FAIL:
            self.status = EXPECTED_FAIL
        elif self.status == PASS:
            self.status = FAIL
            self.notes.append("expected a failure but every clause passed")
        return self

    def to_dict(self):
        return {
            "report_version": REPORT_VERSION,
            "suite": self.suite,
            "status": self.status,
            "window": self.window,
            "seed": self.seed,
            "checked": self.checked,
            "clauses": dict(sorted(self.clauses.items())),
            "witnesses": self.witnesses,
            "notes": self.notes,
            "data": render(self.data),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self):
        lines = [f"[{self.status.upper()}] {self.suite}  ({self.checked} checks; window: {self.window})"]
        for name, st in sorted(self.clauses.items()):
            lines.append(f"    {name}: {st}")
        for w in self.witnesses:
            lines.append(f"    witness {w['clause']}: inputs={w['inputs']}")
            lines.append(f"        lhs={w['lhs']}")
            lines.append(f"        rhs={w['rhs']}")
        for n in self.notes:
            lines.append(f"    note: {n}")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()
