"""Check records and verification reports (JSON-serializable)."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

PASS, FAIL, FINDING = "pass", "fail", "finding"


@dataclass
class Check:
    id: str
    description: str
    source: str
    status: str
    witness: str | None = None
    elapsed_ms: float | None = None

    def to_dict(self):
        return {
            "id": self.id,
            "description": self.description,
            "source": self.source,
            "status": self.status,
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class Report:
    suite: str
    family: str | None = None
    params: dict = field(default_factory=dict)
    seed: int = 0
    timing: bool = False
    checks: list = field(default_factory=list)
    _clock: float = field(default_factory=time.perf_counter, repr=False, compare=False)

    def add(self, id, description, ok, source="", witness=None, finding=False, started=None):
        if finding:
            status = FINDING
        else:
            status = PASS if ok else FAIL
        if status == PASS:
            witness = None
        elif witness is None:
            witness = "" if finding else "check returned false"
        elapsed = None
        now = time.perf_counter()
        if self.timing:
            elapsed = round((now - (self._clock if started is None else started)) * 1000, 3)
        self._clock = now
        c = Check(id, description, source, status, None if witness is None else str(witness), elapsed)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix=""):
        for c in other.checks:
            c.id = prefix + c.id
            self.checks.append(c)

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def findings(self):
        return [c for c in self.checks if c.status == FINDING]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self):
        out = {PASS: 0, FAIL: 0, FINDING: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_dict(self, version=""):
        return {
            "suite": self.suite,
            "family": self.family,
            "params": self.params,
            "seed": self.seed,
            "version": version,
            "summary": self.counts(),
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.id)],
        }

    def to_json(self, version="") -> str:
        return json.dumps(self.to_dict(version), indent=2, sort_keys=True, ensure_ascii=False)
