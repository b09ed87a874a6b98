"""Verification reports: the report-v1 JSON schema and merging."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

SCHEMA = "report-v1"

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"
CENSUS = "census"

_STATUSES = (PASS, FAIL, VACUOUS, CENSUS)


@dataclass
class Check:
    name: str
    status: str
    counterexamples: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    seed: int | None = None
    sample_size: int | None = None
    wall_ms: float = 0.0

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def content(self):
        """Everything that must be deterministic given (fixture, seed)."""
        return (
            self.name,
            self.status,
            json.dumps(self.counterexamples, sort_keys=True, default=str),
            json.dumps(self.counts, sort_keys=True, default=str),
            self.seed,
            self.sample_size,
        )


@dataclass
class Report:
    fixture: str
    tool_version: str = ""
    checks: list[Check] = field(default_factory=list)

    def __post_init__(self):
        if not self.tool_version:
            from . import __version__

            self.tool_version = __version__

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> str:
        doc = {
            "schema": SCHEMA,
            "tool_version": self.tool_version,
            "fixture": self.fixture,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "counterexamples": c.counterexamples,
                    "counts": c.counts,
                    "seed": c.seed,
                    "sample_size": c.sample_size,
                    "wall_ms": c.wall_ms,
                }
                for c in self.checks
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True, default=str)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        doc = json.loads(text)
        if doc.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {doc.get('schema')!r}")
        rep = cls(fixture=doc["fixture"], tool_version=doc["tool_version"])
        for c in doc["checks"]:
            rep.checks.append(
                Check(
                    name=c["name"],
                    status=c["status"],
                    counterexamples=c["counterexamples"],
                    counts=c["counts"],
                    seed=c["seed"],
                    sample_size=c["sample_size"],
                    wall_ms=c["wall_ms"],
                )
            )
        return rep


def merge(reports: list[Report]) -> Report:
    """Associative merge with stable (fixture, check-name) ordering."""
    if not reports:
        raise ValueError("nothing to merge")
    names = sorted({r.fixture for r in reports})
    fixture = names[0] if len(names) == 1 else "+".join(names)
    out = Report(fixture=fixture, tool_version=reports[0].tool_version)
    keyed = []
    for r in reports:
        for c in r.checks:
            keyed.append(((r.fixture, c.name), c))
    keyed.sort(key=lambda t: t[0])
    out.checks = [c for _, c in keyed]
    return out


class timed:
    """Context manager stamping wall_ms onto a Check."""

    def __init__(self, check: Check):
        self.check = check

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.check

    def __exit__(self, *exc):
        self.check.wall_ms = (time.perf_counter() - self.t0) * 1e3
        return False
