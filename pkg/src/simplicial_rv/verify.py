"""Seeded runner for the property suites."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .properties import Property, suite_properties


@dataclass
class PropertyResult:
    name: str
    suite: str
    instances: int
    violations: int
    first: Optional[str]


@dataclass
class Report:
    suite: str
    seed: int
    trials: int
    results: list[PropertyResult]

    @property
    def violations(self) -> int:
        return sum(r.violations for r in self.results)

    def render(self) -> str:
        lines = [f"suite={self.suite} seed={self.seed} trials={self.trials}"]
        for r in self.results:
            status = "ok  " if r.violations == 0 else "FAIL"
            lines.append(f"{status} {r.suite}/{r.name}: {r.violations}/{r.instances} violations")
            if r.first is not None:
                lines.append(f"     first counterexample: {r.first}")
        lines.append(f"total violations: {self.violations}")
        return "\n".join(lines)


def run_property(prop: Property, seed: int, trials: int) -> PropertyResult:
    rng = random.Random(f"{seed}:{prop.suite}:{prop.name}")
    n = prop.instances(trials)
    bad, first = 0, None
    for _ in range(n):
        msg = prop.check(rng)
        if msg is not None:
            bad += 1
            if first is None:
                first = msg
    return PropertyResult(prop.name, prop.suite, n, bad, first)


def verify(suite: str, seed: int, trials: int) -> Report:
    """Run every property of ``suite`` (or ``"all"``); raises ``KeyError`` on an unknown suite."""
    props = suite_properties(suite)
    return Report(suite, seed, trials, [run_property(p, seed, trials) for p in props])
