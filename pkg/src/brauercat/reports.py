"""Tabular pass/fail reports produced by the verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    group: str
    instance: str
    passed: bool


@dataclass(frozen=True)
class CheckReport:
    title: str
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def group_counts(self) -> dict[str, tuple[int, int]]:
        """Per-group (passed, failed) counts, in first-seen order."""
        counts: dict[str, tuple[int, int]] = {}
        for r in self.results:
            ok, bad = counts.get(r.group, (0, 0))
            counts[r.group] = (ok + 1, bad) if r.passed else (ok, bad + 1)
        return counts

    def table_lines(self) -> list[str]:
        width = max((len(r.group) for r in self.results), default=0)
        lines = [
            f"{'PASS' if r.passed else 'FAIL'}  {r.group:<{width}}  {r.instance}"
            for r in self.results
        ]
        lines.append(self.summary())
        return lines

    def summary(self) -> str:
        bad = len(self.failures())
        ok = len(self.results) - bad
        return f"{self.title}: {len(self.results)} instances, {ok} passed, {bad} failed"
