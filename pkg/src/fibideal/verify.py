"""Batch verification suites over ranges of n.

Each suite runs one family of identity checks for every n in 1..max_n and
aggregates the outcomes into a :class:`SuiteReport`.  A run passes only if
every n passes every check in the suite; failures keep the full witness so
a regression is reproducible from the report alone.

Suites other than ``gf`` are embarrassingly parallel in n, so the runner
can fan out over a process pool.  Results are merged in ascending n no
matter how many workers ran, keeping reports deterministic.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable, Sequence

from .core import (
    IdentityCheck,
    verify_gf_identity,
    verify_lattice,
    verify_shape,
    verify_sigma,
    verify_theorem,
)

log = logging.getLogger(__name__)

#: Canonical suite order; reports always come back in this order.
SUITES = ("theorem", "gf", "lattice", "sigma", "shape")

DEFAULT_GF_MAX = 60


@dataclass
class SuiteReport:
    suite: str
    max_n: int
    total: int
    failures: list[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> int:
        failed_n = {check.n for check in self.failures}
        return self.total - len(failed_n)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary_line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.suite}: {self.passed}/{self.total} {status}"

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "passed": self.passed,
            "total": self.total,
            "ok": self.ok,
            "failures": [check.to_dict() for check in self.failures],
        }


def _theorem_checks(n: int) -> list[IdentityCheck]:
    return [verify_theorem(n)]


_SUITE_CHECKS: dict[str, Callable[[int], list[IdentityCheck]]] = {
    "theorem": _theorem_checks,
    "lattice": verify_lattice,
    "sigma": verify_sigma,
    "shape": verify_shape,
}


def _run_checks(suite: str, n: int) -> list[IdentityCheck]:
    # Top-level so ProcessPoolExecutor can pickle it.
    return _SUITE_CHECKS[suite](n)


def _fan_out(suite: str, max_n: int, jobs: int) -> Iterable[list[IdentityCheck]]:
    worker = partial(_run_checks, suite)
    ns = range(1, max_n + 1)
    if jobs <= 1:
        return map(worker, ns)
    chunk = max(1, max_n // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() yields in submission order, so the merge stays sorted by n.
        return list(pool.map(worker, ns, chunksize=chunk))


def run_suite(suite: str, max_n: int, gf_max: int = DEFAULT_GF_MAX,
              jobs: int = 1) -> SuiteReport:
    """Run one named suite and aggregate its failures.

    The ``gf`` suite compares a single truncated series against gf_max + 1
    polynomials, so it ignores ``max_n`` and ``jobs``; everything else runs
    per-n checks for 1 <= n <= max_n, optionally across ``jobs`` processes.
    """
    if suite == "gf":
        checks = verify_gf_identity(gf_max)
        failures = [check for check in checks if not check.ok]
        return SuiteReport("gf", gf_max, gf_max + 1, failures)
    if suite not in _SUITE_CHECKS:
        raise ValueError(f"unknown suite {suite!r}")
    failures = []
    for checks in _fan_out(suite, max_n, jobs):
        failures.extend(check for check in checks if not check.ok)
    return SuiteReport(suite, max_n, max_n, failures)


def run_suites(suites: Sequence[str], max_n: int, gf_max: int = DEFAULT_GF_MAX,
               jobs: int = 1) -> list[SuiteReport]:
    """Run the requested suites in canonical order."""
    unknown = sorted(set(suites) - set(SUITES))
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    if jobs < 1:
        jobs = os.cpu_count() or 1
    reports = []
    for suite in SUITES:
        if suite not in suites:
            continue
        report = run_suite(suite, max_n, gf_max=gf_max, jobs=jobs)
        log.info("%s", report.summary_line())
        reports.append(report)
    return reports
