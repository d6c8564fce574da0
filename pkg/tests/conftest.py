"""Criterion markers and the per-criterion summary."""

from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

CRITERIA = {
    1: "golden listings parse and round-trip",
    2: "query answer for the graffiti example",
    3: "disjunction closure",
    4: "scholarly resource fuses only with the negated query",
    5: "prescription query returns exactly two triples",
    6: "no negation as failure; oracle NotEntailed at k=3",
    7: "calculus properties over random documents",
    8: "engine sound against the finite-model oracle",
    9: "monotonicity under an extra fact",
    10: "CLI exit-code contract",
}

_results: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    config.addinivalue_line("markers", "slow: takes more than a few seconds")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _results.setdefault(marker, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    m = item.get_closest_marker("criterion")
    if m is not None:
        outcome.get_result().criterion = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status = "PASS" if all(o == "passed" for o in _results[n]) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d} {status}  {CRITERIA.get(n, '')}")
