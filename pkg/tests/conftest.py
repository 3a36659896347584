"""Shared fixtures and the per-criterion acceptance summary."""

from __future__ import annotations

import pytest

from lagfill.cli import load_table
from lagfill.diagram import OrientedDiagram, diagram_from_text

_CRITERIA: dict[int, list[str]] = {}


@pytest.fixture(scope="session")
def records():
    return {r.name: r for r in load_table()}


@pytest.fixture(scope="session")
def bundled(records):
    """Diagram for a bundled record name."""

    def get(name: str) -> OrientedDiagram:
        return diagram_from_text(records[name].presentation)

    return get


@pytest.fixture(scope="session")
def small_diagrams(records):
    """Every bundled knot diagram with at most seven crossings."""
    out = {}
    for name, rec in records.items():
        d = diagram_from_text(rec.presentation)
        if d.c <= 7:
            out[name] = d
    return out


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for mark in report.keywords:
        if mark.startswith("criterion_"):
            _CRITERIA.setdefault(int(mark.split("_")[1]), []).append(report.outcome)


def pytest_collection_modifyitems(items):
    # expose the criterion number as a keyword the report can see
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.keywords[f"criterion_{m.args[0]}"] = True


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        outcomes = _CRITERIA[n]
        ok = all(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}")
