from __future__ import annotations

import pytest

from colorfix.construct import complete_graph, cycle_graph, odd_wheel, path_graph
from colorfix.harness import enumerate_connected_graphs

_acceptance: dict[str, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def corpus7():
    return [g for n in range(1, 8) for g in enumerate_connected_graphs(n)]


@pytest.fixture(scope="session")
def corpus8(corpus7):
    return corpus7 + list(enumerate_connected_graphs(8))


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def w5():
    return odd_wheel(5)[0]


@pytest.fixture
def p3():
    return path_graph(3)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        doc = getattr(report, "criterion_doc", "")
        _acceptance[report.nodeid] = ("PASS" if report.passed else "FAIL", doc)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    doc = (item.function.__doc__ or "").strip().splitlines()
    rep.criterion_doc = doc[0] if doc else item.name


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (verdict, doc) in _acceptance.items():
        terminalreporter.write_line(f"{verdict}  {doc}")
