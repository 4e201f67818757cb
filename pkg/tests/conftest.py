import random
from itertools import combinations

import pytest

from tripack.graph import Graph, IntervalModel


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow exhaustive checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])


def random_intervals(rng: random.Random, n: int) -> IntervalModel:
    ends = list(range(2 * n))
    rng.shuffle(ends)
    return IntervalModel(tuple(tuple(sorted(ends[2 * i:2 * i + 2])) for i in range(n)))


def interval_orders(n: int):
    """Every interval model on n vertices up to endpoint relabelling.

    Walks all open/close words of length 2n; vertices are numbered in the
    order their intervals open.
    """

    def rec(pos, opened, open_now, ivs):
        if pos == 2 * n:
            yield IntervalModel(tuple(ivs))
            return
        if opened < n:
            yield from rec(pos + 1, opened + 1, open_now + [opened], ivs + [[pos, None]])
        for i, v in enumerate(open_now):
            nxt = [list(x) for x in ivs]
            nxt[v][1] = pos
            yield from rec(pos + 1, opened, open_now[:i] + open_now[i + 1:], nxt)

    for m in rec(0, 0, [], []):
        yield IntervalModel(tuple(tuple(x) for x in m.intervals))


@pytest.fixture
def rng():
    return random.Random(20240601)


# -- acceptance summary ------------------------------------------------------

_criteria: dict[int, list[str]] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.setdefault(marker, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        outcomes = _criteria[n]
        if "failed" in outcomes:
            verdict = "FAIL"
        elif "passed" in outcomes:
            verdict = "PASS"
        else:
            verdict = "SKIPPED"
        note = f" ({outcomes.count('skipped')} slow part skipped)" if verdict == "PASS" and "skipped" in outcomes else ""
        terminalreporter.write_line(f"criterion {n}: {verdict}{note}")
