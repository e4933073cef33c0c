"""Shared fixtures: an itertools brute force (independent of the numpy oracle)
and a hypothesis strategy for random labeled trees."""
from itertools import combinations

import pytest
from hypothesis import strategies as st

from gttrees.core import from_edge_list, path_tree, star_tree


def brute_min_sets(T, pred):
    for k in range(T.n + 1):
        found = [frozenset(c) for c in combinations(range(T.n), k) if pred(T, set(c))]
        if found:
            return found
    return []


def brute_is_tds(T, S):
    return all(set(T.adjacency[v]) & S for v in range(T.n))


def brute_is_vc(T, S):
    return all(u in S or v in S for u, v in T.edges)


def brute_gtt_sets(T):
    vcs = set(brute_min_sets(T, brute_is_vc))
    tds = brute_min_sets(T, brute_is_tds)
    return sorted((S for S in tds if S in vcs), key=sorted)


@st.composite
def labeled_trees(draw, min_n=1, max_n=12):
    """Random recursive tree under a random relabeling."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parents = [draw(st.integers(min_value=0, max_value=i - 1)) for i in range(1, n)]
    perm = draw(st.permutations(range(n)))
    return from_edge_list(n, [(perm[i], perm[p]) for i, p in enumerate(parents, 1)])


@pytest.fixture
def P4():
    return path_tree(4)


@pytest.fixture
def P8():
    return path_tree(8)


@pytest.fixture
def K2():
    return path_tree(2)


@pytest.fixture
def K13():
    return star_tree(4)


# -- acceptance reporting ---------------------------------------------------------

_ACCEPTANCE: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        number, title = mark.args
        verdict = "PASS" if rep.passed else "FAIL"
        _ACCEPTANCE.append(f"criterion {number:>2} {verdict} {title} ({rep.duration:.1f}s)")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
