"""Linear-time dynamic programs for the vertex cover and total domination numbers.

Both solvers root the tree, order vertices by an explicit BFS (no recursion,
so long paths are fine) and fold child tables into parents in reverse order.
Infeasible states hold ``math.inf``, which saturates under addition.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Tree
from .errors import NoTotalDominatingSet

INFEASIBLE = math.inf

# gamma_t states, indexed in this order in DpTable.values
IN_DOMINATED = 0   # in the set, has a child in the set
IN_WAITING = 1     # in the set, needs its parent in the set
OUT_DOMINATED = 2  # not in the set, has a child in the set
OUT_WAITING = 3    # not in the set, needs its parent in the set

GAMMA_STATES = ("in_dominated", "in_waiting", "out_dominated", "out_waiting")
TAU_STATES = ("in_cover", "out_of_cover")


@dataclass(frozen=True)
class DpTable:
    root: int
    states: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]  # values[v][state], min set size in v's subtree


def _bfs_order(T: Tree, root: int) -> tuple[list[int], list[int]]:
    parent = [-1] * T.n
    parent[root] = root
    order = [root]
    for v in order:
        for w in T.adjacency[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    return order, parent


def tau_table(T: Tree, root: int = 0) -> DpTable:
    order, parent = _bfs_order(T, root)
    inc = [1] * T.n
    exc = [0] * T.n
    for v in reversed(order):
        if v == root:
            continue
        p = parent[v]
        inc[p] += min(inc[v], exc[v])
        exc[p] += inc[v]  # an uncovered parent forces the child in
    return DpTable(root, TAU_STATES, tuple(zip(inc, exc)))


def tau_tree(T: Tree, root: int = 0) -> int:
    inc, exc = tau_table(T, root).values[root]
    return min(inc, exc)


def gamma_t_table(T: Tree, root: int = 0) -> DpTable:
    if T.n < 2:
        raise NoTotalDominatingSet("a single vertex has no total dominating set")
    order, parent = _bfs_order(T, root)
    table: list[tuple[float, float, float, float]] = [()] * T.n  # type: ignore[list-item]
    for v in reversed(order):
        in_sum = 0.0      # children free to take their best state
        in_fix = INFEASIBLE
        quiet_sum = 0.0   # v in the set but no child in it
        out_sum = 0.0     # v outside: children must already be dominated
        out_fix = INFEASIBLE
        wait_sum = 0.0    # v outside and undominated: no child in the set
        for c in T.adjacency[v]:
            if c == parent[v]:
                continue
            a, b, d, w = table[c]
            best = min(a, b, d, w)
            in_sum += best
            in_fix = min(in_fix, min(a, b) - best)
            quiet_sum += min(d, w)
            ok = min(a, d)
            if ok == INFEASIBLE:
                out_sum = INFEASIBLE
            else:
                out_sum += ok
                out_fix = min(out_fix, a - ok)
            wait_sum += d
        table[v] = (
            1 + in_sum + in_fix,
            1 + quiet_sum,
            out_sum + out_fix,
            wait_sum,
        )
    return DpTable(root, GAMMA_STATES, tuple(table))


def gamma_t_tree(T: Tree, root: int = 0) -> int:
    a, _, d, _ = gamma_t_table(T, root).values[root]
    return int(min(a, d))
