"""Tree-growing operations: edge sums, leaf attachment, O1-O4, the relaxed
O1'-O3', corona, and the two gap families.

New vertices always receive the indices ``n, n+1, ...`` in the order
documented on each operation, so replaying a construction is reproducible.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import oracle
from .core import Tree, check_vertex, from_edge_list, path_tree
from .errors import PreconditionViolated


class OpKind(enum.Enum):
    O1 = "O1"
    O2 = "O2"
    O3 = "O3"
    O4 = "O4"
    O1P = "O1P"
    O2P = "O2P"
    O3P = "O3P"

    @property
    def added(self) -> int:
        """Number of vertices the operation adds."""
        return _ADDED[self]

    @property
    def primed(self) -> bool:
        return self.value.endswith("P")


_ADDED = {
    OpKind.O1: 4, OpKind.O2: 1, OpKind.O3: 2, OpKind.O4: 4,
    OpKind.O1P: 4, OpKind.O2P: 1, OpKind.O3P: 2,
}


@dataclass(frozen=True)
class AttachResult:
    tree: Tree
    new_vertices: tuple[int, ...]
    attach_vertex: int


def sum_via_edge(G: Tree, H: Tree, u: int, v: int) -> Tree:
    """Disjoint union of G and H (H shifted by ``|G|``) plus the edge ``u, v+|G|``."""
    check_vertex(G, u)
    check_vertex(H, v)
    shift = G.n
    edges = list(G.edges)
    edges.extend((a + shift, b + shift) for a, b in H.edges)
    edges.append((u, v + shift))
    return from_edge_list(G.n + H.n, edges)


def _attach(T: Tree, u: int, piece: Tree, at: int) -> AttachResult:
    grown = sum_via_edge(T, piece, u, at)
    return AttachResult(grown, tuple(range(T.n, grown.n)), u)


# P4 labeled for O4: v=0 joins the host; path order is (x, v, y, z) = (1, 0, 2, 3)
_P4_BY_SUPPORT = from_edge_list(4, [(1, 0), (0, 2), (2, 3)])


def add_leaf(T: Tree, u: int) -> AttachResult:
    return _attach(T, u, path_tree(1), 0)


def attach_p4_by_leaf(T: Tree, u: int) -> AttachResult:
    """Path (v, x, y, z) = (n, n+1, n+2, n+3) with v joined to u."""
    return _attach(T, u, path_tree(4), 0)


def attach_p2(T: Tree, u: int) -> AttachResult:
    """Path (v, w) = (n, n+1) with v joined to u."""
    return _attach(T, u, path_tree(2), 0)


def attach_p4_by_support(T: Tree, u: int) -> AttachResult:
    """Path (x, v, y, z) with v=n, x=n+1, y=n+2, z=n+3 and v joined to u."""
    return _attach(T, u, _P4_BY_SUPPORT, 0)


def corona(T: Tree) -> Tree:
    """Attach a pendant leaf ``n+i`` to every vertex ``i``."""
    edges = list(T.edges) + [(i, T.n + i) for i in range(T.n)]
    return from_edge_list(2 * T.n, edges)


# -- preconditions --------------------------------------------------------------

def _require(ok: bool, what: str) -> None:
    if not ok:
        raise PreconditionViolated(what)


def check_precondition(op: OpKind, T: Tree, u: int) -> None:
    """Raise :class:`PreconditionViolated` if ``op`` may not be applied at ``u``."""
    check_vertex(T, u)
    if op in (OpKind.O1, OpKind.O2, OpKind.O3):
        _require(oracle.in_some_gtt_set(T, u),
                 f"{op.value}: vertex {u} is in no (gamma_t-tau)-set")
    if op in (OpKind.O3, OpKind.O4, OpKind.O3P):
        _require(not oracle.is_quasi_isolated(T, u),
                 f"{op.value}: vertex {u} is quasi-isolated")
    if op in (OpKind.O2P, OpKind.O3P):
        _require(u in oracle.min_tds_vertices(T),
                 f"{op.value}: vertex {u} is in no minimum total dominating set")
    if op is OpKind.O2P:
        _require(u in oracle.min_vc_vertices(T),
                 f"{op.value}: vertex {u} is in no minimum vertex cover")


def valid_vertices(op: OpKind, T: Tree) -> list[int]:
    """All attachment points satisfying the precondition of ``op``."""
    if op is OpKind.O1P:
        return list(range(T.n))
    qi = oracle.quasi_isolated_vertices(T) if op in (OpKind.O3, OpKind.O4, OpKind.O3P) else frozenset()
    if op in (OpKind.O1, OpKind.O2, OpKind.O3):
        pool = oracle.gtt_vertices(T)
    elif op is OpKind.O4:
        pool = frozenset(range(T.n))
    elif op is OpKind.O2P:
        pool = oracle.min_tds_vertices(T) & oracle.min_vc_vertices(T)
    else:
        pool = oracle.min_tds_vertices(T)
    return sorted(pool - qi)


_GEOMETRY = {
    OpKind.O1: attach_p4_by_leaf,
    OpKind.O2: add_leaf,
    OpKind.O3: attach_p2,
    OpKind.O4: attach_p4_by_support,
    OpKind.O1P: attach_p4_by_leaf,
    OpKind.O2P: add_leaf,
    OpKind.O3P: attach_p2,
}


def apply_op(op: OpKind, T: Tree, u: int, checked: bool = True) -> AttachResult:
    """Apply ``op`` at ``u``; in checked mode the oracle verifies the precondition."""
    check_vertex(T, u)
    if checked:
        check_precondition(op, T, u)
    return _GEOMETRY[op](T, u)


def apply_o1(T: Tree, u: int, checked: bool = True) -> AttachResult:
    return apply_op(OpKind.O1, T, u, checked)


def apply_o2(T: Tree, u: int, checked: bool = True) -> AttachResult:
    return apply_op(OpKind.O2, T, u, checked)


def apply_o3(T: Tree, u: int, checked: bool = True) -> AttachResult:
    return apply_op(OpKind.O3, T, u, checked)


def apply_o4(T: Tree, u: int, checked: bool = True) -> AttachResult:
    return apply_op(OpKind.O4, T, u, checked)


def apply_o1p(T: Tree, u: int) -> AttachResult:
    return apply_op(OpKind.O1P, T, u)


def apply_o2p(T: Tree, u: int) -> AttachResult:
    return apply_op(OpKind.O2P, T, u)


def apply_o3p(T: Tree, u: int) -> AttachResult:
    return apply_op(OpKind.O3P, T, u)


def witness_after(op: OpKind, D: frozenset[int], res: AttachResult) -> frozenset[int]:
    """The (gamma_t-tau)-set of the grown tree built from one of the old tree.

    O1 adds the two middle path vertices, O2 adds nothing, O3 adds the vertex
    joined to u, O4 adds the joined support and the other support.
    """
    new = res.new_vertices
    if op is OpKind.O1:
        return D | {new[1], new[2]}
    if op is OpKind.O2:
        return D
    if op is OpKind.O3:
        return D | {new[0]}
    if op is OpKind.O4:
        return D | {new[0], new[2]}
    raise ValueError(f"no witness rule for {op.value}")


# -- gap families ---------------------------------------------------------------

def gap_tree_tk(k: int) -> Tree:
    """Path on 4k+2 vertices with a pendant on each position = 1, 2 (mod 4), 1-based.

    tau exceeds gamma_t by exactly k. Pendants get indices 4k+2, 4k+3, ...
    in path order.
    """
    if k < 1:
        raise ValueError("k must be positive")
    m = 4 * k + 2
    edges = [(i, i + 1) for i in range(m - 1)]
    hosts = [i for i in range(m) if (i + 1) % 4 in (1, 2)]
    edges.extend((h, m + j) for j, h in enumerate(hosts))
    return from_edge_list(m + len(hosts), edges)


def gap_tree_tpk(k: int) -> Tree:
    """Path on 4k-1 vertices with a pendant on each odd 1-based position.

    gamma_t exceeds tau by exactly k.
    """
    if k < 1:
        raise ValueError("k must be positive")
    m = 4 * k - 1
    edges = [(i, i + 1) for i in range(m - 1)]
    hosts = list(range(0, m, 2))
    edges.extend((h, m + j) for j, h in enumerate(hosts))
    return from_edge_list(m + len(hosts), edges)
