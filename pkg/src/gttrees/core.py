"""Tree data model, structural vertex classes, canonical forms and the text format.

Vertices are dense indices ``0..n-1``. Vertex sets are plain ``frozenset[int]``
and paths are tuples of vertex indices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import FormatError, IndexOutOfRange, NotATree, NotInSet

VertexSet = frozenset
Path = tuple


@dataclass(frozen=True)
class Tree:
    """An immutable labeled tree.

    Build instances with :func:`from_edge_list` (or the named constructors);
    the initializer trusts its arguments.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...] = field(repr=False)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return format_tree(self).strip()


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Validate ``edges`` and return the tree they describe.

    Raises :class:`NotATree` naming the first violation found.
    """
    if n < 1:
        raise NotATree("a tree needs at least one vertex")
    norm: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise NotATree(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise NotATree(f"self-loop at {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise NotATree(f"duplicate edge {e}")
        seen.add(e)
        norm.append(e)
    if len(norm) != n - 1:
        raise NotATree(f"expected {n - 1} edges, got {len(norm)}")

    # union-find: with n-1 edges, no cycle <=> connected
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in norm:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise NotATree(f"edge ({u},{v}) closes a cycle")
        parent[ru] = rv

    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in norm:
        adj[u].append(v)
        adj[v].append(u)
    return Tree(
        n=n,
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        edges=tuple(sorted(norm)),
    )


def path_tree(n: int) -> Tree:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    if n < 2:
        raise NotATree("a star needs at least two vertices")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def relabel(T: Tree, perm: Sequence[int]) -> Tree:
    """Return the tree with vertex ``v`` renamed to ``perm[v]``."""
    return from_edge_list(T.n, [(perm[u], perm[v]) for u, v in T.edges])


def remove_vertices(T: Tree, drop: Iterable[int]) -> tuple[Tree, dict[int, int]]:
    """Delete ``drop`` and compact the remaining labels, preserving their order.

    Returns the smaller tree and the old-to-new label map of surviving
    vertices. Raises :class:`NotATree` if the remainder is disconnected.
    """
    dropped = set(drop)
    keep = [v for v in range(T.n) if v not in dropped]
    new = {old: i for i, old in enumerate(keep)}
    edges = [(new[u], new[v]) for u, v in T.edges if u in new and v in new]
    return from_edge_list(len(keep), edges), new


def check_vertex(T: Tree, v: int) -> None:
    if not 0 <= v < T.n:
        raise IndexOutOfRange(f"vertex {v} not in 0..{T.n - 1}")


# -- structural vertex classes -------------------------------------------------

def leaves(T: Tree) -> frozenset[int]:
    """End vertices (degree exactly 1). Empty for the one-vertex tree."""
    return frozenset(v for v in range(T.n) if len(T.adjacency[v]) == 1)


def supports(T: Tree) -> frozenset[int]:
    lv = leaves(T)
    return frozenset(v for v in range(T.n) if any(u in lv for u in T.adjacency[v]))


def strong_supports(T: Tree) -> frozenset[int]:
    lv = leaves(T)
    return frozenset(
        v for v in range(T.n) if sum(u in lv for u in T.adjacency[v]) >= 2
    )


def two_supports(T: Tree) -> frozenset[int]:
    """Vertices at distance exactly two from some leaf."""
    out: set[int] = set()
    for x in leaves(T):
        (y,) = T.adjacency[x]
        out.update(w for w in T.adjacency[y] if w != x)
    return frozenset(out)


def private_neighbors(T: Tree, u: int, S: Iterable[int]) -> frozenset[int]:
    """``{w : N(w) & S == {u}}``; ``u`` must belong to ``S``."""
    S = frozenset(S)
    if u not in S:
        raise NotInSet(f"vertex {u} is not in the set")
    return frozenset(
        w for w in range(T.n)
        if u in T.adjacency[w] and sum(x in S for x in T.adjacency[w]) == 1
    )


def bfs_distances(T: Tree, source: int) -> tuple[list[int], list[int]]:
    """Distances and BFS parents from ``source``; neighbors visited in index order."""
    dist = [-1] * T.n
    parent = [-1] * T.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in T.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                parent[w] = v
                queue.append(w)
    return dist, parent


def _farthest(dist: list[int]) -> int:
    best = max(dist)
    return dist.index(best)


def longest_path(T: Tree) -> tuple[int, ...]:
    """A diameter path by double BFS from vertex 0, ties to the lowest index."""
    a = _farthest(bfs_distances(T, 0)[0])
    dist, parent = bfs_distances(T, a)
    b = _farthest(dist)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def diameter(T: Tree) -> int:
    return len(longest_path(T)) - 1


# -- canonical form ------------------------------------------------------------

def centers(T: Tree) -> tuple[int, ...]:
    """The one or two central vertices, found by repeatedly stripping leaves."""
    if T.n <= 2:
        return tuple(range(T.n))
    deg = [len(a) for a in T.adjacency]
    layer = [v for v in range(T.n) if deg[v] == 1]
    remaining = T.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in T.adjacency[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_codes(T: Tree, root: int) -> tuple[list[bytes], list[list[int]]]:
    """AHU codes of every rooted subtree plus children lists ordered by code."""
    order = [root]
    parent = [-1] * T.n
    parent[root] = root
    for v in order:
        for w in T.adjacency[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    codes: list[bytes] = [b""] * T.n
    kids: list[list[int]] = [[] for _ in range(T.n)]
    for v in reversed(order):
        ch = [w for w in T.adjacency[v] if parent[w] == v and w != root]
        ch.sort(key=codes.__getitem__)
        kids[v] = ch
        codes[v] = b"(" + b"".join(codes[w] for w in ch) + b")"
    return codes, kids


def _best_root(T: Tree) -> tuple[bytes, int, list[list[int]]]:
    best = None
    for c in centers(T):
        codes, kids = _rooted_codes(T, c)
        if best is None or codes[c] < best[0]:
            best = (codes[c], c, kids)
    assert best is not None
    return best


def canonical_code(T: Tree) -> bytes:
    """Isomorphism-invariant byte string (AHU encoding rooted at a center)."""
    return _best_root(T)[0]


def canonical_order(T: Tree) -> list[int]:
    """Vertices of ``T`` in canonical preorder.

    Relabeling ``order[i] -> i`` gives the same labeled tree for every member
    of an isomorphism class, so composing two such maps yields an isomorphism.
    """
    _, root, kids = _best_root(T)
    order: list[int] = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(kids[v]))
    return order


def isomorphism(A: Tree, B: Tree) -> dict[int, int] | None:
    """A vertex bijection ``A -> B`` preserving edges, or ``None``."""
    if A.n != B.n or canonical_code(A) != canonical_code(B):
        return None
    oa, ob = canonical_order(A), canonical_order(B)
    return {a: b for a, b in zip(oa, ob)}


# -- text format ---------------------------------------------------------------

def format_tree(T: Tree) -> str:
    lines = [f"n {T.n}"]
    lines.extend(f"e {u} {v}" for u, v in T.edges)
    return "\n".join(lines) + "\n"


def _parse_block(lines: list[tuple[int, str]]) -> Tree:
    n = None
    edges = []
    for lineno, line in lines:
        parts = line.split()
        try:
            if parts[0] == "n" and len(parts) == 2 and n is None:
                n = int(parts[1])
            elif parts[0] == "e" and len(parts) == 3 and n is not None:
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise FormatError(f"line {lineno}: cannot parse {line!r}") from None
    if n is None:
        raise FormatError("missing 'n <count>' header")
    return from_edge_list(n, edges)


def iter_trees(text: str) -> Iterator[Tree]:
    """Parse a stream of trees separated by ``--`` lines."""
    block: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "--":
            if block:
                yield _parse_block(block)
            block = []
            continue
        block.append((lineno, line))
    if block:
        yield _parse_block(block)


def parse_tree(text: str) -> Tree:
    trees = list(iter_trees(text))
    if len(trees) != 1:
        raise FormatError(f"expected exactly one tree, found {len(trees)}")
    return trees[0]
