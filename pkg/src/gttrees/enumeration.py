"""Free-tree enumeration and the exhaustive verification harness.

Production enumeration uses the WROM level-sequence generator shipped with
networkx. The cross-check enumerator decodes Pruefer sequences and dedupes by
canonical code; it only visits sequences whose label multiplicities are
non-increasing, which still reaches every isomorphism class (relabel any tree
by decreasing degree).
"""
from __future__ import annotations

import heapq
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import networkx as nx

from . import oracle
from .core import Tree, canonical_code, from_edge_list, leaves, two_supports
from .family import PRIMED_OPS, recognize, verify_certificate
from .operations import apply_op, valid_vertices
from .tree_dp import gamma_t_tree, tau_tree

MAX_ORDER = 20

CLAIMS = (
    "dp_matches_oracle",
    "gtt_sets_avoid_leaves",
    "leafless_min_tds",
    "two_support_not_quasi_isolated",
    "recognizer_matches_oracle",
    "primed_ops_preserve_equality",
)
CLAIM_GROUPS = {
    "all": CLAIMS,
    "main": ("recognizer_matches_oracle",),
    "lemmas": ("gtt_sets_avoid_leaves", "leafless_min_tds", "two_support_not_quasi_isolated"),
}


def free_trees(n: int) -> Iterator[Tree]:
    """One tree per isomorphism class on ``n`` vertices, in a fixed order."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}")
    if n == 1:
        yield from_edge_list(1, [])
        return
    for g in nx.nonisomorphic_trees(n):
        yield from_edge_list(n, g.edges())


def count_free_trees(n: int) -> int:
    return sum(1 for _ in free_trees(n))


def otter_count(n: int) -> int:
    """Number of free trees on ``n`` vertices from the rooted-tree recurrence.

    Counts rooted trees a(m) via a(m+1) = (1/m) sum_k (sum_{d|k} d a(d)) a(m-k+1),
    then removes double counts with Otter's dissimilarity formula.
    """
    a = [0, 1]
    for m in range(1, n):
        total = 0
        for k in range(1, m + 1):
            total += sum(d * a[d] for d in range(1, k + 1) if k % d == 0) * a[m - k + 1]
        a.append(total // m)
    pairs = sum(a[i] * a[n - i] for i in range(1, n))
    if n % 2 == 0:
        pairs -= a[n // 2]
    return a[n] - pairs // 2


# -- Pruefer cross-check --------------------------------------------------------

def prufer_decode(seq: tuple[int, ...], n: int) -> Tree:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return from_edge_list(n, edges)


def _partitions(total: int, largest: int) -> Iterator[list[int]]:
    if total == 0:
        yield []
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield [part] + rest


def _arrangements(counts: list[int]) -> Iterator[tuple[int, ...]]:
    """Distinct sequences using label i exactly counts[i] times."""
    size = sum(counts)
    out = [0] * size

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == size:
            yield tuple(out)
            return
        for label, left in enumerate(counts):
            if left:
                counts[label] -= 1
                out[pos] = label
                yield from rec(pos + 1)
                counts[label] += 1

    yield from rec(0)


def prufer_sequences(n: int, restricted: bool = True) -> Iterator[tuple[int, ...]]:
    if n < 3:
        yield ()
        return
    if not restricted:
        yield from itertools.product(range(n), repeat=n - 2)
        return
    for parts in _partitions(n - 2, n - 2):
        if len(parts) <= n:
            yield from _arrangements(list(parts))


def prufer_codes(n: int, restricted: bool = True) -> set[bytes]:
    """Canonical codes of all trees on ``n`` vertices, via Pruefer decoding."""
    if n == 1:
        return {canonical_code(from_edge_list(1, []))}
    return {canonical_code(prufer_decode(s, n)) for s in prufer_sequences(n, restricted)}


# -- verification harness -------------------------------------------------------

@dataclass
class OrderStats:
    trees: int = 0
    gtt_trees: int = 0  # gamma_t == tau
    with_gtt_set: int = 0
    seconds: float = 0.0

    def merge(self, other: "OrderStats") -> None:
        self.trees += other.trees
        self.gtt_trees += other.gtt_trees
        self.with_gtt_set += other.with_gtt_set
        self.seconds += other.seconds


@dataclass
class ClaimStats:
    checked: int = 0
    discrepancies: list[str] = field(default_factory=list)

    def merge(self, other: "ClaimStats") -> None:
        self.checked += other.checked
        self.discrepancies = sorted(self.discrepancies + other.discrepancies)


@dataclass
class EnumerationReport:
    orders: dict[int, OrderStats] = field(default_factory=dict)
    claims: dict[str, ClaimStats] = field(default_factory=dict)

    def merge(self, other: "EnumerationReport") -> "EnumerationReport":
        for n, st in other.orders.items():
            self.orders.setdefault(n, OrderStats()).merge(st)
        for name, st in other.claims.items():
            self.claims.setdefault(name, ClaimStats()).merge(st)
        return self

    @property
    def passed(self) -> bool:
        return all(not c.discrepancies for c in self.claims.values())

    def summary_lines(self) -> list[str]:
        return [
            f"claim {name} checked {st.checked} discrepancies {len(st.discrepancies)}"
            for name, st in sorted(self.claims.items())
        ]

    def format(self) -> str:
        lines = []
        for n in sorted(self.orders):
            st = self.orders[n]
            lines.append(
                f"order {n} trees {st.trees} gtt_trees {st.gtt_trees} "
                f"with_gtt_set {st.with_gtt_set} seconds {st.seconds:.3f}"
            )
        lines.extend(self.summary_lines())
        for name, st in sorted(self.claims.items()):
            lines.extend(f"discrepancy {name} {d}" for d in st.discrepancies)
        lines.append(f"passed {str(self.passed).lower()}")
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {
            "orders": {str(n): vars(st) for n, st in sorted(self.orders.items())},
            "claims": {name: vars(st) for name, st in sorted(self.claims.items())},
            "passed": self.passed,
        }


def resolve_claims(spec: str | Iterable[str]) -> tuple[str, ...]:
    names = spec.split(",") if isinstance(spec, str) else list(spec)
    out: list[str] = []
    for name in names:
        name = name.strip()
        group = CLAIM_GROUPS.get(name, (name,))
        for claim in group:
            if claim not in CLAIMS:
                raise ValueError(f"unknown claim {claim!r}")
            if claim not in out:
                out.append(claim)
    return tuple(out)


def _check_primed(T: Tree) -> list[str]:
    bad = []
    for op in PRIMED_OPS:
        for u in valid_vertices(op, T):
            grown = apply_op(op, T, u, checked=False).tree
            if tau_tree(grown) != gamma_t_tree(grown):
                bad.append(f"{op.value}@{u}")
    return bad


def check_tree(T: Tree, claims: Iterable[str]) -> dict[str, str | None]:
    """Run the selected claims on one tree.

    Returns claim -> ``None`` when it holds, or a short detail string when it
    fails. Claims that do not apply to ``T`` are omitted.
    """
    out: dict[str, str | None] = {}
    n = T.n
    for claim in claims:
        if n < 2:
            continue
        if claim == "dp_matches_oracle":
            got = (tau_tree(T), gamma_t_tree(T))
            want = (oracle.tau_exact(T), oracle.gamma_t_exact(T))
            out[claim] = None if got == want else f"dp={got} oracle={want}"
        elif claim == "gtt_sets_avoid_leaves":
            lv = leaves(T)
            hit = [sorted(S) for S in oracle.gtt_sets(T) if S & lv]
            out[claim] = f"set {hit[0]} has a leaf" if hit else None
        elif claim == "leafless_min_tds":
            if n < 3 or oracle.is_star(T):
                continue
            D = oracle.leafless_gamma_t_set(T)
            ok = (not D & leaves(T) and oracle.is_total_dominating(T, D)
                  and len(D) == oracle.gamma_t_exact(T))
            out[claim] = None if ok else f"bad set {sorted(D)}"
        elif claim == "two_support_not_quasi_isolated":
            hit = sorted(two_supports(T) & oracle.quasi_isolated_vertices(T))
            out[claim] = f"vertex {hit[0]}" if hit else None
        elif claim == "recognizer_matches_oracle":
            if n < 4:
                continue
            res = recognize(T)
            want = oracle.has_gtt_set(T)
            if res.member != want:
                out[claim] = f"recognize={res.member} oracle={want}"
            elif res.member and not verify_certificate(res.certificate, T):
                out[claim] = "certificate fails verification"
            else:
                out[claim] = None
        elif claim == "primed_ops_preserve_equality":
            if tau_tree(T) != gamma_t_tree(T):
                continue
            bad = _check_primed(T)
            out[claim] = ",".join(bad) if bad else None
    return out


def _run_shard(edge_lists: list[tuple[int, list[tuple[int, int]]]],
               claims: tuple[str, ...]) -> EnumerationReport:
    report = EnumerationReport()
    for claim in claims:
        report.claims[claim] = ClaimStats()
    for n, edges in edge_lists:
        T = from_edge_list(n, edges)
        start = time.perf_counter()
        st = report.orders.setdefault(n, OrderStats())
        st.trees += 1
        if n >= 2:
            eq = tau_tree(T) == gamma_t_tree(T)
            st.gtt_trees += eq
            st.with_gtt_set += eq and oracle.has_gtt_set(T)
        for claim, detail in check_tree(T, claims).items():
            cs = report.claims[claim]
            cs.checked += 1
            if detail is not None:
                cs.discrepancies.append(f"{canonical_code(T).hex()}:{detail}")
        st.seconds += time.perf_counter() - start
    return report


def exhaustive_check(n_max: int, claims: str | Iterable[str] = "all",
                     n_min: int = 1, threads: int = 1) -> EnumerationReport:
    """Run the selected claims over every free tree with ``n_min <= n <= n_max``.

    Discrepancies are collected in the report, never raised. With
    ``threads > 1`` trees are dealt round-robin to a process pool.
    """
    selected = resolve_claims(claims)
    work = [(n, list(T.edges)) for n in range(n_min, n_max + 1) for T in free_trees(n)]
    if threads <= 1:
        return _run_shard(work, selected)
    shards = [work[i::threads] for i in range(threads)]
    report = EnumerationReport()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_run_shard, shards, [selected] * threads):
            report.merge(part)
    return report
