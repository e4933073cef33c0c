"""Exhaustive reference implementations of the set predicates and parameters.

Every subset of ``V(T)`` is encoded as a bitmask and all ``2**n`` masks are
scanned with numpy in chunks. One scan yields both parameters and every
minimum set, so results are cached per tree. Exponential by design: trees
with more than :data:`ORACLE_CAP` vertices are refused.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .core import Tree, check_vertex, leaves, private_neighbors
from .errors import (
    IsStar,
    NoTotalDominatingSet,
    NotAGammaTSet,
    TooLargeForOracle,
    TooSmall,
)

ORACLE_CAP = 26
_CHUNK_BITS = 20


@dataclass(frozen=True)
class ParamReport:
    tau: int
    gamma_t: int
    num_min_vc: int
    num_min_tds: int
    num_gtt_sets: int
    gtt_witness: frozenset[int] | None
    is_gtt_graph: bool


@dataclass(frozen=True)
class _Scan:
    tau: int
    gamma_t: int | None
    vc: np.ndarray  # minimum vertex covers, ascending masks
    tds: np.ndarray  # minimum total dominating sets, ascending masks


def mask_to_set(mask: int) -> frozenset[int]:
    mask = int(mask)
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def set_to_mask(S: Iterable[int]) -> int:
    m = 0
    for v in S:
        m |= 1 << v
    return m


def _check_cap(T: Tree) -> None:
    if T.n > ORACLE_CAP:
        raise TooLargeForOracle(f"oracle refuses n={T.n} > {ORACLE_CAP}")


def _keep_min(best: tuple[int, list[np.ndarray]] | None, masks: np.ndarray,
              sizes: np.ndarray) -> tuple[int, list[np.ndarray]] | None:
    if masks.size == 0:
        return best
    lo = int(sizes.min())
    hit = masks[sizes == lo]
    if best is None or lo < best[0]:
        return lo, [hit]
    if lo == best[0]:
        best[1].append(hit)
    return best


@lru_cache(maxsize=8192)
def _scan(T: Tree) -> _Scan:
    _check_cap(T)
    nb = [np.int64(m) for m in T.neighbor_masks]
    bits = [np.int64(1 << v) for v in range(T.n)]
    total = 1 << T.n
    step = 1 << _CHUNK_BITS
    best_vc = best_tds = None
    for start in range(0, total, step):
        m = np.arange(start, min(total, start + step), dtype=np.int64)
        sizes = np.bitwise_count(m)
        is_vc = np.ones(m.shape, dtype=bool)
        is_tds = np.ones(m.shape, dtype=bool)
        for v in range(T.n):
            touched = m & nb[v]
            is_tds &= touched != 0
            # v outside S forces all of N(v) inside S
            is_vc &= ((m & bits[v]) != 0) | (touched == nb[v])
        best_vc = _keep_min(best_vc, m[is_vc], sizes[is_vc])
        best_tds = _keep_min(best_tds, m[is_tds], sizes[is_tds])
    assert best_vc is not None
    vc = np.concatenate(best_vc[1])
    if best_tds is None:
        return _Scan(best_vc[0], None, vc, np.zeros(0, dtype=np.int64))
    return _Scan(best_vc[0], best_tds[0], vc, np.concatenate(best_tds[1]))


def _scan_tds(T: Tree) -> _Scan:
    s = _scan(T)
    if s.gamma_t is None:
        raise NoTotalDominatingSet(f"a tree on {T.n} vertex has no total dominating set")
    return s


@lru_cache(maxsize=8192)
def _gtt_masks(T: Tree) -> np.ndarray:
    s = _scan_tds(T)
    if s.tau != s.gamma_t:
        return np.zeros(0, dtype=np.int64)
    return np.intersect1d(s.vc, s.tds, assume_unique=True)


# -- predicates ---------------------------------------------------------------

def is_vertex_cover(T: Tree, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return all(u in S or v in S for u, v in T.edges)


def is_total_dominating(T: Tree, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return all(any(w in S for w in T.adjacency[v]) for v in range(T.n))


# -- parameters and set families ---------------------------------------------

def tau_exact(T: Tree) -> int:
    return _scan(T).tau


def gamma_t_exact(T: Tree) -> int:
    return _scan_tds(T).gamma_t


def min_vertex_covers(T: Tree) -> list[frozenset[int]]:
    return [mask_to_set(m) for m in _scan(T).vc]


def min_total_dominating_sets(T: Tree) -> list[frozenset[int]]:
    return [mask_to_set(m) for m in _scan_tds(T).tds]


def gtt_sets(T: Tree) -> list[frozenset[int]]:
    """Sets that are at once a minimum vertex cover and a minimum TDS."""
    return [mask_to_set(m) for m in _gtt_masks(T)]


def has_gtt_set(T: Tree) -> bool:
    return _gtt_masks(T).size > 0


@lru_cache(maxsize=8192)
def gtt_vertices(T: Tree) -> frozenset[int]:
    """Union of all (gamma_t - tau)-sets."""
    masks = _gtt_masks(T)
    return mask_to_set(np.bitwise_or.reduce(masks)) if masks.size else frozenset()


def in_some_gtt_set(T: Tree, u: int) -> bool:
    check_vertex(T, u)
    return u in gtt_vertices(T)


@lru_cache(maxsize=8192)
def min_tds_vertices(T: Tree) -> frozenset[int]:
    return mask_to_set(np.bitwise_or.reduce(_scan_tds(T).tds))


@lru_cache(maxsize=8192)
def min_vc_vertices(T: Tree) -> frozenset[int]:
    return mask_to_set(np.bitwise_or.reduce(_scan(T).vc))


def analyze(T: Tree) -> ParamReport:
    s = _scan_tds(T)
    gtt = _gtt_masks(T)
    return ParamReport(
        tau=s.tau,
        gamma_t=s.gamma_t,
        num_min_vc=int(s.vc.size),
        num_min_tds=int(s.tds.size),
        num_gtt_sets=int(gtt.size),
        gtt_witness=mask_to_set(gtt[0]) if gtt.size else None,
        is_gtt_graph=s.tau == s.gamma_t,
    )


# -- quasi-isolation ------------------------------------------------------------

def _quasi_isolated_matrix(T: Tree, sets: np.ndarray) -> np.ndarray:
    """Boolean ``(n, len(sets))``: entry ``[v, j]`` says v is sets[j]-quasi-isolated.

    v qualifies for S exactly when it has a single S-neighbor u and no other
    vertex has u as its single S-neighbor.
    """
    owner = np.zeros((T.n, sets.size), dtype=np.int64)
    for w, nbm in enumerate(T.neighbor_masks):
        hit = sets & np.int64(nbm)
        owner[w] = np.where(np.bitwise_count(hit) == 1, hit, 0)
    same = (owner[:, None, :] == owner[None, :, :]).sum(axis=1)
    return (owner != 0) & (same == 1)


@lru_cache(maxsize=8192)
def quasi_isolated_vertices(T: Tree) -> frozenset[int]:
    """Vertices that are S-quasi-isolated for at least one minimum TDS S."""
    tds = _scan_tds(T).tds
    hit = _quasi_isolated_matrix(T, tds).any(axis=1)
    return frozenset(int(v) for v in np.flatnonzero(hit))


def is_quasi_isolated(T: Tree, v: int) -> bool:
    check_vertex(T, v)
    return v in quasi_isolated_vertices(T)


def is_quasi_isolated_for(T: Tree, v: int, S: Iterable[int]) -> bool:
    check_vertex(T, v)
    S = frozenset(S)
    if len(S) != gamma_t_exact(T) or not is_total_dominating(T, S):
        raise NotAGammaTSet(f"{sorted(S)} is not a minimum total dominating set")
    return any(private_neighbors(T, u, S) == {v} for u in S)


# -- leafless minimum TDS -------------------------------------------------------

def is_star(T: Tree) -> bool:
    return T.n >= 2 and any(len(a) == T.n - 1 for a in T.adjacency)


def leafless_gamma_t_set(T: Tree) -> frozenset[int]:
    """A minimum TDS with no end vertex, obtained by swapping leaves out.

    Each leaf x in the set, with support y, is replaced by the lowest-index
    non-leaf neighbor of y.
    """
    if T.n < 3:
        raise TooSmall(f"need at least 3 vertices, got {T.n}")
    if is_star(T):
        raise IsStar("a star has no leafless minimum total dominating set")
    lv = leaves(T)
    D = set(min_total_dominating_sets(T)[0])
    for x in sorted(D & lv):
        (y,) = T.adjacency[x]
        z = next(w for w in T.adjacency[y] if w not in lv)
        D.discard(x)
        D.add(z)
    return frozenset(D)
