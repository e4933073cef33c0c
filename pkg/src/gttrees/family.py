"""The family of trees built from P4 by O1-O4: certificates, random members and
a certifying recognizer.

The recognizer peels a tree back toward P4 the way the inductive membership
argument does: drop one leaf of a strong support (reverse O2), otherwise cut
the end of a longest path as a reverse O3, O4 or O1. The argument picks the
branch from a known (gamma_t-tau)-set; lacking one, every branch is tried
with backtracking and each reverse step is accepted only if the forward
operation's precondition holds on the smaller tree.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import oracle
from .core import (
    Tree,
    canonical_code,
    isomorphism,
    leaves,
    longest_path,
    path_tree,
    remove_vertices,
    strong_supports,
    two_supports,
)
from .errors import (
    FormatError,
    GttError,
    OracleCapExceeded,
    PreconditionViolated,
    SizeMismatch,
)
from .operations import OpKind, apply_op, valid_vertices, witness_after
from .tree_dp import gamma_t_tree, tau_tree

BASE_OPS = (OpKind.O1, OpKind.O2, OpKind.O3, OpKind.O4)
PRIMED_OPS = (OpKind.O1P, OpKind.O2P, OpKind.O3P)

# random_member switches to witness-guided generation above this size
CHECKED_GENERATION_CAP = 20

SIZE_BELOW_4 = "SizeBelow4"
PARAMS_UNEQUAL = "ParamsUnequal"
NO_REDUCTION = "NoReductionApplies"


@dataclass(frozen=True)
class ConstructionStep:
    op: OpKind
    attach_vertex: int
    expected_size_after: int

    def __post_init__(self):
        if self.op not in BASE_OPS:
            raise ValueError(f"{self.op.value} is not one of O1-O4")
        if not 0 <= self.attach_vertex < self.expected_size_after - self.op.added:
            raise ValueError(f"attach vertex {self.attach_vertex} out of range")


@dataclass(frozen=True)
class Certificate:
    steps: tuple[ConstructionStep, ...] = ()
    final_canonical_code: bytes = b""

    @classmethod
    def from_ops(cls, ops: list[tuple[OpKind, int]]) -> "Certificate":
        """Build a certificate from ``(op, vertex)`` pairs, computing the sizes."""
        steps = []
        n = 4
        for op, u in ops:
            n += op.added
            steps.append(ConstructionStep(op, u, n))
        cert = cls(tuple(steps))
        return cls(cert.steps, canonical_code(replay(cert, checked=False)))


@dataclass(frozen=True)
class RecognitionOutcome:
    member: bool
    certificate: Certificate | None = None
    reason: str | None = None


# -- replay and verification ----------------------------------------------------

def replay(cert: Certificate, checked: bool = True) -> Tree:
    T = path_tree(4)
    for i, step in enumerate(cert.steps):
        try:
            T = apply_op(step.op, T, step.attach_vertex, checked=checked).tree
        except PreconditionViolated as exc:
            raise PreconditionViolated(str(exc), step=i) from None
        if T.n != step.expected_size_after:
            raise SizeMismatch(
                f"step {i}: size {T.n}, certificate says {step.expected_size_after}"
            )
    return T


def apply_certificate(cert: Certificate) -> Tree:
    """Replay ``cert`` from P4 (vertices 0-3 in path order), checking every precondition."""
    return replay(cert, checked=True)


def verify_certificate(cert: Certificate, T: Tree) -> bool:
    ok, _ = check_certificate(cert, T)
    return ok


def check_certificate(cert: Certificate, T: Tree) -> tuple[bool, str]:
    """Like :func:`verify_certificate` but also returns a diagnostic."""
    try:
        R = apply_certificate(cert)
    except GttError as exc:
        return False, str(exc)
    code = canonical_code(R)
    if cert.final_canonical_code and cert.final_canonical_code != code:
        return False, "replayed tree does not match the recorded canonical code"
    if code != canonical_code(T):
        return False, "replayed tree is not isomorphic to the input"
    return True, "ok"


def format_certificate(cert: Certificate) -> str:
    lines = ["base P4"]
    lines.extend(f"{s.op.value} {s.attach_vertex}" for s in cert.steps)
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    ops: list[tuple[OpKind, int]] = []
    seen_base = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if not seen_base:
            # report lines (e.g. recognize output) may precede the header
            seen_base = parts == ["base", "P4"]
            continue
        try:
            op = OpKind(parts[0])
            if op not in BASE_OPS or len(parts) != 2:
                raise ValueError
            ops.append((op, int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: cannot parse step {line!r}") from None
    if not seen_base:
        raise FormatError("missing 'base P4' header")
    steps = []
    n = 4
    for op, u in ops:
        n += op.added
        try:
            steps.append(ConstructionStep(op, u, n))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return Certificate(tuple(steps))


# -- recognition ----------------------------------------------------------------

_P4_CODE = canonical_code(path_tree(4))


@dataclass
class _Recognizer:
    trust_proof: bool = False
    use_memo: bool = True
    memo: dict[bytes, tuple[list[ConstructionStep], Tree] | None] = field(default_factory=dict)

    def reductions(self, T: Tree):
        """Yield ``(op, smaller tree, attach vertex in it)`` candidates in search order."""
        strong = sorted(strong_supports(T))
        if strong:
            lv = leaves(T)
            v = strong[0]
            u = min(w for w in T.adjacency[v] if w in lv)
            small, new = remove_vertices(T, [u])
            yield OpKind.O2, small, new[v]
        P = longest_path(T)
        for path in (P, P[::-1]):
            if len(path) < 4 or T.degree(path[1]) != 2:
                continue
            v0, v1, v2, v3 = path[:4]
            small, new = remove_vertices(T, [v0, v1])
            yield OpKind.O3, small, new[v2]
            others = [w for w in T.adjacency[v2] if w not in (v1, v3)]
            if len(others) == 1 and T.degree(others[0]) == 1:
                small, new = remove_vertices(T, [v0, v1, v2, others[0]])
                yield OpKind.O4, small, new[v3]
            if len(path) >= 5 and T.degree(v2) == 2 and T.degree(v3) == 2:
                small, new = remove_vertices(T, [v0, v1, v2, v3])
                yield OpKind.O1, small, new[path[4]]

    def certify(self, T: Tree) -> tuple[list[ConstructionStep], Tree] | None:
        """Construction steps plus the replayed tree (isomorphic to T), or None."""
        if T.n < 4 or tau_tree(T) != gamma_t_tree(T):
            return None
        code = canonical_code(T)
        if code == _P4_CODE:
            return [], path_tree(4)
        if self.use_memo and code in self.memo:
            return self.memo[code]
        found = None
        for op, small, u in self.reductions(T):
            if small.n < 4 or tau_tree(small) != gamma_t_tree(small):
                continue
            if not self.trust_proof:
                try:
                    apply_op(op, small, u, checked=True)
                except PreconditionViolated:
                    continue
            sub = self.certify(small)
            if sub is None:
                continue
            steps, R = sub
            image = isomorphism(small, R)[u]
            grown = apply_op(op, R, image, checked=False).tree
            found = (steps + [ConstructionStep(op, image, grown.n)], grown)
            break
        if self.use_memo:
            self.memo[code] = found
        return found


def recognize(T: Tree, trust_proof: bool = False, use_memo: bool = True) -> RecognitionOutcome:
    """Decide membership in the family, returning a certificate for members.

    ``trust_proof`` searches without the oracle precondition re-checks and
    then validates the certificate it found by a checked replay; if that
    replay fails the exact search runs instead, so the answer never changes.
    """
    if T.n < 4:
        return RecognitionOutcome(False, reason=SIZE_BELOW_4)
    if tau_tree(T) != gamma_t_tree(T):
        return RecognitionOutcome(False, reason=PARAMS_UNEQUAL)
    found = None
    if trust_proof:
        found = _Recognizer(True, use_memo).certify(T)
        if found is not None:
            cert = Certificate(tuple(found[0]), canonical_code(found[1]))
            if verify_certificate(cert, T):
                return RecognitionOutcome(True, cert)
    found = _Recognizer(False, use_memo).certify(T)
    if found is None:
        return RecognitionOutcome(False, reason=NO_REDUCTION)
    steps, R = found
    return RecognitionOutcome(True, Certificate(tuple(steps), canonical_code(R)))


# -- random generation ----------------------------------------------------------

def _structural_choices(op: OpKind, T: Tree, D: frozenset[int]) -> list[int]:
    # a 2-support is never quasi-isolated, so O3/O4 there need no oracle
    if op in (OpKind.O1, OpKind.O2):
        return sorted(D)
    if op is OpKind.O3:
        return sorted(D & two_supports(T))
    return sorted(two_supports(T))


def random_member(target_n: int, seed: int, checked: bool | None = None) -> tuple[Tree, Certificate]:
    """Grow a random family member on exactly ``target_n`` vertices.

    Each step draws an operation that fits the remaining size, then an
    attachment vertex satisfying its precondition. Checked mode asks the
    oracle for valid vertices; otherwise a tracked (gamma_t-tau)-set and
    the 2-support rule guarantee them. ``checked=None`` picks checked mode
    up to :data:`CHECKED_GENERATION_CAP` vertices.
    """
    if target_n < 4:
        raise ValueError("members have at least 4 vertices")
    if checked is None:
        checked = target_n <= CHECKED_GENERATION_CAP
    if checked and target_n - 1 > oracle.ORACLE_CAP:
        raise OracleCapExceeded(f"checked generation limited to n <= {oracle.ORACLE_CAP + 1}")
    rng = random.Random(seed)
    T = path_tree(4)
    D = frozenset({1, 2})
    ops: list[tuple[OpKind, int]] = []
    while T.n < target_n:
        room = target_n - T.n
        options = []
        for op in BASE_OPS:
            if op.added > room:
                continue
            pool = valid_vertices(op, T) if checked else _structural_choices(op, T, D)
            if pool:
                options.append((op, pool))
        op, pool = rng.choice(options)
        u = rng.choice(pool)
        res = apply_op(op, T, u, checked=False)
        D = witness_after(op, D, res)
        T = res.tree
        ops.append((op, u))
    return T, Certificate.from_ops(ops)


@dataclass(frozen=True)
class SMember:
    tree: Tree
    steps: tuple[tuple[OpKind, int], ...]
    tau: int
    gamma_t: int


def random_s_member(target_n: int, seed: int) -> SMember:
    """Random walk from P4 using the relaxed operations O1'-O3' (checked).

    Stops early if no relaxed operation fits the remaining size.
    """
    if target_n < 4:
        raise ValueError("members have at least 4 vertices")
    rng = random.Random(seed)
    T = path_tree(4)
    ops: list[tuple[OpKind, int]] = []
    while T.n < target_n:
        room = target_n - T.n
        options = [(op, pool) for op in PRIMED_OPS if op.added <= room
                   for pool in [valid_vertices(op, T)] if pool]
        if not options:
            break
        op, pool = rng.choice(options)
        u = rng.choice(pool)
        T = apply_op(op, T, u, checked=True).tree
        ops.append((op, u))
    return SMember(T, tuple(ops), tau_tree(T), gamma_t_tree(T))
