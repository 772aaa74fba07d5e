"""k-positioned and primary positioned C-semigroups, UESY/PEPSY classes, B(S), beta and Psi_k."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Set, Tuple

from .cone import Vector, half, vadd, vsub
from .errors import (
    EmptyBSetError,
    InternalInconsistencyError,
    PreconditionViolatedError,
)
from .orders import GRLEX, TermOrder
from .semigroup import CSemigroup, check_in_cone

log = logging.getLogger(__name__)

UESY = "UESY"
PEPSY = "PEPSY"
OTHER = "OTHER"


def is_k_positioned(s: CSemigroup, k: Sequence[int]) -> bool:
    """Every gap h has k - h in S."""
    k = check_in_cone(s.cone, k)
    return all(vsub(k, h) in s for h in s.gaps)


def is_primary_positioned(s: CSemigroup, k: Sequence[int]) -> bool:
    k = check_in_cone(s.cone, k)
    if not is_k_positioned(s, k):
        return False
    return len(s.m_set) + len(s.c_set) == len(s.cone.interval(k))


def genus_bound_holds(s: CSemigroup, k: Sequence[int]) -> bool:
    """g(S) <= (|I_C(k)| - 2) / 2 for a k-positioned S with k in S."""
    k = check_in_cone(s.cone, k)
    if k not in s or not is_k_positioned(s, k):
        raise PreconditionViolatedError(f"S must be {k}-positioned with {k} in S")
    return 2 * s.genus <= len(s.cone.interval(k)) - 2


def classify(s: CSemigroup, k: Sequence[int], order: TermOrder = GRLEX) -> str:
    """UESY, PEPSY or OTHER for a k-positioned S with k in S.

    Each class is decided twice: by the genus value and by the structural
    criterion (k a minimal generator, resp. k = k/2 + k/2 being its only
    expression). The two must agree; a mismatch raises
    InternalInconsistencyError.
    """
    k = check_in_cone(s.cone, k)
    if k not in s or not is_k_positioned(s, k):
        raise PreconditionViolatedError(f"S must be {k}-positioned with {k} in S")
    n = len(s.cone.interval(k))
    g2 = 2 * s.genus
    by_genus_uesy = g2 == n - 2
    by_genus_pepsy = g2 == n - 3
    by_msg = k in s.minimal_generators
    n_expr = len(s.expressions(k))
    by_unique = n_expr == 1
    log.debug("classify k=%s: genus(uesy=%s, pepsy=%s) msg=%s expressions=%d",
              k, by_genus_uesy, by_genus_pepsy, by_msg, n_expr)
    if by_genus_uesy != by_msg:
        raise InternalInconsistencyError(
            f"UESY genus test {by_genus_uesy} but k in msg(S) is {by_msg}")
    if by_genus_pepsy != by_unique:
        raise InternalInconsistencyError(
            f"PEPSY genus test {by_genus_pepsy} but unique expression is {by_unique}")
    if by_genus_uesy:
        return UESY
    if by_genus_pepsy:
        return PEPSY
    return OTHER


def primary_k_set(s: CSemigroup) -> List[Vector]:
    """Every k for which S is primary positioned.

    Such k lie in X_S, and |I_C(k)| must equal the fixed target |M| + |C|.
    Since I_C(k) grows with k under <=_C, the search walks upward from the
    minimal elements of X_S by Hilbert basis steps and stops wherever the
    interval is already too large.
    """
    cone = s.cone
    target = len(s.m_set) + len(s.c_set)
    starts = s.x_minimals() if s.gaps else (cone.zero(),)
    seen: Set[Vector] = set(starts)
    queue = deque(starts)
    found = []
    while queue:
        k = queue.popleft()
        if len(cone.interval(k)) > target:
            continue
        if k in s and is_primary_positioned(s, k):
            found.append(k)
        for b in cone.hilbert_basis:
            nxt = vadd(k, b)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(found, key=GRLEX.key)


@dataclass(frozen=True)
class PositionedContext:
    """A semigroup S together with k in S and a term order; caches B(S) and beta(S)."""

    s: CSemigroup
    k: Vector
    order: TermOrder = GRLEX

    def __post_init__(self):
        k = check_in_cone(self.s.cone, self.k)
        object.__setattr__(self, "k", k)
        if k not in self.s:
            raise PreconditionViolatedError(f"{k} must be an element of S")

    @cached_property
    def interval(self) -> Tuple[Vector, ...]:
        return self.s.cone.interval(self.k)

    @cached_property
    def b_set(self) -> Tuple[Vector, ...]:
        """Minimal generators x in C(S), not minimal in S \\ {0}, with k - x in S and x != k/2."""
        s, k = self.s, self.k
        c_set = set(s.c_set)
        minimals = set(s.minimals_nonzero)
        k2 = half(k)
        out = []
        for x in s.minimal_generators:
            if x in c_set and x not in minimals and x != k2 and vsub(k, x) in s:
                out.append(x)
        return tuple(out)

    @cached_property
    def beta(self) -> Vector:
        if not self.b_set:
            raise EmptyBSetError("B(S) is empty")
        return self.order.max_of(self.b_set)

    def is_primary(self) -> bool:
        return is_primary_positioned(self.s, self.k)

    def psi(self) -> CSemigroup:
        """Psi_k(S) = S \\ {beta(S)}; the result is again primary positioned for k."""
        if not self.is_primary():
            raise PreconditionViolatedError(f"S is not primary positioned for {self.k}")
        out = self.s.remove_generator(self.beta)
        if not is_primary_positioned(out, self.k):
            raise InternalInconsistencyError("Psi_k left P(k)")
        return out


def b_set(s: CSemigroup, k: Sequence[int], order: TermOrder = GRLEX) -> Tuple[Vector, ...]:
    return PositionedContext(s, tuple(k), order).b_set


def beta(s: CSemigroup, k: Sequence[int], order: TermOrder = GRLEX) -> Vector:
    return PositionedContext(s, tuple(k), order).beta


def psi(s: CSemigroup, k: Sequence[int], order: TermOrder = GRLEX) -> CSemigroup:
    return PositionedContext(s, tuple(k), order).psi()
