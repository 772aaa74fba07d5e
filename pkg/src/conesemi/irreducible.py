"""Irreducible C-semigroups with a prescribed Frobenius element, and the root set EI(k).

A C-semigroup is symmetric with Frobenius element k exactly when its gaps
lie in I_C(k), k is a gap, and every pair {x, k - x} of I_C(k) contains
exactly one gap. Pseudo-symmetric is the same with k/2 also a gap. The
enumeration backtracks over these pairs, so it needs no external algorithm.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .cone import Cone, Vector, half, vadd, vsub
from .errors import InternalInconsistencyError, KZeroError, ParityMismatchError
from .orders import GRLEX, TermOrder
from .positioned import is_primary_positioned
from .semigroup import CSemigroup, check_in_cone, from_gaps, whole_cone

log = logging.getLogger(__name__)

SYMMETRIC = "symmetric"
PSEUDO_SYMMETRIC = "pseudo-symmetric"


@dataclass(frozen=True)
class PairDecomposition:
    """I_C(k) split into pairs {x, k - x}, larger member first, plus the fixed point k/2."""

    pairs: Tuple[Tuple[Vector, Vector], ...]
    fixed_point: Optional[Vector]

    @classmethod
    def of(cls, cone: Cone, k: Sequence[int], order: TermOrder = GRLEX) -> "PairDecomposition":
        k = tuple(k)
        seen = set()
        pairs = []
        fixed = None
        for x in cone.interval(k):
            if x in seen:
                continue
            y = vsub(k, x)
            if x == y:
                fixed = x
                continue
            seen.update((x, y))
            pairs.append((x, y) if order.gt(x, y) else (y, x))
        pairs.sort(key=lambda p: order.key(p[0]), reverse=True)
        return cls(tuple(pairs), fixed)


def enumerate_irreducible(cone: Cone, k: Sequence[int], kind: str = SYMMETRIC,
                          order: TermOrder = GRLEX) -> List[CSemigroup]:
    """All symmetric (or pseudo-symmetric) C-semigroups with Frobenius element k."""
    k = check_in_cone(cone, k)
    if not any(k):
        raise KZeroError("no irreducible semigroup has Frobenius element 0")
    if kind not in (SYMMETRIC, PSEUDO_SYMMETRIC):
        raise ValueError(f"unknown kind {kind!r}")
    n = len(cone.interval(k))
    if kind == SYMMETRIC and n % 2:
        raise ParityMismatchError(f"|I_C(k)| = {n} is odd; no symmetric semigroup has F = {k}")
    if kind == PSEUDO_SYMMETRIC and not n % 2:
        raise ParityMismatchError(f"|I_C(k)| = {n} is even; no pseudo-symmetric semigroup has F = {k}")

    zero = cone.zero()
    decomp = PairDecomposition.of(cone, k, order)
    # True = element of S, False = gap
    status: Dict[Vector, bool] = {zero: True, k: False}
    if kind == PSEUDO_SYMMETRIC:
        status[decomp.fixed_point] = False
    pairs = [p for p in decomp.pairs if p != (k, zero)]
    members: List[Vector] = [zero]
    results: List[CSemigroup] = []

    def consistent(x: Vector) -> bool:
        if status[x]:
            if x == zero:
                return True
            for z in members:
                if z == zero:
                    continue
                if status.get(vadd(x, z)) is False:
                    return False
            return True
        for a in cone.interval(x):
            if a == zero or a == x:
                continue
            if status.get(a) and status.get(vsub(x, a)):
                return False
        return True

    if not all(consistent(x) for x in list(status)):
        return []

    def assign(x: Vector, in_s: bool) -> None:
        status[x] = in_s
        if in_s:
            members.append(x)

    def unassign(x: Vector) -> None:
        if status.pop(x):
            members.pop()

    def walk(i: int) -> None:
        if i == len(pairs):
            gaps = [x for x, v in status.items() if not v]
            # incremental pruning is only an optimisation; full validation decides
            results.append(from_gaps(cone, gaps))
            return
        big, small = pairs[i]
        for gap, keep in ((big, small), (small, big)):
            assign(gap, False)
            assign(keep, True)
            if consistent(gap) and consistent(keep):
                walk(i + 1)
            unassign(keep)
            unassign(gap)

    walk(0)
    results.sort(key=lambda s: s.key)
    return results


def ei_set(cone: Cone, k: Sequence[int], order: TermOrder = GRLEX) -> List[CSemigroup]:
    """The roots EI(k): unitary / two-element extensions of irreducibles with Frobenius k.

    For k = 0 the only primary positioned semigroup is C itself, which is
    returned as the single root.
    """
    k = check_in_cone(cone, k)
    if not any(k):
        return [whole_cone(cone)]
    n = len(cone.interval(k))
    out = []
    if n % 2 == 0:
        for t in enumerate_irreducible(cone, k, SYMMETRIC, order):
            s = CSemigroup(cone, tuple(g for g in t.gaps if g != k))
            if s.is_whole_cone:
                # |I_C(k)| = 2: C itself has |M| + |C| = 1, so it is not in P(k)
                log.info("EI(%s): rejected C, the only gap of the symmetric semigroup was k", k)
                continue
            out.append(s)
    else:
        k2 = half(k)
        for t in enumerate_irreducible(cone, k, PSEUDO_SYMMETRIC, order):
            s = CSemigroup(cone, tuple(g for g in t.gaps if g not in (k, k2)))
            if k2 in s.c_set:
                out.append(s)
            else:
                log.info("EI(%s): rejected %s since k/2 is not in C(S)", k, s)
    for s in out:
        if not is_primary_positioned(s, k):
            raise InternalInconsistencyError(f"root {s} is not primary positioned for {k}")
    out.sort(key=lambda s: s.key)
    return out
