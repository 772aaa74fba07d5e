"""C-semigroups given by a cone and a finite gap set, with their invariants."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .cone import Cone, Vector, half, vadd, vscale, vsub
from .errors import (
    BoundUncertainError,
    GapNotInConeError,
    NoGapsError,
    NotClosedError,
    NotInConeError,
    NotInSemigroupError,
    NotMinimalGeneratorError,
    NotSpecialGapError,
    ZeroGapError,
)
from .orders import GRLEX, TermOrder

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CSemigroup:
    """S = C minus a finite set of gaps.

    Instances are immutable; equality and hashing use the cone and the gap
    tuple, which is kept sorted in graded-lex order. Build validated values
    with :func:`from_gaps`.
    """

    cone: Cone
    gaps: Tuple[Vector, ...]
    gapset: FrozenSet[Vector] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        gaps = tuple(sorted({tuple(g) for g in self.gaps}, key=GRLEX.key))
        object.__setattr__(self, "gaps", gaps)
        object.__setattr__(self, "gapset", frozenset(gaps))

    # -- basic queries ---------------------------------------------------------

    def __contains__(self, x) -> bool:
        x = tuple(x)
        return x not in self.gapset and self.cone.contains(x)

    def contains(self, x) -> bool:
        return x in self

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def is_whole_cone(self) -> bool:
        return not self.gaps

    @property
    def key(self) -> Tuple[Vector, ...]:
        """Canonical encoding used for sorting and deduplication."""
        return self.gaps

    def frobenius(self, order: TermOrder = GRLEX) -> Optional[Vector]:
        """The order-maximal gap, or None when S is the whole cone."""
        if not self.gaps:
            return None
        return order.max_of(self.gaps)

    def _decomposes(self, s: Vector) -> bool:
        """True if s = a + b with a, b nonzero elements of S."""
        zero = self.cone.zero()
        for x in self.cone.interval(s):
            if x == zero or x == s:
                continue
            if x not in self.gapset and vsub(s, x) not in self.gapset:
                return True
        return False

    # -- generators ------------------------------------------------------------

    @cached_property
    def minimal_generators(self) -> Tuple[Vector, ...]:
        """msg(S).

        Candidates are HB, HB + H and H + HB + H (H the gaps). Write a minimal
        generator s outside HB as b1 + ... + bn over the Hilbert basis and let
        p_j be the partial sums; for 0 < j < n one of p_j, s - p_j is a gap.
        With a the last index where p_j is a gap, s lands in HB + H (a = 0 or
        a = n - 1) or in H + HB + H otherwise.
        """
        hb = self.cone.hilbert_basis
        cands = set(hb)
        for h in self.gaps:
            for b in hb:
                hb_sum = vadd(h, b)
                cands.add(hb_sum)
                for h2 in self.gaps:
                    cands.add(vadd(hb_sum, h2))
        keep = [s for s in cands if s not in self.gapset and not self._decomposes(s)]
        return tuple(sorted(keep, key=GRLEX.key))

    # -- pseudo-Frobenius and special gaps --------------------------------------

    @cached_property
    def pseudo_frobenius(self) -> Tuple[Vector, ...]:
        out = []
        for h in self.gaps:
            # h + s is only ever a gap g when s = g - h lies in S \ {0}
            if not any(g != h and vsub(g, h) in self for g in self.gaps):
                out.append(h)
        return tuple(out)

    @cached_property
    def special_gaps(self) -> Tuple[Vector, ...]:
        return tuple(x for x in self.pseudo_frobenius if vscale(2, x) in self)

    def is_symmetric(self, order: TermOrder = GRLEX) -> bool:
        f = self.frobenius(order)
        return f is not None and set(self.pseudo_frobenius) == {f}

    def is_pseudo_symmetric(self, order: TermOrder = GRLEX) -> bool:
        f = self.frobenius(order)
        if f is None:
            return False
        f2 = half(f)
        return f2 is not None and set(self.pseudo_frobenius) == {f, f2}

    def is_irreducible(self, order: TermOrder = GRLEX) -> bool:
        return self.is_symmetric(order) or self.is_pseudo_symmetric(order)

    # -- order-theoretic sets ----------------------------------------------------

    def unit_interval(self, k: Sequence[int]) -> Tuple[Vector, ...]:
        """I_S(k) = {x in S : k - x in S}."""
        k = tuple(k)
        return tuple(x for x in self.cone.interval(k)
                     if x not in self.gapset and vsub(k, x) not in self.gapset)

    @cached_property
    def maximal_gaps(self) -> Tuple[Vector, ...]:
        return tuple(self.cone.maximals_in(self.gaps))

    @cached_property
    def m_set(self) -> Tuple[Vector, ...]:
        """0 together with the gaps h having no nonzero element of S below them in <=_C."""
        zero = self.cone.zero()
        out = [zero]
        for h in self.gaps:
            if all(x == zero or x in self.gapset for x in self.cone.interval(h)):
                out.append(h)
        return tuple(out)

    @cached_property
    def c_set(self) -> Tuple[Vector, ...]:
        """Cone elements lying below some gap; the union of I_C(h) over maximal gaps h."""
        pts = set()
        for h in self.maximal_gaps:
            pts.update(self.cone.interval(h))
        return tuple(sorted(pts, key=GRLEX.key))

    @cached_property
    def minimals_nonzero(self) -> Tuple[Vector, ...]:
        """Minimals of S \\ {0} under <=_C; always a subset of msg(S)."""
        zero = self.cone.zero()
        out = []
        for s in self.minimal_generators:
            if all(x == zero or x == s or x in self.gapset for x in self.cone.interval(s)):
                out.append(s)
        return tuple(out)

    def x_minimals(self) -> Tuple[Vector, ...]:
        """Minimal elements of X_S = {x in C : h <=_C x for every gap h}.

        Scans the box [0, sum of maximal gaps + sum of the Hilbert basis]. The
        result is then checked against a box enlarged by another Hilbert basis
        sum: any X_S point there that dominates none of the minimals found
        means the first box was too small, and BoundUncertainError is raised.
        """
        if not self.gaps:
            raise NoGapsError("X_S is the whole cone when S has no gaps")
        cone = self.cone
        hb_sum = cone.zero()
        for b in cone.hilbert_basis:
            hb_sum = vadd(hb_sum, b)
        sigma = hb_sum
        for h in self.maximal_gaps:
            sigma = vadd(sigma, h)

        def in_x(x):
            return all(cone.le(h, x) for h in self.maximal_gaps)

        found = cone.minimals_in(x for x in cone.box_points(sigma) if in_x(x))
        for x in cone.box_points(vadd(sigma, hb_sum)):
            if in_x(x) and not any(cone.le(m, x) for m in found):
                raise BoundUncertainError(f"X_S point {x} outside the search box is not covered")
        return tuple(found)

    # -- moves -----------------------------------------------------------------------

    def add_element(self, x: Sequence[int]) -> "CSemigroup":
        """S ∪ {x} for a special gap x."""
        x = tuple(x)
        if x not in self.special_gaps:
            raise NotSpecialGapError(f"{x} is not a special gap")
        return CSemigroup(self.cone, tuple(g for g in self.gaps if g != x))

    def remove_generator(self, x: Sequence[int]) -> "CSemigroup":
        """S \\ {x} for a minimal generator x."""
        x = tuple(x)
        if x not in self.minimal_generators:
            raise NotMinimalGeneratorError(f"{x} is not a minimal generator")
        return CSemigroup(self.cone, self.gaps + (x,))

    def expressions(self, x: Sequence[int]) -> List[Tuple[Vector, Vector]]:
        """Ordered pairs (a, b) of nonzero elements of S with a + b = x."""
        x = tuple(x)
        zero = self.cone.zero()
        out = []
        for a in self.cone.interval(x):
            b = vsub(x, a)
            if a != zero and b != zero and a not in self.gapset and b not in self.gapset:
                out.append((a, b))
        return out

    def unique_expression(self, x: Sequence[int]) -> bool:
        """True iff at most one ordered pair (a, b) in S* x S* sums to x."""
        x = tuple(x)
        if x not in self:
            raise NotInSemigroupError(f"{x} is not in S")
        return len(self.expressions(x)) <= 1

    def __str__(self) -> str:
        return f"{self.cone} \\ {{{', '.join(map(str, self.gaps))}}}"


def from_gaps(cone: Cone, gaps: Iterable[Sequence[int]]) -> CSemigroup:
    """Validate ``gaps`` and return the C-semigroup C \\ gaps.

    Raises GapNotInConeError, ZeroGapError or NotClosedError (with the
    offending decomposition) on invalid input.
    """
    gaps = {tuple(int(c) for c in g) for g in gaps}
    zero = cone.zero()
    for g in gaps:
        try:
            inside = cone.contains(g)
        except Exception:
            raise GapNotInConeError(g) from None
        if not inside:
            raise GapNotInConeError(g)
        if g == zero:
            raise ZeroGapError()
    for h in sorted(gaps, key=GRLEX.key):
        for x in cone.interval(h):
            if x == zero or x == h or x in gaps:
                continue
            y = vsub(h, x)
            if y not in gaps:
                raise NotClosedError(h, x, y)
    return CSemigroup(cone, tuple(gaps))


def whole_cone(cone: Cone) -> CSemigroup:
    return CSemigroup(cone, ())


def numerical(gaps: Iterable[int]) -> CSemigroup:
    """Convenience: a numerical semigroup (C = N) from integer gaps."""
    from .cone import orthant

    return from_gaps(orthant(1), [(g,) for g in gaps])


def check_in_cone(cone: Cone, k: Sequence[int]) -> Vector:
    k = tuple(k)
    if not cone.contains(k):
        raise NotInConeError(f"{k} is not in the cone")
    return k
