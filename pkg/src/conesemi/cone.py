"""Positive integer cones C = cone(A) ∩ N^d for d <= 3.

Membership is decided exactly by integer facet normals: ``v`` lies in C iff
``v >= 0`` coordinatewise and ``n . v >= 0`` for every stored normal ``n``.
Lower-rank cones are handled by including both ``n`` and ``-n`` for normals
of the linear span, so a rank-1 cone in N^2 is just a ray.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import (
    DimensionMismatchError,
    EmptyGeneratorsError,
    NotInConeError,
    UnsupportedDimensionError,
    ZeroGeneratorError,
)
from .orders import GRLEX, TermOrder

Vector = Tuple[int, ...]

MAX_DIMENSION = 3


def vadd(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c: int, x: Sequence[int]) -> Vector:
    return tuple(c * a for a in x)


def dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def half(x: Sequence[int]):
    """``x/2`` if it is a lattice point, else None."""
    if any(c % 2 for c in x):
        return None
    return tuple(c // 2 for c in x)


def primitive(v: Sequence[int]) -> Vector:
    g = reduce(gcd, v, 0)
    return tuple(v) if g in (0, 1) else tuple(c // g for c in v)


def _cross(u, v) -> Vector:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _candidate_normals(d: int, gens: List[Vector]) -> List[Vector]:
    if d == 1:
        return [(1,)]
    if d == 2:
        cands = [(-g[1], g[0]) for g in gens]
    else:
        units = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        planes = [_cross(a, b) for a, b in itertools.combinations(gens, 2)]
        # lines through a generator, and edges inside a plane of a rank-2 cone
        lines = [_cross(g, e) for g in gens for e in units]
        edges = [_cross(p, g) for p in planes if any(p) for g in gens]
        cands = planes + lines + edges
    out = []
    for n in cands:
        if not any(n):
            continue
        for m in (n, vscale(-1, n)):
            out.append(primitive(m))
    return out


@dataclass(frozen=True)
class Cone:
    """A pointed integer cone given by nonzero generators in N^d."""

    dimension: int
    generators: Tuple[Vector, ...]
    normals: Tuple[Vector, ...] = field(init=False, compare=False, repr=False)
    _intervals: Dict[Vector, Tuple[Vector, ...]] = field(
        init=False, compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        d = self.dimension
        if d < 1:
            raise UnsupportedDimensionError("dimension must be positive")
        if d > MAX_DIMENSION:
            raise UnsupportedDimensionError(f"dimension {d} > {MAX_DIMENSION} is not supported")
        gens = [tuple(int(c) for c in g) for g in self.generators]
        if not gens:
            raise EmptyGeneratorsError("a cone needs at least one generator")
        for g in gens:
            if len(g) != d:
                raise DimensionMismatchError(f"generator {g} does not have {d} coordinates")
            if any(c < 0 for c in g):
                raise ValueError(f"generator {g} is not in N^{d}")
            if not any(g):
                raise ZeroGeneratorError("generators must be nonzero")
        gens = sorted(set(gens), key=GRLEX.key)
        object.__setattr__(self, "generators", tuple(gens))
        valid = {n for n in _candidate_normals(d, gens) if all(dot(n, g) >= 0 for g in gens)}
        object.__setattr__(self, "normals", tuple(sorted(valid)))

    # -- membership and order -------------------------------------------------

    def _check(self, v: Sequence[int]) -> None:
        if len(v) != self.dimension:
            raise DimensionMismatchError(f"{tuple(v)} is not a vector of dimension {self.dimension}")

    def contains(self, v: Sequence[int]) -> bool:
        self._check(v)
        return all(c >= 0 for c in v) and all(dot(n, v) >= 0 for n in self.normals)

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def le(self, x: Sequence[int], y: Sequence[int]) -> bool:
        """The partial order x <=_C y, i.e. y - x in C."""
        self._check(x)
        return self.contains(vsub(y, x))

    def lt(self, x, y) -> bool:
        return tuple(x) != tuple(y) and self.le(x, y)

    def interval(self, k: Sequence[int], order: TermOrder = None) -> Tuple[Vector, ...]:
        """I_C(k) = {x in C : x <=_C k}, ascending in ``order`` (graded lex by default)."""
        k = tuple(k)
        if not self.contains(k):
            raise NotInConeError(f"{k} is not in the cone")
        pts = self._intervals.get(k)
        if pts is None:
            box = itertools.product(*(range(c + 1) for c in k))
            pts = tuple(sorted(
                (x for x in box if self.contains(x) and self.contains(vsub(k, x))),
                key=GRLEX.key))
            self._intervals[k] = pts
        if order is not None and order != GRLEX:
            return tuple(order.sorted(pts))
        return pts

    def box_points(self, upper: Sequence[int]) -> List[Vector]:
        """Cone points in the coordinate box [0, upper], graded-lex ascending."""
        box = itertools.product(*(range(c + 1) for c in upper))
        return sorted((x for x in box if self.contains(x)), key=GRLEX.key)

    # -- Hilbert basis --------------------------------------------------------

    @cached_property
    def hilbert_basis(self) -> Tuple[Vector, ...]:
        """The irreducible elements of C, i.e. its minimal monoid generating set.

        Every Hilbert basis element lies in a fundamental parallelepiped of a
        simplicial subcone spanned by primitive extreme rays (or is such a
        ray), hence it is bounded coordinatewise by the sum of the primitive
        generators. Candidates are scanned in graded-lex order, so a point is
        reducible iff it exceeds (in <=_C) some basis element found earlier.
        """
        bound = reduce(vadd, (primitive(g) for g in self.generators))
        basis: List[Vector] = []
        for p in self.box_points(bound):
            if not any(p):
                continue
            if not any(self.contains(vsub(p, b)) for b in basis):
                basis.append(p)
        return tuple(basis)

    # -- antichains -----------------------------------------------------------

    def minimals_in(self, xs: Iterable[Sequence[int]]) -> List[Vector]:
        xs = sorted({tuple(x) for x in xs}, key=GRLEX.key)
        return [x for x in xs if not any(y != x and self.le(y, x) for y in xs)]

    def maximals_in(self, xs: Iterable[Sequence[int]]) -> List[Vector]:
        xs = sorted({tuple(x) for x in xs}, key=GRLEX.key)
        return [x for x in xs if not any(y != x and self.le(x, y) for y in xs)]

    def zero(self) -> Vector:
        return (0,) * self.dimension

    def as_argument(self) -> str:
        """Generators in the "a,b;c,d" form accepted by parse_cone."""
        return ";".join(",".join(map(str, g)) for g in self.generators)

    def __str__(self) -> str:
        return f"cone{{{', '.join(map(str, self.generators))}}}"


def cone_new(dimension: int, generators: Iterable[Sequence[int]]) -> Cone:
    return Cone(dimension, tuple(tuple(g) for g in generators))


def orthant(d: int) -> Cone:
    """N^d itself."""
    return Cone(d, tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))


def parse_cone(text: str) -> Cone:
    """Parse ``"1,0;1,1"`` style generator lists; ``"N2"`` or ``"N^2"`` gives an orthant."""
    text = text.strip()
    if text.upper().startswith("N"):
        return orthant(int(text[1:].lstrip("^")))
    gens = [tuple(int(c) for c in part.split(",")) for part in text.split(";") if part.strip()]
    if not gens:
        raise EmptyGeneratorsError("a cone needs at least one generator")
    return cone_new(len(gens[0]), gens)
