"""Brute-force ground truth for the forest and the irreducible enumeration.

Two independent enumerations of all C-semigroups whose gaps lie in I_C(k):

* a duplicate-free tree walk from C, where the children of S are S minus one
  minimal generator g in I_C(k) that is larger (graded lex) than every gap
  of S, so each semigroup is reached along exactly one path;
* a plain filter over all subsets of I_C(k) \\ {0}, for small intervals.

Both refuse to run past a cap on |I_C(k)| instead of truncating.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from .cone import Cone, Vector, vsub
from .errors import CapExceededError, EmptyBSetError
from .forest import build_forest
from .orders import GRLEX, TermOrder
from .positioned import PositionedContext, is_primary_positioned
from .semigroup import CSemigroup, check_in_cone, from_gaps

DEFAULT_CAP = 20
SUBSET_CAP = 12
CAP_ENV = "CONESEMI_MAX_INTERVAL"


def max_interval(cap: Optional[int] = None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


def _checked_interval(cone: Cone, k: Sequence[int], cap: int) -> Tuple[Vector, ...]:
    k = check_in_cone(cone, k)
    interval = cone.interval(k)
    if len(interval) > cap:
        raise CapExceededError(len(interval), cap)
    return interval


def _walk(cone: Cone, k: Vector, interval: Tuple[Vector, ...], positioned_only: bool):
    """Yield gap sets of the semigroup tree restricted to I_C(k)."""
    zero = cone.zero()
    rank = {x: i for i, x in enumerate(interval)}  # interval is graded-lex sorted
    below = {x: [a for a in cone.interval(x) if a != zero and a != x] for x in interval}

    def is_generator(g: Vector, gaps: FrozenSet[Vector]) -> bool:
        return not any(a not in gaps and vsub(g, a) not in gaps for a in below[g])

    stack: List[Tuple[FrozenSet[Vector], int]] = [(frozenset(), 0)]
    while stack:
        gaps, start = stack.pop()
        yield gaps
        for g in interval[start:]:
            if g == zero or g in gaps or not is_generator(g, gaps):
                continue
            if positioned_only:
                # k-positioned can only be lost by adding gaps, so prune here
                if g == vsub(k, g) or vsub(k, g) in gaps:
                    continue
            stack.append((gaps | {g}, rank[g] + 1))


def enumerate_all(cone: Cone, k: Sequence[int], cap: Optional[int] = None) -> List[CSemigroup]:
    """Every C-semigroup whose gaps lie in I_C(k), canonically sorted."""
    k = tuple(k)
    interval = _checked_interval(cone, k, max_interval(cap))
    out = [from_gaps(cone, gaps) for gaps in _walk(cone, k, interval, False)]
    out.sort(key=lambda s: s.key)
    return out


def enumerate_by_subsets(cone: Cone, k: Sequence[int], cap: int = SUBSET_CAP) -> List[CSemigroup]:
    """Same family as :func:`enumerate_all`, by filtering every gap subset."""
    k = tuple(k)
    interval = _checked_interval(cone, k, cap)
    zero = cone.zero()
    points = [x for x in interval if x != zero]
    out = []
    for r in range(len(points) + 1):
        for gaps in itertools.combinations(points, r):
            gapset = set(gaps)
            closed = all(a in gapset or vsub(h, a) in gapset
                         for h in gaps for a in cone.interval(h) if a != zero and a != h)
            if closed:
                out.append(CSemigroup(cone, gaps))
    out.sort(key=lambda s: s.key)
    return out


def oracle_primary_set(cone: Cone, k: Sequence[int], cap: Optional[int] = None) -> List[CSemigroup]:
    """All primary positioned semigroups for k, by exhaustive search."""
    k = tuple(k)
    interval = _checked_interval(cone, k, max_interval(cap))
    out = []
    for gaps in _walk(cone, k, interval, True):
        s = from_gaps(cone, gaps)
        if is_primary_positioned(s, k):
            out.append(s)
    out.sort(key=lambda s: s.key)
    return out


@dataclass
class CompareReport:
    """Difference between the forest's node set and the oracle's."""

    forest_size: int
    oracle_size: int
    missing: List[CSemigroup] = field(default_factory=list)
    extra: List[CSemigroup] = field(default_factory=list)
    beta_mismatches: List[Tuple[CSemigroup, Optional[Vector], Optional[Vector]]] = field(
        default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.missing or self.extra or self.beta_mismatches)

    def lines(self) -> List[str]:
        out = [f"forest: {self.forest_size} semigroups, oracle: {self.oracle_size} semigroups"]
        for s in self.missing:
            out.append(f"missing from forest: {list(s.gaps)}")
        for s in self.extra:
            out.append(f"not in oracle: {list(s.gaps)}")
        for s, stored, fresh in self.beta_mismatches:
            out.append(f"beta mismatch at {list(s.gaps)}: stored {stored}, recomputed {fresh}")
        out.append("OK" if self.ok else "MISMATCH")
        return out


def compare(cone: Cone, k: Sequence[int], order: TermOrder = GRLEX,
            cap: Optional[int] = None, jobs: int = 1) -> CompareReport:
    k = tuple(k)
    expected = oracle_primary_set(cone, k, cap)
    forest = build_forest(cone, k, order, jobs=jobs)
    got: Set = set()
    report = CompareReport(len(forest), len(expected))
    for tree in forest.trees:
        for node in tree.nodes:
            s = node.semigroup
            got.add(s.key)
            try:
                fresh = PositionedContext(s, k, order).beta
            except EmptyBSetError:
                fresh = None
            if fresh != node.beta:
                report.beta_mismatches.append((s, node.beta, fresh))
    want = {s.key for s in expected}
    report.missing = [s for s in expected if s.key not in got]
    report.extra = [s for s in forest.semigroups() if s.key not in want]
    return report
