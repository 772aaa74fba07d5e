"""The forest of primary positioned C-semigroups for a fixed k.

Every primary positioned S that is not a root has a parent S \\ {beta(S)};
walking parents ends at an element of EI(k). The trees are grown downward
by adding special gaps, and the children rules decide which additions are
exactly the inverses of that parent map.
"""

from __future__ import annotations

import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .cone import Cone, Vector, half, vscale, vsub
from .errors import (
    InternalInconsistencyError,
    NoPrimaryExistsError,
    NotARootError,
    NotClosedError,
    OddCaseUnsupportedConeError,
)
from .irreducible import ei_set
from .orders import GRLEX, TermOrder
from .positioned import PositionedContext, classify, is_primary_positioned
from .semigroup import CSemigroup, check_in_cone, from_gaps, whole_cone

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ForestNode:
    """One semigroup of P(k). ``beta`` is the element added to reach it (None at roots)."""

    id: int
    semigroup: CSemigroup
    beta: Optional[Vector]
    parent_id: Optional[int]
    depth: int

    @property
    def is_root(self) -> bool:
        return self.parent_id is None


@dataclass(frozen=True)
class Tree:
    """Nodes of one tree in breadth-first order; node ids are positions in ``nodes``."""

    nodes: Tuple[ForestNode, ...]

    @property
    def root(self) -> ForestNode:
        return self.nodes[0]

    def __len__(self) -> int:
        return len(self.nodes)

    def children_of(self, node_id: int) -> List[ForestNode]:
        return [n for n in self.nodes if n.parent_id == node_id]


@dataclass(frozen=True)
class Forest:
    cone: Cone
    k: Vector
    order: TermOrder
    trees: Tuple[Tree, ...] = field(default=())

    def semigroups(self) -> List[CSemigroup]:
        return [n.semigroup for t in self.trees for n in t.nodes]

    def __len__(self) -> int:
        return sum(len(t) for t in self.trees)

    @property
    def is_empty(self) -> bool:
        return not self.trees


def _candidates(s: CSemigroup) -> List[Vector]:
    excluded = set(s.m_set) | set(s.maximal_gaps)
    return [x for x in s.special_gaps if x not in excluded]


def root_children(t: CSemigroup, k: Sequence[int], order: TermOrder = GRLEX
                  ) -> List[Tuple[Vector, CSemigroup]]:
    """Children T ∪ {x} of a root T, in descending order of x."""
    ctx = PositionedContext(t, tuple(k), order)
    if ctx.b_set:
        raise NotARootError(f"B(T) = {ctx.b_set} is not empty")
    k = ctx.k
    out = []
    for x in _candidates(t):
        # x > k/2 compared through 2x > k so k/2 need not be a lattice point
        if order.gt(vscale(2, x), k) or vscale(3, x) == k or vscale(4, x) == k:
            out.append((x, t.add_element(x)))
    out.sort(key=lambda p: order.key(p[0]), reverse=True)
    return out


def node_children(ctx: PositionedContext) -> List[Tuple[Vector, CSemigroup]]:
    """Children S ∪ {x} of a non-root S, in descending order of x."""
    s, order = ctx.s, ctx.order
    b = ctx.beta
    b_set = ctx.b_set
    out = []
    for x in _candidates(s):
        if order.gt(x, b):
            ok = True
        else:
            x2 = vscale(2, x)
            ok = all(vsub(y, x) in s or y == x2 for y in b_set if order.lt(x, y))
        if ok:
            out.append((x, s.add_element(x)))
    out.sort(key=lambda p: order.key(p[0]), reverse=True)
    return out


def build_tree(t: CSemigroup, k: Sequence[int], order: TermOrder = GRLEX) -> Tree:
    """Breadth-first expansion of the tree P_T(k) from the root T."""
    k = tuple(k)
    nodes = [ForestNode(0, t, None, None, 0)]
    queue = deque([0])
    while queue:
        nid = queue.popleft()
        node = nodes[nid]
        if node.is_root:
            kids = root_children(node.semigroup, k, order)
        else:
            kids = node_children(PositionedContext(node.semigroup, k, order))
        for x, child in kids:
            cid = len(nodes)
            nodes.append(ForestNode(cid, child, x, nid, node.depth + 1))
            queue.append(cid)
    return Tree(tuple(nodes))


def _tree_job(args):
    t, k, order = args
    return build_tree(t, k, order)


def build_forest(cone: Cone, k: Sequence[int], order: TermOrder = GRLEX, jobs: int = 1) -> Forest:
    """All of P(k), one tree per root in EI(k).

    With ``jobs > 1`` the trees are built in worker processes; results are
    collected in root order, so the output does not depend on ``jobs``.
    """
    k = check_in_cone(cone, k)
    roots = ei_set(cone, k, order)
    tasks = [(t, k, order) for t in roots]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            trees = list(pool.map(_tree_job, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        trees = [_tree_job(a) for a in tasks]
    seen = set()
    for tree in trees:
        for node in tree.nodes:
            if node.semigroup.key in seen:
                raise InternalInconsistencyError(f"{node.semigroup} appears in two trees")
            seen.add(node.semigroup.key)
    return Forest(cone, k, order, tuple(trees))


def node_class(s: CSemigroup, k: Sequence[int], order: TermOrder = GRLEX) -> str:
    return classify(s, k, order)


def construct_primary(cone: Cone, k: Sequence[int], order: TermOrder = GRLEX) -> CSemigroup:
    """One primary positioned semigroup for k, built directly.

    Even |I_C(k)|: the symmetric semigroup keeping the larger member of each
    pair {x, k - x}, with k added back. Odd |I_C(k)| (orthant only): the same
    larger half together with k/2, then x = min{k/2 + e_i} swapped for k - x.
    If the swapped set fails to be closed (this happens for k = 6e_i, where
    2(k - x) = x) the roots EI(k) are searched instead.
    """
    k = check_in_cone(cone, k)
    if not any(k):
        return whole_cone(cone)
    zero = cone.zero()
    interval = cone.interval(k)
    lower_half = [y for y in interval if y != zero and order.lt(vscale(2, y), k)]
    if len(interval) % 2 == 0:
        if not lower_half:
            # only C \ {k} is symmetric with Frobenius k, and C is not primary positioned
            raise NoPrimaryExistsError(f"no primary positioned semigroup exists for {k}: |I_C(k)| = 2")
        out = from_gaps(cone, lower_half)
    else:
        d = cone.dimension
        units = [tuple(int(i == j) for j in range(d)) for i in range(d)]
        if set(cone.hilbert_basis) != set(units):
            raise OddCaseUnsupportedConeError("the odd-parity construction needs C = N^d")
        if any(k == vscale(2, e) or k == vscale(4, e) for e in units):
            raise NoPrimaryExistsError(f"no primary positioned GNS exists for {k}")
        k2 = half(k)
        x = order.min_of(y for y in (tuple(a + b for a, b in zip(k2, e)) for e in units)
                         if y in interval)
        gaps = (set(lower_half) | {x}) - {vsub(k, x)}
        try:
            out = from_gaps(cone, gaps)
        except NotClosedError as exc:
            log.info("swap construction for %s is not closed (%s); searching EI(k)", k, exc)
            roots = ei_set(cone, k, order)
            if not roots:
                raise NoPrimaryExistsError(
                    f"the swap construction fails for {k} and EI(k) is empty") from None
            out = roots[0]
    if not is_primary_positioned(out, k):
        raise InternalInconsistencyError(f"constructed {out} is not primary positioned for {k}")
    return out
