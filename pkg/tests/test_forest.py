import pytest

from conesemi import (
    GREVLEX,
    GRLEX,
    LEX,
    PositionedContext,
    build_forest,
    compare,
    cone_new,
    construct_primary,
    ei_set,
    from_gaps,
    is_primary_positioned,
    numerical,
    oracle_primary_set,
    orthant,
    root_children,
)
from conesemi.errors import NoPrimaryExistsError, NotARootError, OddCaseUnsupportedConeError
from conesemi.orders import parse_order

import worked_examples as ex

CASES = [(orthant(2), (2, 3)), (orthant(2), (3, 3)), (orthant(2), (4, 3)), (orthant(2), (2, 4)),
         (ex.DIAG, (5, 3)), (ex.DIAG, (6, 2)), (ex.DIAG, (4, 2)), (orthant(1), (9,)), (orthant(1), (12,)),
         (orthant(3), (1, 1, 2)), (cone_new(2, [(1, 0), (1, 2)]), (3, 3)), (cone_new(2, [(2, 1), (1, 2)]), (4, 5))]
ORDERS = [GRLEX, LEX, GREVLEX, parse_order("weighted:2,1:lex")]


@pytest.mark.parametrize("cone,k", CASES, ids=lambda v: str(v))
def test_tree_invariants(cone, k):
    forest = build_forest(cone, k)
    for tree in forest.trees:
        assert tree.root.is_root and tree.root.depth == 0
        assert tree.root.semigroup.key in {s.key for s in ei_set(cone, k)}
        for node in tree.nodes:
            assert is_primary_positioned(node.semigroup, k)
            kids = tree.children_of(node.id)
            xs = [c.beta for c in kids]
            assert xs == sorted(xs, key=GRLEX.key, reverse=True)
            for c in kids:
                assert c.depth == node.depth + 1
                assert c.semigroup.genus == node.semigroup.genus - 1
                assert set(node.semigroup.gaps) - set(c.semigroup.gaps) == {c.beta}
                # the parent is recovered by removing beta of the child
                assert PositionedContext(c.semigroup, k).beta == c.beta
                assert PositionedContext(c.semigroup, k).psi() == node.semigroup


@pytest.mark.parametrize("cone,k", CASES, ids=lambda v: str(v))
@pytest.mark.parametrize("order", ORDERS, ids=lambda o: o.name)
def test_forest_matches_oracle_under_every_order(cone, k, order):
    if order.weights and len(order.weights) != cone.dimension:
        pytest.skip("weight vector is two-dimensional")
    assert compare(cone, k, order).ok
    want = {s.key for s in oracle_primary_set(cone, k)}
    assert {s.key for s in build_forest(cone, k, order).semigroups()} == want


def test_root_children_rejects_non_root():
    with pytest.raises(NotARootError):
        root_children(ex.k65_semigroup(), (6, 5))


def test_s6_child():
    s6 = from_gaps(ex.N2, ex.N2_K23_ROOTS[5])
    kids = root_children(s6, (2, 3))
    assert [x for x, _ in kids] == [ex.S6_CHILD_ELEMENT]


def test_parallel_build_equals_serial():
    for cone, k in CASES[:6]:
        a = build_forest(cone, k, jobs=1)
        b = build_forest(cone, k, jobs=3)
        assert a == b


def test_construct_numerical():
    assert construct_primary(orthant(1), (7,)).gaps == numerical([1, 2, 3]).gaps
    assert construct_primary(orthant(1), (0,)).is_whole_cone


NON_DEGENERATE = [(orthant(2), (a, b)) for a in range(6) for b in range(6)
                  if (a, b) not in {(1, 0), (0, 1), (2, 0), (0, 2), (4, 0), (0, 4)}]
NON_DEGENERATE += [(orthant(3), k) for k in [(1, 1, 1), (2, 1, 1), (1, 1, 2), (2, 2, 1)]]
NON_DEGENERATE += [(ex.DIAG, k) for k in [(3, 1), (5, 3), (7, 2), (11, 5), (9, 4)]]
NON_DEGENERATE += [(orthant(1), (n,)) for n in (3, 5, 7, 8, 9, 10, 12, 15)]


@pytest.mark.parametrize("cone,k", NON_DEGENERATE, ids=lambda v: str(v))
def test_construct_primary(cone, k):
    s = construct_primary(cone, k)
    assert is_primary_positioned(s, k)


DEGENERATE = [(orthant(2), k) for k in [(1, 0), (0, 1), (2, 0), (0, 2), (4, 0), (0, 4), (6, 0), (0, 6)]]
DEGENERATE += [(ex.DIAG, (1, 0)), (ex.DIAG, (1, 1))]
DEGENERATE += [(orthant(1), (n,)) for n in (1, 2, 4, 6)]


@pytest.mark.parametrize("cone,k", DEGENERATE, ids=lambda v: str(v))
def test_degenerate_k_have_no_primary_semigroup(cone, k):
    assert oracle_primary_set(cone, k) == []
    assert build_forest(cone, k).is_empty
    with pytest.raises(NoPrimaryExistsError):
        construct_primary(cone, k)


def test_odd_construction_needs_orthant():
    with pytest.raises(OddCaseUnsupportedConeError):
        construct_primary(ex.DIAG, (4, 2))
