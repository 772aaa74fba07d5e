import pytest

from conesemi import GRLEX, GREVLEX, PositionedContext, cone_new, ei_set, enumerate_irreducible, numerical, orthant
from conesemi.errors import KZeroError, ParityMismatchError
from conesemi.irreducible import PSEUDO_SYMMETRIC, SYMMETRIC, PairDecomposition
from conesemi.oracle import enumerate_all, oracle_primary_set
from conesemi.positioned import is_primary_positioned

import worked_examples as ex

EVEN = [(orthant(2), (2, 3)), (orthant(2), (1, 3)), (orthant(2), (3, 3)), (ex.DIAG, (5, 3)),
        (ex.DIAG, (4, 1)), (orthant(1), (7,)), (orthant(1), (11,)), (orthant(3), (1, 1, 1)),
        (cone_new(2, [(1, 0), (1, 2)]), (2, 1)), (cone_new(2, [(2, 1), (1, 2)]), (4, 5))]
ODD = [(orthant(2), (2, 2)), (orthant(2), (4, 2)), (ex.DIAG, (4, 2)), (orthant(1), (6,)),
       (orthant(1), (10,)), (orthant(3), (2, 0, 2))]


def brute(cone, k, kind):
    out = []
    for s in enumerate_all(cone, k):
        if not s.gaps or s.frobenius(GRLEX) != k:
            continue
        if (kind == SYMMETRIC and s.is_symmetric()) or (kind == PSEUDO_SYMMETRIC and s.is_pseudo_symmetric()):
            out.append(s)
    return out


def test_numerical_frobenius_seven():
    got = enumerate_irreducible(orthant(1), (7,))
    assert len(got) == 3
    assert {s.gaps for s in got} == {numerical(g).gaps for g in ([1, 2, 3, 7], [1, 2, 4, 7], [1, 3, 5, 7])}


@pytest.mark.parametrize("cone,k", EVEN, ids=lambda v: str(v))
def test_symmetric_matches_brute_force(cone, k):
    got = enumerate_irreducible(cone, k, SYMMETRIC)
    assert [s.key for s in got] == [s.key for s in brute(cone, k, SYMMETRIC)]
    for s in got:
        assert s.frobenius() == k and s.is_symmetric()


@pytest.mark.parametrize("cone,k", ODD, ids=lambda v: str(v))
def test_pseudo_symmetric_matches_brute_force(cone, k):
    got = enumerate_irreducible(cone, k, PSEUDO_SYMMETRIC)
    assert [s.key for s in got] == [s.key for s in brute(cone, k, PSEUDO_SYMMETRIC)]


def test_parity_and_zero_errors():
    with pytest.raises(ParityMismatchError):
        enumerate_irreducible(orthant(2), (2, 2), SYMMETRIC)
    with pytest.raises(ParityMismatchError):
        enumerate_irreducible(orthant(2), (2, 3), PSEUDO_SYMMETRIC)
    with pytest.raises(KZeroError):
        enumerate_irreducible(orthant(2), (0, 0))


def test_pair_decomposition():
    pd = PairDecomposition.of(orthant(2), (2, 2))
    assert pd.fixed_point == (1, 1)
    assert len(pd.pairs) == 4
    flat = [x for p in pd.pairs for x in p] + [pd.fixed_point]
    assert sorted(flat) == sorted(orthant(2).interval((2, 2)))
    for a, b in pd.pairs:
        assert GRLEX.gt(a, b)
    assert PairDecomposition.of(orthant(2), (2, 3)).fixed_point is None


def test_ei_examples():
    got = ei_set(orthant(2), (2, 3))
    assert {frozenset(s.gaps) for s in got} == {frozenset(g) for g in ex.N2_K23_ROOTS}
    assert not PositionedContext(ex.k115_root(), (11, 5)).b_set
    assert ei_set(orthant(2), (0, 0))[0].is_whole_cone
    assert ei_set(orthant(2), (0, 1)) == []
    assert ei_set(orthant(2), (2, 0)) == []


@pytest.mark.parametrize("cone,k", EVEN + ODD, ids=lambda v: str(v))
def test_ei_roots_are_the_b_empty_members(cone, k):
    want = [s for s in oracle_primary_set(cone, k) if not PositionedContext(s, k).b_set]
    got = ei_set(cone, k)
    assert [s.key for s in got] == [s.key for s in want]
    for s in got:
        assert is_primary_positioned(s, k)
    assert [s.key for s in ei_set(cone, k, GREVLEX)] == [s.key for s in got]
