import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conesemi import GREVLEX, GRLEX, LEX, TermOrder, parse_order
from conesemi.cone import vadd
from conesemi.errors import DimensionMismatchError, EmptySetError, ParseError

import worked_examples as ex

ORDERS = [LEX, GRLEX, GREVLEX, TermOrder("weighted", weights=(2, 1), tiebreak="lex"),
          TermOrder("grlex", permutation=(1, 0))]
vec2 = st.tuples(st.integers(0, 20), st.integers(0, 20))


def test_grlex_breaks_degree_ties_lexicographically():
    assert GRLEX.compare((1, 2), (3, 0)) == -1


def test_lex_compares_first_coordinate():
    assert LEX.compare((1, 5), (2, 0)) == -1


@pytest.mark.parametrize("order", ORDERS, ids=str)
def test_zero_is_smaller_than_everything(order):
    assert order.compare((0, 0), (1, 1)) == -1
    assert order.compare((0, 0), (0, 0)) == 0


def test_grevlex_differs_from_grlex():
    # same degree: grevlex prefers the smaller last coordinate as larger
    assert GREVLEX.compare((1, 1, 0), (0, 2, 0)) == 1
    assert GREVLEX.compare((2, 0, 1), (1, 2, 0)) == -1
    assert GRLEX.compare((2, 0, 1), (1, 2, 0)) == 1


def test_max_and_min():
    assert GRLEX.max_of(ex.POSITIONED_GAPS) == (4, 1)
    assert GRLEX.max_of([(2, 1), (4, 4)]) == (4, 4)
    assert LEX.min_of([(3, 3)]) == (3, 3)
    with pytest.raises(EmptySetError):
        GRLEX.max_of([])


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        GRLEX.compare((1, 2), (1, 2, 3))


@pytest.mark.parametrize("text,name", [
    ("lex", "lex"), ("grlex", "grlex"), ("grevlex", "grevlex"),
    ("weighted:1,3:grevlex", "weighted:1,3:grevlex"),
])
def test_parse_round_trip(text, name):
    assert parse_order(text).name == name


@pytest.mark.parametrize("bad", ["revlex", "weighted:1,2", "weighted:a,b:lex", "weighted:0,1:lex"])
def test_parse_rejects(bad):
    with pytest.raises((ParseError, ValueError)):
        parse_order(bad)


@pytest.mark.parametrize("order", ORDERS, ids=str)
@settings(max_examples=200, deadline=None)
@given(x=vec2, y=vec2, z=vec2, w=vec2)
def test_order_axioms(order, x, y, z, w):
    outcomes = [order.lt(x, y), x == y, order.gt(x, y)]
    assert sum(outcomes) == 1
    if order.lt(x, y) and order.lt(y, z):
        assert order.lt(x, z)
    if order.compare(x, y) <= 0:
        assert order.compare(vadd(x, w), vadd(y, w)) <= 0


@pytest.mark.parametrize("order", ORDERS, ids=str)
@settings(max_examples=100, deadline=None)
@given(x=vec2, a=st.integers(0, 5), b=st.integers(0, 5))
def test_cone_order_refines_into_term_order(order, x, a, b):
    cone = ex.DIAG
    c = (a + b, b)  # a(1,0) + b(1,1)
    y = vadd(x, c)
    if cone.lt(x, y):
        assert order.lt(x, y)
