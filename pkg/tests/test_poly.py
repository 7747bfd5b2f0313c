"""Dense rational polynomial arithmetic, checked against sympy."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from hodgemoments.poly import (
    RemainderNonzero,
    coeff,
    degree,
    normalize,
    one_minus,
    poly_add,
    poly_div_exact,
    poly_mul,
    poly_sub,
)

t = sympy.symbols("t")

small_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=7)


def to_sympy(f):
    return sympy.Poly(list(reversed([sympy.Rational(c) for c in f])) or [0], t)


def test_normalize_strips_trailing_zeros():
    assert normalize([1, 2, 0, 0]) == [Fraction(1), Fraction(2)]
    assert normalize([0, 0]) == []
    assert normalize([]) == []


def test_degree_of_zero_is_minus_one():
    assert degree([]) == -1
    assert degree(normalize([0, 0])) == -1
    assert degree([0, 0, 5]) == 2


def test_one_minus():
    assert one_minus(3) == [1, 0, 0, -1]
    assert coeff(one_minus(1), 0) == 1
    assert coeff(one_minus(1), 1) == -1


def test_coeff_out_of_range_is_zero():
    assert coeff([1, 2], 5) == 0
    assert coeff([], 0) == 0


@given(small_polys, small_polys)
def test_mul_matches_sympy(f, g):
    got = to_sympy(poly_mul(f, g))
    assert got == to_sympy(f) * to_sympy(g)


@given(small_polys, small_polys)
def test_add_sub_roundtrip(f, g):
    assert normalize(poly_sub(poly_add(f, g), g)) == normalize(f)


@given(small_polys, small_polys)
def test_div_exact_recovers_factor(f, g):
    if not normalize(g):
        return
    prod = poly_mul(f, g)
    assert poly_div_exact(prod, g) == normalize(f)


def test_div_exact_rejects_remainder():
    with pytest.raises(RemainderNonzero):
        poly_div_exact([1, 1, 1], [1, 1])  # (t^2 + t + 1) / (t + 1)


def test_div_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        poly_div_exact([1], [])
