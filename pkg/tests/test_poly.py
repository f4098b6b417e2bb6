from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from eiszeta.errors import InexactDivision, NonUnitSeries, OrderExceeded
from eiszeta.poly import (
    ZERO_DEGREE,
    HomogBivariate,
    TruncatedSeries,
    UniPoly,
    binomial,
    compose_t_over_one_minus_t,
    series_coefficient,
    series_invert,
)

T = sympy.Symbol("T")


def sympy_series(expr, order):
    """Coefficients of expr's Taylor expansion at T=0 up to T^order (independent oracle)."""
    s = sympy.series(expr, T, 0, order + 1).removeO()
    poly = sympy.Poly(s, T)
    return [Fraction(str(poly.coeff_monomial(T**k))) for k in range(order + 1)]


def test_coefficient_of_kernel():
    # 1/((1-T)(1-2T)) has coefficients 2^(k+1) - 1
    z = series_invert(TruncatedSeries(4, (1, -3, 2)))
    assert series_coefficient(z, 2) == 7
    assert list(z.coeffs) == [2 ** (k + 1) - 1 for k in range(5)]


def test_coefficient_examples():
    assert series_coefficient(TruncatedSeries(3, (1, 5, -2)), 0) == 1
    geo = series_invert(TruncatedSeries(5, (1, -1)))
    assert series_coefficient(geo, 3) == 1
    with pytest.raises(OrderExceeded):
        series_coefficient(geo, 6)


def test_invert_examples():
    assert series_invert(TruncatedSeries(2, (1, -1))).coeffs == (1, 1, 1)
    inv = series_invert(TruncatedSeries(4, (1, -2, 2)))
    assert list(inv.coeffs) == sympy_series(1 / (1 - 2 * T + 2 * T**2), 4)
    assert list(inv.coeffs) == [1, 2, 2, 0, -4]
    assert (inv * TruncatedSeries(4, (1, -2, 2))).coeffs == (1, 0, 0, 0, 0)
    assert series_invert(TruncatedSeries(3, (5,))).coeffs == (Fraction(1, 5), 0, 0, 0)
    with pytest.raises(NonUnitSeries):
        series_invert(TruncatedSeries(3, (0, 1)))


def test_compose_examples():
    t = UniPoly((0, 1))
    assert compose_t_over_one_minus_t(t, 3).coeffs == (0, 1, 1, 1)
    n = UniPoly((Fraction(1, 5), 0, 0, 0, 1))
    assert list(compose_t_over_one_minus_t(n, 8).coeffs) == [Fraction(1, 5), 0, 0, 0, 1, 4, 10, 20, 35]
    assert compose_t_over_one_minus_t(UniPoly((7,)), 4).coeffs == (7, 0, 0, 0, 0)


def test_compose_against_sympy():
    n = UniPoly((Fraction(-1, 15), 0, 3, 0, Fraction(-1, 15), 0, 0, 0, 1))
    expr = sum(sympy.Rational(c.numerator, c.denominator) * (T / (1 - T)) ** k for k, c in enumerate(n.coeffs))
    assert list(compose_t_over_one_minus_t(n, 10).coeffs) == sympy_series(expr, 10)


def test_binomial_examples():
    assert binomial(8, 4) == 70
    assert binomial(12, 4) == 495
    assert binomial(9, 0) == 1
    assert binomial(5, -1) == 0 and binomial(5, 6) == 0


def test_zero_polynomial_degree_marker():
    assert UniPoly().degree == ZERO_DEGREE
    assert UniPoly((0, 0)).is_zero()
    assert UniPoly((0, 0)).degree < 0
    assert UniPoly((1, 2, 0)).degree == 1


def test_exact_division():
    num = UniPoly((1, 0, 0, 0, 4))
    assert num.exact_div(UniPoly((1, -2, 2))) == UniPoly((1, 2, 2))
    with pytest.raises(InexactDivision):
        UniPoly((1, 0, 0, 1)).exact_div(UniPoly((1, -2, 2)))


def test_homog_bivariate_shape():
    with pytest.raises(ValueError):
        HomogBivariate(3, (1, 0, 1))
    f = HomogBivariate(2, (1, 0, 1))
    g = HomogBivariate(1, (1, 1))
    assert (f * g).coeffs == (1, 1, 1, 1)
    assert f(2, 3) == 13


small = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))
coeff_lists = st.lists(small, min_size=1, max_size=8)


@given(coeff_lists, st.integers(0, 8))
def test_inverse_property(coeffs, order):
    if coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    z = TruncatedSeries(order, coeffs)
    one = (z * series_invert(z)).coeffs
    assert one == (1,) + (0,) * order


@given(coeff_lists, coeff_lists, small, small, st.integers(0, 9))
def test_compose_linear(a, b, x, y, order):
    pa, pb = UniPoly(a), UniPoly(b)
    lhs = compose_t_over_one_minus_t(pa * x + pb * y, order)
    rhs = compose_t_over_one_minus_t(pa, order) * x + compose_t_over_one_minus_t(pb, order) * y
    assert lhs == rhs


@given(coeff_lists, coeff_lists, st.integers(0, 12))
def test_poly_product_matches_series_product(a, b, order):
    prod = UniPoly(a) * UniPoly(b)
    series = TruncatedSeries(order, a) * TruncatedSeries(order, b)
    assert series.coeffs == tuple(prod[k] for k in range(order + 1))
