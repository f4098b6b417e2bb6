import cmath
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from eiszeta.enumerator import FormalWeightEnumerator, golay24, hamming8, normalized_eisenstein
from eiszeta.errors import ExcludedPrime, NoMinimumDistance
from eiszeta.poly import UniPoly
from eiszeta.zeta import (
    RationalAngle,
    ZetaPolynomial,
    exact_roots,
    interlace_check,
    lemma_unit_check,
    p_integrality_report,
    rha_check_numeric,
    rha_check_structural,
    zeta_closed_form,
    zeta_expanded_form,
    zeta_via_linear_system,
    zeta_via_series,
)

x0, x1, T = sympy.symbols("x0 x1 T")

P8 = UniPoly((Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)))
P12 = UniPoly(Fraction(c, 15) for c in (-1, -2, -2, 0, 4, 8, 8))


def fwe(*coeffs):
    return FormalWeightEnumerator(len(coeffs) - 1, tuple(coeffs))


def S(x):
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def satisfies_defining_identity(f, poly, q):
    """[T^(n-d)] P(T)/((1-T)(1-qT)) (x0 T + x1 (1-T))^n == (f - x0^n)/(q-1), checked with sympy.

    The kernel is expanded from its closed-form coefficients (q^(k+1)-1)/(q-1).
    """
    n, d = f.degree, f.min_distance
    top = n - d
    q = S(q)
    kernel = sum(((q ** (k + 1) - 1) / (q - 1)) * T**k for k in range(top + 1))
    p = sum(S(c) * T**k for k, c in enumerate(poly.coeffs))
    expr = sympy.expand(p * kernel * (x0 * T + x1 * (1 - T)) ** n)
    lhs = sympy.Poly(expr, T).coeff_monomial(T**top)
    rhs = (sum(S(c) * x0 ** (n - i) * x1**i for i, c in enumerate(f.coeffs)) - x0**n) / (q - 1)
    return sympy.expand(lhs - rhs) == 0


def test_linear_system_examples():
    assert zeta_via_linear_system(normalized_eisenstein(8)).poly == P8
    assert zeta_via_linear_system(fwe(1, 1)).poly == UniPoly((1,))
    assert zeta_via_linear_system(normalized_eisenstein(12)).poly == P12


def test_series_examples():
    assert zeta_via_series(normalized_eisenstein(8)).poly == P8
    assert zeta_via_series(normalized_eisenstein(12)).poly == P12
    assert zeta_via_series(golay24()) == zeta_via_linear_system(golay24())


def test_closed_and_expanded_examples():
    assert zeta_closed_form(8).poly == P8
    assert zeta_closed_form(12).poly == P12
    assert zeta_expanded_form(8).poly == P8
    assert zeta_expanded_form(12).poly == P12
    p16 = zeta_closed_form(16).poly
    assert p16.degree == 10
    assert p16 == zeta_via_series(normalized_eisenstein(16)).poly


@pytest.mark.parametrize("ell", range(8, 61, 4))
def test_expanded_equals_closed(ell):
    assert zeta_expanded_form(ell).poly == zeta_closed_form(ell).poly


@pytest.mark.parametrize("f, q", [
    (normalized_eisenstein(8), 2),
    (normalized_eisenstein(12), 2),
    (normalized_eisenstein(20), 2),
    (hamming8(), 3),
    (golay24(), 2),
    (fwe(1, 0, Fraction(3, 2), Fraction(-1, 7)), Fraction(1, 3)),
])
def test_linear_system_satisfies_identity(f, q):
    z = zeta_via_linear_system(f, q)
    assert z.poly.degree <= f.degree - f.min_distance
    assert satisfies_defining_identity(f, z.poly, q)


def test_identity_oracle_rejects_wrong_answer():
    assert not satisfies_defining_identity(normalized_eisenstein(8), P8 * 2, 2)


@st.composite
def enumerators(draw, max_degree=12):
    n = draw(st.integers(1, max_degree))
    d = draw(st.integers(1, n))
    tail = draw(st.lists(st.builds(Fraction, st.integers(-40, 40), st.integers(1, 9)),
                         min_size=n - d + 1, max_size=n - d + 1))
    if tail[0] == 0:
        tail[0] = Fraction(1)
    return FormalWeightEnumerator(n, (Fraction(1),) + (Fraction(0),) * (d - 1) + tuple(tail))


qs = st.sampled_from([Fraction(2), Fraction(3), Fraction(4), Fraction(1, 2), Fraction(-1), Fraction(5, 3)])


@settings(max_examples=60, deadline=None)
@given(enumerators(), qs)
def test_routes_agree_on_random_enumerators(f, q):
    a = zeta_via_linear_system(f, q)
    b = zeta_via_series(f, q)
    assert a == b
    assert a.poly.degree <= f.degree - f.min_distance


@settings(max_examples=15, deadline=None)
@given(enumerators(max_degree=7), qs)
def test_random_enumerators_satisfy_identity(f, q):
    assert satisfies_defining_identity(f, zeta_via_linear_system(f, q).poly, q)


def test_zeta_requires_minimum_distance():
    with pytest.raises(NoMinimumDistance):
        zeta_via_linear_system(fwe(1, 0, 0))
    with pytest.raises(ValueError):
        zeta_via_series(hamming8(), 1)


# -- roots ---------------------------------------------------------------

def test_exact_roots_examples():
    r8 = exact_roots(8)
    assert r8.angles == (RationalAngle(Fraction(3, 4)), RationalAngle(Fraction(5, 4)))
    assert r8.modulus_squared == Fraction(1, 2)
    r12 = [a.turns for a in exact_roots(12).angles]
    assert r12 == [0, Fraction(1, 2), Fraction(3, 4), 1, Fraction(5, 4), Fraction(3, 2)]


@pytest.mark.parametrize("ell", [8, 12, 16, 20, 28, 36])
def test_exact_roots_are_roots(ell):
    """Evaluate P_ell at 2^(-1/2) exp(i angle) at high precision."""
    poly = zeta_closed_form(ell).poly
    angles = exact_roots(ell).angles
    assert len(angles) == ell - 6 == poly.degree
    with mpmath.workdps(50):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in poly.coeffs]
        r = 1 / mpmath.sqrt(2)
        for a in angles:
            z = r * mpmath.expjpi(mpmath.mpf(a.turns.numerator) / a.turns.denominator)
            val = mpmath.fsum(c * z**k for k, c in enumerate(coeffs))
            assert abs(val) < mpmath.mpf(10) ** -40


def test_rational_angle_canonical():
    assert RationalAngle(Fraction(-1, 4)) == RationalAngle(Fraction(7, 4))
    assert RationalAngle(2) == RationalAngle(0)
    assert str(RationalAngle(Fraction(3, 4))) == "3pi/4"
    assert sorted([RationalAngle(Fraction(3, 2)), RationalAngle(Fraction(1, 3))])[0].turns == Fraction(1, 3)


@pytest.mark.parametrize("ell", range(8, 61, 4))
def test_rha_structural(ell):
    assert rha_check_structural(ell)


def test_rha_numeric_examples():
    rep = rha_check_numeric(zeta_closed_form(8), 1e-9)
    assert rep.verdict and rep.max_deviation <= 1e-12
    want = sorted([complex(-0.5, 0.5), complex(-0.5, -0.5)], key=lambda z: z.imag)
    got = sorted(rep.roots, key=lambda z: z.imag)
    assert all(abs(a - b) < 1e-12 for a, b in zip(got, want))

    const = rha_check_numeric(ZetaPolynomial(UniPoly((3,)), Fraction(2), 1, 1), 1e-9)
    assert const.verdict and const.deviations == ()

    linear = rha_check_numeric(ZetaPolynomial(UniPoly((1, -2)), Fraction(2), 2, 1), 1e-9)
    assert not linear.verdict
    assert abs(linear.max_deviation - (1 / math.sqrt(2) - 0.5)) < 1e-12


def test_rha_numeric_agrees_with_numpy():
    poly = zeta_closed_form(24).poly
    roots = np.roots([float(c) for c in reversed(poly.coeffs)])
    assert np.allclose(np.abs(roots), 2**-0.5, atol=1e-8)
    rep = rha_check_numeric(zeta_closed_form(24))
    assert rep.verdict and len(rep.deviations) == len(roots)


# -- interlacing --------------------------------------------------------------

def float_arc_coverage(ell):
    """Oracle: float root angles from numpy, arc coverage with a margin."""
    def angles(e):
        p = zeta_closed_form(e).poly
        r = np.roots([float(c) for c in reversed(p.coeffs)])
        return sorted(cmath.phase(z) % (2 * math.pi) for z in r)

    lo, hi = angles(ell), angles(ell + 4)
    counts = []
    for k, a in enumerate(lo):
        b = lo[(k + 1) % len(lo)]
        eps = 1e-6
        if a < b:
            inside = [t for t in hi if a + eps < t < b - eps]
        else:
            inside = [t for t in hi if t > a + eps or t < b - eps]
        counts.append(len(inside))
    return counts


def test_interlace_examples():
    r8 = interlace_check(8)
    assert [a.turns for a in r8.common_angles] == [Fraction(3, 4), Fraction(5, 4)]
    assert r8.arcs_covered
    r12 = interlace_check(12)
    assert len(r12.per_arc_counts) == 6 and r12.arcs_covered
    assert sum(r12.per_arc_counts) + len(r12.common_angles) == 10


@pytest.mark.parametrize("ell", [8, 12, 16, 20, 24])
def test_interlace_matches_float_oracle(ell):
    assert list(interlace_check(ell).per_arc_counts) == float_arc_coverage(ell)


@pytest.mark.parametrize("ell", range(8, 57, 4))
def test_interlace_predicate(ell):
    assert interlace_check(ell).arcs_covered


# -- p-integrality ------------------------------------------------------------

def test_p_integrality_examples():
    r8 = p_integrality_report(zeta_closed_form(8))
    assert r8.valuations == {5: -1} and r8.violating == {5}
    r12 = p_integrality_report(zeta_closed_form(12))
    assert r12.valuations == {3: -1, 5: -1}
    assert 7 not in r12.violating
    assert p_integrality_report(UniPoly((1,))).valuations == {}


@pytest.mark.parametrize("ell", [16, 24, 44, 60])
def test_p_integrality_primes_match_factorint(ell):
    poly = zeta_closed_form(ell).poly
    den = math.lcm(*(c.denominator for c in poly.coeffs))
    assert set(p_integrality_report(poly).valuations) == set(sympy.factorint(den))


def test_lemma_examples():
    c7 = lemma_unit_check(7)
    assert (c7.residue, c7.identity_holds) == (1, True)
    assert (-3 * 2**4) % 7 == 1
    c13 = lemma_unit_check(13)
    assert (c13.residue, c13.identity_holds) == (11, True)
    assert 5120 % 13 == 11
    for p in (3, 5):
        with pytest.raises(ExcludedPrime):
            lemma_unit_check(p)
    assert ((-1) ** 2 + 2**2) % 5 == 0


@pytest.mark.parametrize("p", list(sympy.primerange(7, 98)))
def test_lemma_residue_against_big_integers(p):
    ell = 2 * (p - 1)
    direct = ((-1) ** (ell // 4) + 2 ** ((ell - 4) // 2)) % p
    c = lemma_unit_check(p)
    assert c.residue == direct != 0
    assert c.verdict
