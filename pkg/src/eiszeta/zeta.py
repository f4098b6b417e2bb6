"""Duursma zeta polynomials.

Three independent routes compute P_f(T):

* :func:`zeta_via_linear_system` solves the defining coefficient identity
  directly and is treated as the reference;
* :func:`zeta_via_series` goes through the normalized weight enumerator;
* :func:`zeta_closed_form` / :func:`zeta_expanded_form` apply only to the
  normalized Eisenstein polynomials of H1.

Roots of the Eisenstein-family zeta polynomials are 2^(-1/2) times roots of
unity, so their arguments are handled as exact rational multiples of pi.
"""
from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Set, Tuple

import mpmath
import sympy

from .enumerator import (
    DEFAULT_Q,
    FormalWeightEnumerator,
    check_ell,
    eisenstein_scale,
    min_distance,
    normalized_eisenstein,
    normalized_weight_enumerator,
)
from .errors import (
    ExcludedPrime,
    ExclusionMismatch,
    NonConvergence,
    SingularSystem,
    UnitCheckFailed,
)
from .exact import as_rational, check_prime, format_rational, padic_valuation
from .poly import (
    TruncatedSeries,
    UniPoly,
    binomial,
    compose_t_over_one_minus_t,
    series_invert,
)


@dataclass(frozen=True)
class ZetaPolynomial:
    poly: UniPoly
    q: Fraction
    source_degree: int
    source_min_distance: int

    def __post_init__(self):
        bound = self.source_degree - self.source_min_distance
        if self.poly.degree > bound:
            raise ValueError(f"zeta polynomial degree {self.poly.degree} exceeds n-d = {bound}")

    @property
    def coeffs(self):
        return self.poly.coeffs

    def __str__(self):
        return str(self.poly)


def _q(q) -> Fraction:
    q = as_rational(q)
    if q == 1:
        raise ValueError("q must differ from 1")
    return q


def _kernel_series(q: Fraction, order: int) -> TruncatedSeries:
    """1/((1-T)(1-qT)) to the given order."""
    return series_invert(TruncatedSeries(order, (1, -1 - q, q)))


# -- route 1: the defining identity as a linear system ----------------------

def _lcm_denominators(row) -> int:
    m = 1
    for x in row:
        m = math.lcm(m, x.denominator)
    return m


def _fraction_free_solve(rows: List[List[int]], ncols: int) -> List[Fraction]:
    """Solve an overdetermined integer system [A | b] by Bareiss elimination.

    Raises SingularSystem unless A has full column rank and b lies in its span.
    """
    m = [r[:] for r in rows]
    nrows = len(m)
    prev = 1
    for c in range(ncols):
        piv = next((k for k in range(c, nrows) if m[k][c]), None)
        if piv is None:
            raise SingularSystem(f"rank deficient at column {c}")
        m[c], m[piv] = m[piv], m[c]
        pc = m[c]
        for k in range(c + 1, nrows):
            rk = m[k]
            a = rk[c]
            for j in range(c + 1, ncols + 1):
                rk[j] = (pc[c] * rk[j] - a * pc[j]) // prev
            rk[c] = 0
        prev = pc[c]
    for k in range(ncols, nrows):
        if m[k][ncols]:
            raise SingularSystem("inconsistent system: nonzero residual row")
    x = [Fraction(0)] * ncols
    for c in range(ncols - 1, -1, -1):
        s = m[c][ncols] - sum(m[c][j] * x[j] for j in range(c + 1, ncols))
        x[c] = Fraction(s) / m[c][c]
    return x


def zeta_via_linear_system(f: FormalWeightEnumerator, q=DEFAULT_Q) -> ZetaPolynomial:
    """Solve [T^(n-d)] P(T)/((1-T)(1-qT)) (x0 T + x1 (1-T))^n = (f - x0^n)/(q-1).

    Comparing coefficients of x0^(n-i) x1^i gives, for each i,
    C(n,i) [T^(i-d)] P(T) Z(T) (1-T)^i = (A_i - [i=0]) / (q-1), with Z the
    kernel 1/((1-T)(1-qT)); one equation per i, n-d+1 unknowns.
    """
    q = _q(q)
    n, d = f.degree, min_distance(f)
    width = n - d + 1
    kernel = _kernel_series(q, n - d)
    rows = []
    for i in range(n + 1):
        window = i - d
        rhs = (f.coeffs[i] - (1 if i == 0 else 0)) / (q - 1)
        row = [Fraction(0)] * (width + 1)
        row[width] = rhs
        if window >= 0:
            one_minus = TruncatedSeries(n - d, [(-1) ** k * binomial(i, k) for k in range(i + 1)])
            w = (kernel * one_minus).coeffs
            c = binomial(n, i)
            for j in range(window + 1):
                row[j] = c * w[window - j]
        scale = _lcm_denominators(row)
        rows.append([int(x * scale) for x in row])
    coeffs = _fraction_free_solve(rows, width)
    return ZetaPolynomial(UniPoly(coeffs), q, n, d)


# -- route 2: normalized weight enumerator ----------------------------------

def zeta_via_series(f: FormalWeightEnumerator, q=DEFAULT_Q) -> ZetaPolynomial:
    """P(T) = N_f(T/(1-T)) (1-T)(1-qT) / (1-T)^(d+1)  mod T^(n-d+1)."""
    q = _q(q)
    n, d = f.degree, min_distance(f)
    order = n - d
    nf = normalized_weight_enumerator(f, q)
    s = compose_t_over_one_minus_t(nf, order)
    s = s * TruncatedSeries(order, (1, -1 - q, q))
    denom = TruncatedSeries(order, [(-1) ** k * binomial(d + 1, k) for k in range(d + 2)])
    s = s * series_invert(denom)
    return ZetaPolynomial(s.to_poly(), q, n, d)


# -- route 3: the Eisenstein family -----------------------------------------

_QUADRATIC = UniPoly((1, -2, 2))


def zeta_numerator(ell: int) -> UniPoly:
    """(-1)^(ell/4) + 2^((ell-4)/2) T^(ell-4)."""
    check_ell(ell)
    m = ell - 4
    return UniPoly.constant((-1) ** (ell // 4)) + UniPoly.monomial(2 ** (m // 2), m)


def zeta_closed_form(ell: int) -> ZetaPolynomial:
    poly = zeta_numerator(ell).exact_div(_QUADRATIC) * Fraction(1, eisenstein_scale(ell))
    return ZetaPolynomial(poly, DEFAULT_Q, ell, 4)


def zeta_expanded_form(ell: int) -> ZetaPolynomial:
    check_ell(ell)
    m = ell // 4
    coeffs = [Fraction(0)] * (ell - 3)
    for i in range(1, m):
        sign = (-1) ** (i - 1) if m % 2 == 0 else (-1) ** i
        base = 4 * (i - 1)
        c = sign * 4 ** (i - 1)
        coeffs[base] += c
        coeffs[base + 1] += 2 * c
        coeffs[base + 2] += 2 * c
    poly = UniPoly(coeffs) * Fraction(1, eisenstein_scale(ell))
    return ZetaPolynomial(poly, DEFAULT_Q, ell, 4)


def eisenstein_zeta(ell: int, q=DEFAULT_Q) -> ZetaPolynomial:
    return zeta_via_series(normalized_eisenstein(ell), q)


# -- exact root structure ---------------------------------------------------

@dataclass(frozen=True, order=True)
class RationalAngle:
    """The angle turns*pi, with turns reduced into [0, 2)."""

    turns: Fraction

    def __post_init__(self):
        object.__setattr__(self, "turns", as_rational(self.turns) % 2)

    def __str__(self):
        t = self.turns
        if t == 0:
            return "0"
        num = "" if t.numerator == 1 else str(t.numerator)
        s = f"{num}pi"
        return s if t.denominator == 1 else f"{s}/{t.denominator}"

    def to_json(self) -> str:
        return format_rational(self.turns)

    def to_float(self) -> float:
        return float(self.turns) * math.pi


@dataclass(frozen=True)
class ExactRoots:
    modulus_squared: Fraction
    angles: Tuple[RationalAngle, ...]

    @property
    def modulus(self) -> str:
        return "2^(-1/2)"


_QUADRATIC_ANGLES = (RationalAngle(Fraction(1, 4)), RationalAngle(Fraction(-1, 4)))


def exact_roots(ell: int) -> ExactRoots:
    """Arguments of the roots of P_ell, all of modulus 2^(-1/2).

    With m = ell-4 the numerator vanishes where T^m = -(-1)^(ell/4) 2^(-m/2):
    arguments 2*pi*k/m when ell = 4 mod 8, pi*(2k+1)/m when ell = 0 mod 8.
    The roots (1 +- i)/2 of 1 - 2T + 2T^2 (arguments +-pi/4) are removed.
    """
    check_ell(ell)
    m = ell - 4
    if ell % 8 == 4:
        angles = {RationalAngle(Fraction(2 * k, m)) for k in range(m)}
    else:
        angles = {RationalAngle(Fraction(2 * k + 1, m)) for k in range(m)}
    for a in _QUADRATIC_ANGLES:
        if a not in angles:
            raise ExclusionMismatch(f"{a} is not a numerator root angle for ell={ell}")
        angles.discard(a)
    return ExactRoots(Fraction(1, 2), tuple(sorted(angles)))


def rha_check_structural(ell: int) -> bool:
    """Check scale * (1-2T+2T^2) * P_ell == numerator exactly, P_ell via the series route.

    Every root of the numerator has |T|^(ell-4) = 2^(-(ell-4)/2), so the
    identity places all roots of P_ell on |T| = 2^(-1/2).
    """
    p = eisenstein_zeta(ell).poly
    return p * _QUADRATIC * eisenstein_scale(ell) == zeta_numerator(ell)


@dataclass(frozen=True)
class RootReport:
    method: str
    deviations: Tuple[float, ...]
    verdict: bool
    roots: Tuple[complex, ...] = ()
    backward_error: float = 0.0

    @property
    def max_deviation(self) -> float:
        return max(self.deviations, default=0.0)


def rha_check_numeric(p: ZetaPolynomial, tolerance: float = 1e-9, dps: int = 30) -> RootReport:
    """Numerically locate every root and compare |root| with 1/sqrt(q).

    ``dps`` is the mpmath working precision in decimal digits (30 digits is
    roughly 100 bits of mantissa).
    """
    poly = p.poly
    if poly.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    if poly.degree < 1:
        return RootReport("numeric", (), True)
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(poly.coeffs)]
        try:
            roots, err = mpmath.polyroots(
                coeffs, maxsteps=50 + 10 * poly.degree, extraprec=4 * dps, error=True
            )
        except mpmath.libmp.NoConvergence as exc:
            raise NonConvergence(str(exc)) from exc
        if err > tolerance * 1e-3:
            raise NonConvergence(f"root finder error estimate {err} too large for tolerance {tolerance}")
        target = 1 / mpmath.sqrt(mpmath.mpf(p.q.numerator) / p.q.denominator)
        devs = tuple(float(abs(abs(r) - target)) for r in roots)
        return RootReport(
            "numeric",
            devs,
            max(devs) <= tolerance,
            tuple(complex(r) for r in roots),
            float(err),
        )


# -- interlacing -------------------------------------------------------------

@dataclass(frozen=True)
class InterlaceReport:
    ell: int
    common_angles: Tuple[RationalAngle, ...]
    arcs: Tuple[Tuple[RationalAngle, RationalAngle], ...]
    per_arc_counts: Tuple[int, ...]

    @property
    def arcs_covered(self) -> bool:
        return all(c >= 1 for c in self.per_arc_counts)


def _count_open_arc(lo: Fraction, hi: Fraction, points: List[Fraction]) -> int:
    """Points strictly inside the circular arc from lo counterclockwise to hi."""
    if lo < hi:
        return bisect_left(points, hi) - bisect_right(points, lo)
    # wraps through 0
    return (len(points) - bisect_right(points, lo)) + bisect_left(points, hi)


def interlace_check(ell: int) -> InterlaceReport:
    """Does every open arc between consecutive zeros of P_ell hold a zero of P_(ell+4)?"""
    lower = exact_roots(ell).angles
    upper = exact_roots(ell + 4).angles
    pts = sorted(a.turns for a in upper)
    arcs, counts = [], []
    for k, a in enumerate(lower):
        b = lower[(k + 1) % len(lower)]
        arcs.append((a, b))
        counts.append(_count_open_arc(a.turns, b.turns, pts))
    common = tuple(sorted(set(lower) & set(upper)))
    return InterlaceReport(ell, common, tuple(arcs), tuple(counts))


# -- p-integrality -----------------------------------------------------------

@dataclass(frozen=True)
class IntegralityReport:
    valuations: Dict[int, int]
    violating: frozenset

    def to_json(self) -> dict:
        return {str(p): v for p, v in sorted(self.valuations.items())}


def p_integrality_report(p: ZetaPolynomial | UniPoly) -> IntegralityReport:
    """Minimum valuation of the coefficients at every prime dividing a denominator."""
    poly = p.poly if isinstance(p, ZetaPolynomial) else p
    primes: Set[int] = set()
    for c in poly.coeffs:
        if c.denominator > 1:
            primes.update(int(r) for r in sympy.factorint(c.denominator))
    vals = {}
    for r in sorted(primes):
        vals[r] = min(_valuation_unchecked(c, r) for c in poly.coeffs if c)
    return IntegralityReport(vals, frozenset(r for r, v in vals.items() if v < 0))


def _valuation_unchecked(x: Fraction, p: int) -> int:
    # primes from factorint may exceed the 2^31 bound check_prime enforces
    def v(n):
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        return k

    return v(abs(x.numerator)) - v(x.denominator)


def min_valuation(poly: UniPoly, p: int):
    return min((padic_valuation(c, p) for c in poly.coeffs), default=math.inf)


@dataclass(frozen=True)
class LemmaCheck:
    p: int
    ell: int
    residue: int
    multiplier: int
    identity_holds: bool
    factor_nonzero: bool

    @property
    def verdict(self) -> bool:
        return self.residue != 0 and self.identity_holds and self.factor_nonzero


def lemma_residue(p: int) -> int:
    """((-1)^(l/4) + 2^((l-4)/2)) mod p with l = 2(p-1), for any odd prime p."""
    ell = 2 * (p - 1)
    sign = 1 if (ell // 4) % 2 == 0 else -1
    return (sign + pow(2, (ell - 4) // 2, p)) % p


def lemma_unit_check(p: int) -> LemmaCheck:
    """Unit check for l = 2(p-1), plus the two Fermat congruences.

    For p = 3 mod 4 the quantity is -1 + 2^(p-3), congruent to -3 * 2^(p-3);
    for p = 1 mod 4 it is 1 + 2^(p-3), congruent to 5 * 2^(p-3).
    """
    check_prime(p)
    if p in (2, 3, 5):
        raise ExcludedPrime(f"p = {p} is excluded")
    ell = 2 * (p - 1)
    r = lemma_residue(p)
    k = -3 if p % 4 == 3 else 5
    predicted = k * pow(2, p - 3, p) % p
    out = LemmaCheck(p, ell, r, k, r == predicted, k % p != 0)
    if r == 0:
        raise UnitCheckFailed(f"residue vanishes mod {p}")
    return out
