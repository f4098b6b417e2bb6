"""Exact rationals, Gaussian rationals, p-adic valuations and residues.

Rationals are plain :class:`fractions.Fraction` values: always reduced, with a
positive denominator, so equality is structural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .errors import NonPrimeModulus, NotPIntegral

Rational = Fraction
RationalLike = Union[int, Fraction, str]

#: v_p(0)
INFINITY = math.inf

_PRIME_LIMIT = 2**31


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction.

    Floats are refused: nothing in this package is allowed to round.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational string")
        # Fraction() also accepts decimals like "0.5"; keep the wire format strict
        num, _, den = s.partition("/")
        int(num)
        if den:
            int(den)
        return Fraction(s)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    """Serialize as "num/den", dropping the denominator when it is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int):
        raise NonPrimeModulus(f"modulus must be an int, got {p!r}")
    if p >= _PRIME_LIMIT:
        raise NonPrimeModulus(f"moduli are limited to p < 2^31, got {p}")
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    return p


def _int_valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def padic_valuation(x: RationalLike, p: int) -> Union[int, float]:
    """v_p(x); returns INFINITY for x == 0."""
    check_prime(p)
    x = as_rational(x)
    if x == 0:
        return INFINITY
    return _int_valuation(abs(x.numerator), p) - _int_valuation(x.denominator, p)


def is_p_integral(x: RationalLike, p: int) -> bool:
    return padic_valuation(x, p) >= 0


def mod_p_residue(x: RationalLike, p: int) -> int:
    """Image of a p-integral rational in Z/pZ, as an integer in [0, p)."""
    if not is_p_integral(x, p):
        raise NotPIntegral(f"{x} has negative {p}-adic valuation")
    x = as_rational(x)
    return x.numerator * pow(x.denominator, -1, p) % p


@dataclass(frozen=True)
class GaussianRational:
    """An element re + im*i of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re))
        object.__setattr__(self, "im", as_rational(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(as_rational(x))

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, doc: dict) -> "GaussianRational":
        return cls(as_rational(doc["re"]), as_rational(doc["im"]))

    def __repr__(self):
        return f"GaussianRational({format_rational(self.re)}, {format_rational(self.im)})"


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)
