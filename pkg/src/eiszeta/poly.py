"""Dense exact univariate polynomials, truncated power series and binary forms.

Coefficient sequences are stored in ascending order: index i holds the
coefficient of T^i (or of x0^(n-i) x1^i for binary forms).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import InexactDivision, NonUnitSeries, OrderExceeded
from .exact import as_rational, format_rational

#: Degree of the zero polynomial.  Compares below every integer.
ZERO_DEGREE = -math.inf


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _trim(coeffs: Iterable) -> Tuple[Fraction, ...]:
    out = [as_rational(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _convolve(a: Sequence, b: Sequence, limit: int | None = None) -> list:
    """Cauchy product of coefficient lists, optionally keeping indices < limit."""
    if not a or not b:
        return []
    size = len(a) + len(b) - 1
    if limit is not None:
        size = min(size, limit)
    out = [0] * size
    for i, x in enumerate(a):
        if not x or i >= size:
            continue
        for j in range(min(len(b), size - i)):
            y = b[j]
            if y:
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class UniPoly:
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, c, k: int) -> "UniPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return UniPoly(_convolve(self.coeffs, other.coeffs))
        c = as_rational(other)
        return UniPoly(c * x for x in self.coeffs)

    __rmul__ = __mul__

    def divmod(self, divisor: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        lead = divisor.coeffs[-1]
        if len(rem) - 1 < dd:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lead
            quot[k] = c
            if c:
                for j, dc in enumerate(divisor.coeffs):
                    rem[k + j] -= c * dc
        return UniPoly(quot), UniPoly(rem[:dd])

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InexactDivision(f"nonzero remainder {r}")
        return q

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, doc: Sequence[str]) -> "UniPoly":
        return cls(as_rational(c) for c in doc)

    def __str__(self):
        from .formatting import uni_plain

        return uni_plain(self)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known modulo T^(order+1)."""

    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        c = [as_rational(x) for x in self.coeffs[: self.order + 1]]
        c += [Fraction(0)] * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_poly(cls, p: UniPoly | Sequence, order: int) -> "TruncatedSeries":
        coeffs = p.coeffs if isinstance(p, UniPoly) else tuple(p)
        return cls(order, coeffs)

    def to_poly(self) -> UniPoly:
        return UniPoly(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        return series_coefficient(self, k)

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected TruncatedSeries")
        if other.order != self.order:
            raise ValueError(f"order mismatch {self.order} != {other.order}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = type(self).from_poly([other], self.order)
        self._check(other)
        return type(self)(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return type(self)(self.order, _convolve(self.coeffs, other.coeffs, self.order + 1))
        c = as_rational(other)
        return type(self)(self.order, [c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return series_invert(self) ** (-k)
        result = type(self).from_poly([1], self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": [format_rational(c) for c in self.coeffs]}


def series_coefficient(z: TruncatedSeries, k: int) -> Fraction:
    """[T^k] z."""
    if k < 0:
        raise IndexError("negative index")
    if k > z.order:
        raise OrderExceeded(f"[T^{k}] requested from a series known to order {z.order}")
    return z.coeffs[k]


def series_invert(z: TruncatedSeries) -> TruncatedSeries:
    a = z.coeffs
    if a[0] == 0:
        raise NonUnitSeries("constant term is zero")
    inv0 = 1 / a[0]
    b = [inv0]
    for k in range(1, z.order + 1):
        s = sum((a[j] * b[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
        b.append(-s * inv0)
    return type(z)(z.order, b)


def compose_t_over_one_minus_t(n: UniPoly, order: int) -> TruncatedSeries:
    """Expand n(T/(1-T)) modulo T^(order+1).

    Uses [T^k] (T/(1-T))^j = C(k-1, j-1) for j >= 1.
    """
    out = [n[0]] + [Fraction(0)] * order
    for j in range(1, len(n.coeffs)):
        c = n[j]
        if not c:
            continue
        for k in range(j, order + 1):
            out[k] += c * binomial(k - 1, j - 1)
    return TruncatedSeries(order, out)


@dataclass(frozen=True)
class HomogBivariate:
    """sum_i coeffs[i] * x0^(degree-i) * x1^i."""

    degree: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(as_rational(x) for x in self.coeffs)
        if len(c) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} form needs {self.degree + 1} coefficients, got {len(c)}"
            )
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, degree: int) -> "HomogBivariate":
        return cls(degree, (0,) * (degree + 1))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __mul__(self, other):
        if isinstance(other, HomogBivariate):
            c = _convolve(self.coeffs, other.coeffs)
            return HomogBivariate(self.degree + other.degree, c)
        k = as_rational(other)
        return HomogBivariate(self.degree, [k * a for a in self.coeffs])

    __rmul__ = __mul__

    def __add__(self, other: "HomogBivariate"):
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        return HomogBivariate(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __call__(self, x0, x1):
        n = self.degree
        return sum(c * x0 ** (n - i) * x1**i for i, c in enumerate(self.coeffs) if c)

    def __str__(self):
        from .formatting import bivariate_plain

        return bivariate_plain(self)
