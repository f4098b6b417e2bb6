"""Genus-1 theta constants and the theta map.

Series are expanded in the nome u = exp(pi i tau / 2), so the theta constant
f_a contributes u^(b^2) for every integer b = a mod 2.  In the classical
variable q = exp(2 pi i tau), u^(4k) reads as q^k.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Tuple

from .enumerator import FormalWeightEnumerator
from .exact import check_prime, format_rational, padic_valuation
from .poly import HomogBivariate, TruncatedSeries, _convolve

NOME = "exp(pi*i*tau/2)"


class QSeries(TruncatedSeries):
    def to_json(self) -> dict:
        return {
            "nome": NOME,
            "order": self.order,
            "coefficients": [format_rational(c) for c in self.coeffs],
        }


def theta_constant(a: int, order: int) -> QSeries:
    """f_a = sum over b = a (mod 2) of u^(b^2), truncated at u^order."""
    if a not in (0, 1):
        raise ValueError("characteristic must be 0 or 1")
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [0] * (order + 1)
    b = a
    while b * b <= order:
        coeffs[b * b] += 1 if b == 0 else 2
        b += 2
    return QSeries(order, coeffs)


def th_map(f: FormalWeightEnumerator | HomogBivariate, order: int) -> QSeries:
    """Substitute x0 -> f_0, x1 -> f_1 and expand modulo u^(order+1)."""
    form = f.form if isinstance(f, FormalWeightEnumerator) else f
    n = form.degree
    limit = order + 1
    f0 = [int(c) for c in theta_constant(0, order).coeffs]
    f1 = [int(c) for c in theta_constant(1, order).coeffs]
    # theta powers stay integral; only the final combination is rational
    pow0 = [[1]]
    for _ in range(n):
        pow0.append(_convolve(pow0[-1], f0, limit))
    acc = [Fraction(0)] * limit
    p1 = [1]
    for i, c in enumerate(form.coeffs):
        if i > order:
            break  # x1^i starts at u^i
        if c:
            term = _convolve(pow0[n - i], p1, limit)
            for k, t in enumerate(term):
                if t:
                    acc[k] += c * t
        p1 = _convolve(p1, f1, limit)
    return QSeries(order, acc)


def qseries_p_integrality(s: TruncatedSeries, p: int) -> Tuple[bool, Optional[int]]:
    """(True, None) if every coefficient is p-integral, else (False, first bad index)."""
    check_prime(p)
    for k, c in enumerate(s.coeffs):
        if padic_valuation(c, p) < 0:
            return False, k
    return True, None
