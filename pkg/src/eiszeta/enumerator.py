"""Formal weight enumerators and the Eisenstein polynomials of H1."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Dict, Optional, Union

from .errors import (
    InvariantViolation,
    NoLeadingTerm,
    NoMinimumDistance,
    SchemaError,
    UnsupportedDegree,
)
from .exact import as_rational, format_rational
from .poly import HomogBivariate, UniPoly, binomial

DEFAULT_Q = Fraction(2)


class _ZeroPolynomial:
    """Returned by normalize() for the zero form."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __bool__(self):
        return False


ZERO_POLYNOMIAL = _ZeroPolynomial()


@dataclass(frozen=True)
class FormalWeightEnumerator:
    """Binary form with x0^n coefficient 1.

    ``min_distance`` is derived from the coefficients and is None only for
    x0^n, where the minimum distance is undefined.
    """

    degree: int
    coeffs: tuple

    def __post_init__(self):
        form = HomogBivariate(self.degree, self.coeffs)
        if form.coeffs[0] != 1:
            raise InvariantViolation(f"x0^n coefficient is {form.coeffs[0]}, expected 1")
        object.__setattr__(self, "coeffs", form.coeffs)

    @property
    def form(self) -> HomogBivariate:
        return HomogBivariate(self.degree, self.coeffs)

    @property
    def min_distance(self) -> Optional[int]:
        for i in range(1, self.degree + 1):
            if self.coeffs[i]:
                return i
        return None

    def __str__(self):
        return str(self.form)


def check_ell(ell: int):
    if isinstance(ell, bool) or not isinstance(ell, int) or ell % 4 or ell < 8:
        raise UnsupportedDegree(f"ell must be a multiple of 4 with ell >= 8, got {ell!r}")


def eisenstein_scale(ell: int) -> int:
    """(-1)^(ell/4) + 2^((ell-4)/2): the x0^ell coefficient of the closed form."""
    return (-1) ** (ell // 4) + 2 ** ((ell - 4) // 2)


def eisenstein_closed_form(ell: int) -> HomogBivariate:
    check_ell(ell)
    sign = (-1) ** (ell // 4)
    coeffs = [0] * (ell + 1)
    coeffs[0] = coeffs[ell] = eisenstein_scale(ell)
    for j in range(4, ell, 4):
        coeffs[j] = sign * binomial(ell, j)
    return HomogBivariate(ell, coeffs)


def normalize(raw: HomogBivariate) -> Union[FormalWeightEnumerator, _ZeroPolynomial]:
    if raw.is_zero():
        return ZERO_POLYNOMIAL
    lead = raw.coeffs[0]
    if lead == 0:
        raise NoLeadingTerm("x0^n coefficient vanishes on a nonzero form")
    return FormalWeightEnumerator(raw.degree, tuple(c / lead for c in raw.coeffs))


def normalized_eisenstein(ell: int) -> FormalWeightEnumerator:
    return normalize(eisenstein_closed_form(ell))


def min_distance(f: FormalWeightEnumerator) -> int:
    d = f.min_distance
    if d is None:
        raise NoMinimumDistance(f"{f} has no nonzero A_i with i >= 1")
    return d


def normalized_weight_enumerator(f: FormalWeightEnumerator, q=DEFAULT_Q) -> UniPoly:
    """N_f(t) = 1/(q-1) * sum_{i>=d} A_i / C(n, i) * t^(i-d)."""
    q = as_rational(q)
    if q == 1:
        raise ValueError("q must differ from 1")
    d = min_distance(f)
    n = f.degree
    return UniPoly(f.coeffs[i] / binomial(n, i) / (q - 1) for i in range(d, n + 1))


# -- JSON documents --------------------------------------------------------

def store_enumerator(f: FormalWeightEnumerator, name: Optional[str] = None) -> dict:
    doc = {"degree": f.degree, "coefficients": [format_rational(c) for c in f.coeffs]}
    if name is not None:
        doc["name"] = name
    return doc


def load_enumerator(document) -> FormalWeightEnumerator:
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise SchemaError("enumerator document must be a JSON object")
    degree = document.get("degree")
    coeffs = document.get("coefficients")
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 0:
        raise SchemaError(f"'degree' must be a nonnegative integer, got {degree!r}")
    if not isinstance(coeffs, list) or not all(isinstance(c, str) for c in coeffs):
        raise SchemaError("'coefficients' must be a list of rational strings")
    if len(coeffs) != degree + 1:
        raise SchemaError(f"expected {degree + 1} coefficients, got {len(coeffs)}")
    try:
        values = tuple(as_rational(c) for c in coeffs)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational: {exc}") from exc
    return FormalWeightEnumerator(degree, values)


def read_enumerator(path: Union[str, Path]) -> FormalWeightEnumerator:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    return load_enumerator(text)


def bundled_corpus_dir() -> Path:
    return Path(str(resources.files("eiszeta") / "corpus"))


def load_corpus(directory: Union[str, Path, None] = None) -> Dict[str, FormalWeightEnumerator]:
    """Load every *.json enumerator in a directory, keyed by file stem."""
    directory = Path(directory) if directory is not None else bundled_corpus_dir()
    if not directory.is_dir():
        raise SchemaError(f"corpus directory {directory} does not exist")
    out = {}
    for path in sorted(directory.glob("*.json")):
        try:
            out[path.stem] = read_enumerator(path)
        except (SchemaError, InvariantViolation) as exc:
            raise type(exc)(f"{path.name}: {exc}") from exc
    return out


def hamming8() -> FormalWeightEnumerator:
    """Extended Hamming [8,4,4] code."""
    c = [0] * 9
    c[0], c[4], c[8] = 1, 14, 1
    return FormalWeightEnumerator(8, tuple(c))


def golay24() -> FormalWeightEnumerator:
    """Extended binary Golay [24,12,8] code."""
    c = [0] * 25
    c[0], c[8], c[12], c[16], c[24] = 1, 759, 2576, 759, 1
    return FormalWeightEnumerator(24, tuple(c))
