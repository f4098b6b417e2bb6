"""Finite 2x2 unitary matrix groups over Q(i) and Reynolds averaging.

Action convention: a matrix acts on the column vector (x0, x1)^t, so the
image of x0 under sigma is the linear form sigma[0][0]*x0 + sigma[0][1]*x1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import CapExceeded, NonRealResult
from .exact import ONE, ZERO, GaussianRational, I
from .poly import HomogBivariate, binomial

G = GaussianRational


@dataclass(frozen=True)
class UnitaryMatrix2:
    entries: Tuple[Tuple[GaussianRational, GaussianRational], Tuple[GaussianRational, GaussianRational]]

    def __post_init__(self):
        rows = tuple(tuple(G.coerce(x) for x in row) for row in self.entries)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("expected a 2x2 matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls) -> "UnitaryMatrix2":
        return cls(((ONE, ZERO), (ZERO, ONE)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "UnitaryMatrix2") -> "UnitaryMatrix2":
        a, b = self.entries, other.entries
        return UnitaryMatrix2(
            tuple(
                tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2))
                for i in range(2)
            )
        )

    def __pow__(self, k: int) -> "UnitaryMatrix2":
        if k < 0:
            return self.adjoint() ** (-k)
        out = UnitaryMatrix2.identity()
        for _ in range(k):
            out = out @ self
        return out

    def adjoint(self) -> "UnitaryMatrix2":
        """Conjugate transpose."""
        e = self.entries
        return UnitaryMatrix2(tuple(tuple(e[j][i].conjugate() for j in range(2)) for i in range(2)))

    def is_unitary(self) -> bool:
        return self @ self.adjoint() == UnitaryMatrix2.identity()


def h1_generators() -> Tuple[UnitaryMatrix2, UnitaryMatrix2]:
    """((1+i)/2) [[1, 1], [1, -1]] and diag(1, i)."""
    h = G(Fraction(1, 2), Fraction(1, 2))
    first = UnitaryMatrix2(((h, h), (h, -h)))
    second = UnitaryMatrix2(((ONE, ZERO), (ZERO, I)))
    return first, second


@dataclass(frozen=True)
class MatrixGroup:
    elements: Tuple[UnitaryMatrix2, ...]
    generators: Tuple[UnitaryMatrix2, ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m):
        return m in set(self.elements)


def closure(generators: Iterable[UnitaryMatrix2], cap: int = 1000) -> MatrixGroup:
    """Breadth-first multiplicative closure, seeded with the identity.

    Elements are returned in BFS insertion order, which is deterministic for a
    given generator sequence.  For a finite group every inverse is a positive
    power, so closing under products suffices.
    """
    gens = tuple(generators)
    ident = UnitaryMatrix2.identity()
    seen = {ident}
    elements: List[UnitaryMatrix2] = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x @ g
                if y in seen:
                    continue
                seen.add(y)
                elements.append(y)
                nxt.append(y)
                if len(elements) > cap:
                    raise CapExceeded(f"closure exceeded {cap} elements")
        frontier = nxt
    return MatrixGroup(tuple(elements), gens)


def h1_group(cap: int = 1000) -> MatrixGroup:
    return closure(h1_generators(), cap)


def _powers(x: GaussianRational, n: int) -> List[GaussianRational]:
    out = [ONE]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


def reynolds_power(group: MatrixGroup, ell: int) -> HomogBivariate:
    """(1/|G|) sum over sigma of (sigma x0)^ell, as a binary form of degree ell."""
    if ell < 1:
        raise ValueError("ell must be positive")
    acc = [ZERO] * (ell + 1)
    for sigma in group:
        pa = _powers(sigma[0, 0], ell)
        pb = _powers(sigma[0, 1], ell)
        for j in range(ell + 1):
            acc[j] = acc[j] + pa[ell - j] * pb[j]
    out = []
    for j, c in enumerate(acc):
        if not c.is_real():
            raise NonRealResult(f"x0^{ell - j} x1^{j} coefficient has imaginary part {c.im}")
        out.append(c.re * binomial(ell, j) / group.order)
    return HomogBivariate(ell, out)


def substitute(f: HomogBivariate, m: UnitaryMatrix2) -> List[GaussianRational]:
    """Coefficients of f(M (x0, x1)^t), i.e. x0 -> m00 x0 + m01 x1, x1 -> m10 x0 + m11 x1."""
    n = f.degree
    # ascending coefficient lists in x1 (x0 exponent implied by homogeneity)
    def lin_power(a, b, k):
        pa, pb = _powers(a, k), _powers(b, k)
        return [pa[k - j] * pb[j] * binomial(k, j) for j in range(k + 1)]

    out = [ZERO] * (n + 1)
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        u = lin_power(m[0, 0], m[0, 1], n - i)
        v = lin_power(m[1, 0], m[1, 1], i)
        for s, us in enumerate(u):
            if not us:
                continue
            for t, vt in enumerate(v):
                if vt:
                    out[s + t] = out[s + t] + us * vt * c
    return out


def is_invariant(f: HomogBivariate, matrices: Sequence[UnitaryMatrix2]) -> bool:
    target = [G(c) for c in f.coeffs]
    return all(substitute(f, m) == target for m in matrices)
