from fractions import Fraction

import numpy as np
import pytest

from eiszeta.enumerator import normalize
from eiszeta.errors import CapExceeded
from eiszeta.exact import ONE, ZERO, GaussianRational, I
from eiszeta.group import (
    UnitaryMatrix2,
    closure,
    h1_generators,
    h1_group,
    is_invariant,
    reynolds_power,
)


@pytest.fixture(scope="module")
def h1():
    return h1_group()


def float_closure(gens, limit=10_000):
    """Independent oracle: closure with complex floats, elements keyed by rounding."""
    key = lambda m: tuple(np.round(m, 9).flatten().tolist())
    ident = np.eye(2, dtype=complex)
    seen = {key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x @ g
                k = key(y)
                if k not in seen:
                    seen[k] = y
                    nxt.append(y)
        frontier = nxt
        assert len(seen) < limit
    return len(seen)


def test_generators_exact_entries():
    a, b = h1_generators()
    h = GaussianRational(Fraction(1, 2), Fraction(1, 2))
    assert a.entries == ((h, h), (h, -h))
    assert b.entries == ((ONE, ZERO), (ZERO, I))
    assert a.is_unitary() and b.is_unitary()
    assert b**4 == UnitaryMatrix2.identity()
    assert a @ a in h1_group()


def test_order_96_matches_float_oracle(h1):
    h = (1 + 1j) / 2
    gens = [np.array([[h, h], [h, -h]]), np.array([[1, 0], [0, 1j]])]
    assert float_closure(gens) == 96
    assert h1.order == 96


def test_group_axioms(h1):
    elems = set(h1.elements)
    assert UnitaryMatrix2.identity() in elems
    assert all(m.is_unitary() for m in h1)
    assert all(m.adjoint() in elems for m in h1)
    assert all(x @ y in elems for x in h1.elements[::7] for y in h1.elements)


def test_small_closures():
    assert closure([UnitaryMatrix2.identity()], cap=10).order == 1
    assert closure([h1_generators()[1]], cap=10).order == 4
    with pytest.raises(CapExceeded):
        closure(h1_generators(), cap=50)


def test_closure_order_deterministic():
    assert h1_group().elements == h1_group().elements


def test_reynolds_vanishing_examples(h1):
    assert reynolds_power(h1, 4).is_zero()
    assert reynolds_power(h1, 6).is_zero()


def test_reynolds_phi8_table(h1):
    f = normalize(reynolds_power(h1, 8))
    assert f.coeffs == (1, 0, 0, 0, 14, 0, 0, 0, 1)


@pytest.mark.parametrize("ell", [8, 12, 16, 24])
def test_reynolds_output_is_invariant(h1, ell):
    assert is_invariant(reynolds_power(h1, ell), h1_generators())


def test_invariance_detects_non_invariant():
    from eiszeta.poly import HomogBivariate

    assert not is_invariant(HomogBivariate(4, (1, 0, 0, 0, 0)), h1_generators())
