import random
from fractions import Fraction

import pytest

from tropma.errors import AmbientMismatchError
from tropma.quotient import (
    QuotientVector,
    basis_point,
    canonical_rep,
    from_chart,
    to_chart,
    zero,
)


def test_canonical_rep_already_sum_zero():
    assert canonical_rep((1, 0, -1)).coords == (1, 0, -1)


def test_canonical_rep_diagonal_collapses():
    assert canonical_rep((1, 1, 1)).coords == (0, 0, 0)


def test_canonical_rep_subtracts_mean():
    assert canonical_rep((2, 0, 1)).coords == (1, -1, 0)


def test_canonical_rep_idempotent_and_class_invariant():
    rng = random.Random(3)
    for _ in range(100):
        n1 = rng.randint(2, 6)
        v = [Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(n1)]
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        rep = canonical_rep(v)
        assert canonical_rep(rep.coords) == rep
        assert canonical_rep([x + c for x in v]) == rep


def test_length_guard():
    with pytest.raises(ValueError):
        canonical_rep((1,))
    with pytest.raises(ValueError):
        QuotientVector((Fraction(1),))


def test_sum_zero_enforced():
    with pytest.raises(ValueError):
        QuotientVector((Fraction(1), Fraction(0), Fraction(0)))


def test_arithmetic_and_pairing():
    a = canonical_rep((1, 0, -1))
    b = basis_point(0, 2)
    assert (a + b - b) == a
    assert a.dot((1, 0, -1)) == 2
    # pairing a sum-zero direction against e-bar_i picks out coordinate i
    d = canonical_rep((-1, 0, 1))
    assert d.dot(basis_point(2, 2).coords) == 1
    with pytest.raises(AmbientMismatchError):
        a + canonical_rep((1, -1))


def test_chart_roundtrip_and_lattice():
    rng = random.Random(5)
    for _ in range(50):
        n1 = rng.randint(2, 5)
        v = canonical_rep([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n1)])
        assert from_chart(to_chart(v.coords)) == v.coords
    # integer classes map onto Z^n
    for i in range(3):
        chart = to_chart(basis_point(i, 2).coords)
        assert all(x.denominator == 1 for x in chart)
    assert to_chart(basis_point(0, 2).coords) == (1, 0)
    assert to_chart(basis_point(2, 2).coords) == (-1, -1)
    assert zero(2).is_zero()
