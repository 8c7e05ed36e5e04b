import random
from fractions import Fraction

import pytest

from tropma.lattice import (
    IntMatrix,
    invariant_factors,
    lattice_index,
    lattice_length,
    primitive,
    saturation_basis,
    snf,
    sublattice_index,
)


def test_snf_identity():
    m = IntMatrix.identity(2)
    _, d, _ = snf(m)
    assert d == IntMatrix.identity(2)


def test_snf_divisor_chain():
    # gcd of entries is d_1, product of invariants is |det|
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    _, d, _ = snf(m)
    assert (d.rows[0][0], d.rows[1][1]) == (1, 6)


def test_snf_worked_2x2():
    m = IntMatrix.from_rows([[2, 4], [6, 8]])
    _, d, _ = snf(m)
    assert (d.rows[0][0], d.rows[1][1]) == (2, 4)


def test_snf_reconstruction_random():
    rng = random.Random(7)
    for _ in range(60):
        nr = rng.randint(1, 5)
        nc = rng.randint(1, 5)
        m = IntMatrix.from_rows(
            [[rng.randint(-6, 6) for _ in range(nc)] for _ in range(nr)]
        )
        u, d, v = snf(m)
        assert u @ m @ v == d
        assert abs(u.det()) == 1
        assert abs(v.det()) == 1
        diag = [d.rows[i][i] for i in range(min(nr, nc))]
        for i in range(nr):
            for j in range(nc):
                if i != j:
                    assert d.rows[i][j] == 0
        for a, b in zip(diag, diag[1:]):
            assert a >= 0 and b >= 0
            if a != 0:
                assert b % a == 0


def test_lattice_index_basis():
    assert lattice_index([(1, 0)], [(0, 1)], 2) == 1


def test_lattice_index_det():
    assert lattice_index([(1, 0)], [(1, 2)], 2) == 2


def test_lattice_index_rank_deficient():
    assert lattice_index([(1, 0)], [(2, 0)], 2) is None


def test_lattice_index_saturates_generators():
    # (2, 0) spans the same line as (1, 0); the index ignores the scaling
    assert lattice_index([(2, 0)], [(0, 1)], 2) == 1


def test_lattice_index_equals_det_for_saturated_rank1_pairs():
    rng = random.Random(11)
    cases = 0
    while cases < 40:
        a = (rng.randint(-5, 5), rng.randint(-5, 5))
        b = (rng.randint(-5, 5), rng.randint(-5, 5))
        if a == (0, 0) or b == (0, 0):
            continue
        a = primitive([Fraction(x) for x in a])
        b = primitive([Fraction(x) for x in b])
        det = a[0] * b[1] - a[1] * b[0]
        got = lattice_index([a], [b], 2)
        if det == 0:
            assert got is None
        else:
            assert got == abs(det)
        cases += 1


def test_saturation_basis():
    basis = saturation_basis([(2, 0, 0), (0, 4, 0)], 3)
    assert sublattice_index(basis + [(0, 0, 1)], 3) == 1


def test_primitive_and_length():
    assert primitive([Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3)]) == (2, -1, -1)
    assert lattice_length((2, -2, 0)) == 2
    assert lattice_length((1, -1, 0)) == 1
    with pytest.raises(ValueError):
        primitive([Fraction(0), Fraction(0)])


def test_det_bareiss():
    m = IntMatrix.from_rows([[2, 4], [6, 8]])
    assert m.det() == -8
    assert IntMatrix.from_rows([[0, 1], [1, 0]]).det() == -1
    assert IntMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]]).det() == 0
