"""Integer matrices, Smith normal form and lattice indices.

Supports the fan displacement rule: intersection multiplicities are indices
[Z^r : L_A + L_B] of sums of saturated cell lattices, computed from Smith
normal forms of stacked generator matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import rref


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged rows")
        for r in self.rows:
            for x in r:
                if not isinstance(x, int):
                    raise ValueError(f"non-integer entry {x!r}")

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else []
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows))) if self.rows else IntMatrix(())

    def det(self) -> int:
        """Exact determinant by fraction-free Bareiss elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of non-square matrix")
        if n == 0:
            return 1
        m = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def snf(mat: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns (U, D, V) with U @ mat @ V = D.

    U, V unimodular; D diagonal with nonnegative entries d_1 | d_2 | ...
    """
    a = [list(r) for r in mat.rows]
    nr, nc = mat.nrows, mat.ncols
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_op(i, j, c):  # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, c):  # col_i += c * col_j
        for row in a:
            row[i] += c * row[j]
        for row in v:
            row[i] += c * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(nr, nc):
        # move a nonzero pivot of minimal absolute value to (t, t)
        entries = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j] != 0]
        if not entries:
            break
        _, pi, pj = min(entries)
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        dirty = False
        for i in range(t + 1, nr):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                row_op(i, t, -q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, nc):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                col_op(j, t, -q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry; absorb a bad row and retry
        bad = next(
            ((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % a[t][t] != 0),
            None,
        )
        if bad is not None:
            row_op(t, bad[0], 1)
            continue
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    U = IntMatrix.from_rows(u)
    V = IntMatrix.from_rows(v)
    D = U @ mat @ V
    return U, D, V


def invariant_factors(mat: IntMatrix) -> list[int]:
    _, d, _ = snf(mat)
    return [d.rows[i][i] for i in range(min(d.nrows, d.ncols)) if d.rows[i][i] != 0]


def saturation_basis(gens: Sequence[Sequence[int]], r: int) -> list[tuple[int, ...]]:
    """Basis of the saturation (span_Q(gens) intersect Z^r) of the row lattice."""
    gens = [tuple(int(x) for x in g) for g in gens if any(g)]
    if not gens:
        return []
    mat = IntMatrix.from_rows(gens)
    u, d, v = snf(mat)
    k = sum(1 for i in range(min(d.nrows, d.ncols)) if d.rows[i][i] != 0)
    # rows of V^{-1} scaled by d_i generate the lattice; dropping the scale saturates
    vinv = _unimodular_inverse(v)
    return [vinv.rows[i] for i in range(k)]


def _unimodular_inverse(m: IntMatrix) -> IntMatrix:
    n = m.nrows
    aug = [list(m.rows[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    # exact Gauss-Jordan over Q, result is integral for unimodular input
    mat = [[Fraction(x) for x in row] for row in aug]
    red, pivots = rref(mat)
    inv_rows = []
    for row in red:
        tail = row[n:]
        if any(x.denominator != 1 for x in tail):
            raise ValueError("matrix is not unimodular")
        inv_rows.append(tuple(int(x) for x in tail))
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return IntMatrix.from_rows(inv_rows)


def sublattice_index(gens: Sequence[Sequence[int]], r: int) -> int | None:
    """[Z^r : lattice generated by gens], or None when the rank is deficient."""
    gens = [g for g in gens if any(g)]
    if not gens:
        return None if r > 0 else 1
    mat = IntMatrix.from_rows(gens)
    factors = invariant_factors(mat)
    if len(factors) < r:
        return None
    return math.prod(factors)


def lattice_index(
    gens_a: Sequence[Sequence[int]], gens_b: Sequence[Sequence[int]], r: int
) -> int | None:
    """Fan displacement index [Z^r : sat(A) + sat(B)]; None means infinite.

    Each generator set is saturated first, so non-primitive spanning vectors
    describe the same rational subspace as their primitive scalings.
    """
    sat_a = saturation_basis(gens_a, r)
    sat_b = saturation_basis(gens_b, r)
    return sublattice_index(sat_a + sat_b, r)


def primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Primitive integer vector on the ray through v (v nonzero)."""
    fracs = [Fraction(x) for x in v]
    if all(x == 0 for x in fracs):
        raise ValueError("zero vector has no primitive representative")
    denom = math.lcm(*(x.denominator for x in fracs))
    ints = [int(x * denom) for x in fracs]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints)


def lattice_length(v: Sequence[int]) -> int:
    """Number of lattice points on [0, v] minus one, i.e. gcd of the entries."""
    ints = [int(x) for x in v]
    if all(x == 0 for x in ints):
        return 0
    return math.gcd(*ints)
