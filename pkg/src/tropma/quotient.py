"""Points of the quotient space R^{n+1} / R*(1,...,1) in sum-zero coordinates.

The canonical representative of a class is the unique one whose coordinates
sum to zero, which makes the usual identification of the quotient with the
hyperplane orthogonal to the diagonal an identity on stored data.

Lattice-sensitive computations use the chart

    chart(x) = (x_0 - x_n, ..., x_{n-1} - x_n)

which maps the image of the integer classes onto exactly Z^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatchError
from .linalg import Vec


@dataclass(frozen=True)
class QuotientVector:
    """Sum-zero rational vector of length n+1 representing a class mod the diagonal."""

    coords: Vec

    def __post_init__(self):
        if len(self.coords) < 2:
            raise ValueError("quotient vectors need at least two coordinates")
        if sum(self.coords) != 0:
            raise ValueError(f"coordinates must sum to zero, got {self.coords}")

    @property
    def n(self) -> int:
        """Dimension of the quotient space (one less than the coordinate count)."""
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "QuotientVector") -> "QuotientVector":
        self._check(other)
        return QuotientVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "QuotientVector") -> "QuotientVector":
        self._check(other)
        return QuotientVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "QuotientVector":
        return QuotientVector(tuple(-a for a in self.coords))

    def scale(self, c) -> "QuotientVector":
        c = Fraction(c)
        return QuotientVector(tuple(c * a for a in self.coords))

    def dot(self, other: Sequence[Fraction]) -> Fraction:
        if len(other) != len(self.coords):
            raise AmbientMismatchError(
                f"pairing lengths differ: {len(self.coords)} vs {len(other)}"
            )
        return sum((a * Fraction(b) for a, b in zip(self.coords, other)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def _check(self, other: "QuotientVector"):
        if len(other.coords) != len(self.coords):
            raise AmbientMismatchError(
                f"ambient mismatch: {len(self.coords)} vs {len(other.coords)} coordinates"
            )


def canonical_rep(values: Iterable) -> QuotientVector:
    """Sum-zero representative of the class of `values`: subtract the mean.

    Idempotent, and constant on classes: v and v + c*(1,...,1) map to the
    same output.
    """
    v = tuple(Fraction(x) for x in values)
    if len(v) < 2:
        raise ValueError("need at least two coordinates")
    mean = sum(v) / len(v)
    return QuotientVector(tuple(x - mean for x in v))


def zero(n: int) -> QuotientVector:
    return QuotientVector(tuple(Fraction(0) for _ in range(n + 1)))


def basis_point(i: int, n: int) -> QuotientVector:
    """Canonical representative of the i-th unit vector, written e-bar_i."""
    if not 0 <= i <= n:
        raise ValueError(f"index {i} out of range for n={n}")
    return canonical_rep(tuple(1 if j == i else 0 for j in range(n + 1)))


def to_chart(x: Sequence[Fraction]) -> Vec:
    """Coordinates in which the lattice of integer classes becomes Z^n."""
    last = x[-1]
    return tuple(Fraction(c) - last for c in x[:-1])


def from_chart(y: Sequence[Fraction]) -> Vec:
    """Inverse of to_chart: the sum-zero representative with the given chart."""
    y = [Fraction(c) for c in y]
    total = sum(y)
    n1 = len(y) + 1
    last = -total / n1
    return tuple(c + last for c in y) + (last,)
