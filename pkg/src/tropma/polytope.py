"""Bounded polytopes in exact V-representation.

A polytope is an irredundant, lexicographically sorted vertex list, so
structural equality doubles as a deterministic geometric equality test.
Membership is an exact LP feasibility question; no tolerances exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatchError, EmptyPolytopeError
from .linalg import Vec, rank, sub, vec
from .linprog import OPTIMAL, feasible
from .quotient import QuotientVector, basis_point

Point = Vec


@dataclass(frozen=True)
class Polytope:
    """Convex hull of finitely many rational points.

    `quotient` marks vertex coordinates as sum-zero representatives of
    classes modulo the diagonal; plain full-ambient polytopes (Newton
    polytopes of exponent vectors, say) set it False.
    """

    vertices: tuple[Point, ...]
    ambient_len: int
    quotient: bool = True

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def n(self) -> int:
        """Quotient-space dimension for quotient polytopes."""
        return self.ambient_len - 1

    def dimension(self) -> int:
        if not self.vertices:
            return -1
        v0 = self.vertices[0]
        return rank([sub(v, v0) for v in self.vertices[1:]])

    def translate(self, t: Sequence) -> "Polytope":
        tv = vec(t)
        if len(tv) != self.ambient_len:
            raise AmbientMismatchError("translation length mismatch")
        return Polytope(
            tuple(sorted(tuple(a + b for a, b in zip(v, tv)) for v in self.vertices)),
            self.ambient_len,
            self.quotient,
        )

    def dilate(self, c) -> "Polytope":
        c = Fraction(c)
        if c < 0:
            raise ValueError("dilation factor must be nonnegative")
        return Polytope(
            tuple(sorted({tuple(c * x for x in v) for v in self.vertices})),
            self.ambient_len,
            self.quotient,
        )

    def reflect(self) -> "Polytope":
        return Polytope(
            tuple(sorted(tuple(-x for x in v) for v in self.vertices)),
            self.ambient_len,
            self.quotient,
        )


def _as_points(points: Iterable[Sequence]) -> list[Point]:
    out = []
    for p in points:
        if isinstance(p, QuotientVector):
            out.append(p.coords)
        else:
            out.append(vec(p))
    return out


def convex_hull(points: Iterable[Sequence], quotient: bool = True, ambient_len: int | None = None) -> Polytope:
    """Irredundant vertex set of the hull, vertices in lexicographic order."""
    pts = _as_points(points)
    if not pts:
        if ambient_len is None:
            raise ValueError("ambient length needed for an empty polytope")
        return Polytope((), ambient_len, quotient)
    width = len(pts[0])
    if any(len(p) != width for p in pts):
        raise AmbientMismatchError("points of mixed dimensions")
    if ambient_len is not None and width != ambient_len:
        raise AmbientMismatchError("points do not match the requested ambient")
    uniq = sorted(set(pts))
    verts = [p for p in uniq if not _in_hull_of_others(p, uniq)]
    return Polytope(tuple(verts), width, quotient)


def _in_hull_of_others(p: Point, pts: list[Point]) -> bool:
    others = [q for q in pts if q != p]
    if not others:
        return False
    return _combination_exists(others, p)


def _combination_exists(gens: list[Point], target: Point) -> bool:
    a_eq = [[g[i] for g in gens] for i in range(len(target))]
    a_eq.append([1] * len(gens))
    b_eq = list(target) + [1]
    res = feasible(a_eq=a_eq, b_eq=b_eq, nonneg=[True] * len(gens))
    return res.status == OPTIMAL


def contains(p: Polytope, x: Sequence) -> bool:
    """Exact membership: is x a convex combination of the vertices?

    An empty polytope contains nothing.
    """
    if p.is_empty:
        return False
    pt = x.coords if isinstance(x, QuotientVector) else vec(x)
    if len(pt) != p.ambient_len:
        raise AmbientMismatchError("point length does not match polytope ambient")
    return _combination_exists(list(p.vertices), pt)


def membership_coefficients(p: Polytope, x: Sequence) -> tuple[Fraction, ...] | None:
    """Convex-combination coefficients writing x over the vertices, if any."""
    if p.is_empty:
        return None
    pt = x.coords if isinstance(x, QuotientVector) else vec(x)
    gens = list(p.vertices)
    a_eq = [[g[i] for g in gens] for i in range(len(pt))]
    a_eq.append([1] * len(gens))
    b_eq = list(pt) + [1]
    res = feasible(a_eq=a_eq, b_eq=b_eq, nonneg=[True] * len(gens))
    if res.status != OPTIMAL:
        return None
    return res.x


def support_value(p: Polytope, direction: Sequence) -> Fraction:
    """max over the polytope of the linear functional <direction, .>."""
    if p.is_empty:
        raise EmptyPolytopeError("support value of the empty polytope")
    d = direction.coords if isinstance(direction, QuotientVector) else vec(direction)
    if len(d) != p.ambient_len:
        raise AmbientMismatchError("direction length does not match polytope ambient")
    return max(sum((a * b for a, b in zip(d, v)), Fraction(0)) for v in p.vertices)


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    """Hull of pairwise vertex sums.  Empty operands are absorbing."""
    if p.ambient_len != q.ambient_len or p.quotient != q.quotient:
        raise AmbientMismatchError("Minkowski sum of incompatible polytopes")
    if p.is_empty or q.is_empty:
        return Polytope((), p.ambient_len, p.quotient)
    sums = {tuple(a + b for a, b in zip(u, v)) for u in p.vertices for v in q.vertices}
    return convex_hull(sums, quotient=p.quotient)


def standard_simplex(indices: Iterable[int], n: int) -> Polytope:
    """Simplex spanned by the classes of the unit vectors e_i, i in `indices`."""
    idx = sorted(set(indices))
    if not idx:
        return Polytope((), n + 1, True)
    if idx[0] < 0 or idx[-1] > n:
        raise ValueError(f"indices {idx} out of range for n={n}")
    return convex_hull([basis_point(i, n) for i in idx], quotient=True)


def single_point(x: Sequence, quotient: bool = True) -> Polytope:
    pt = x.coords if isinstance(x, QuotientVector) else vec(x)
    return Polytope((pt,), len(pt), quotient)
