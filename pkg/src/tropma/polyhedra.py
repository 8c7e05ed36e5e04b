"""Exact rational polyhedra: vertices + rays + lineality, with conversions
between generator and facet descriptions by the double description method.

Cells of tropical cycles live here.  Everything is canonicalized so that
structural equality of two Polyhedron values is geometric equality: minimal
generators, rays scaled primitive, vertices and rays reduced modulo the
lineality space, lists sorted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import AmbientMismatchError
from .lattice import primitive
from .linalg import Vec, dot, is_zero, rank, rref, smul, sub, vec

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _cone_from_inequalities(normals: list[Vec], dim: int) -> tuple[list[Vec], list[Vec]]:
    """Minimal generators (rays, lineality basis) of {x : n . x <= 0 for n in normals}."""
    lineality: list[Vec] = [
        tuple(_ONE if j == i else _ZERO for j in range(dim)) for i in range(dim)
    ]
    rays: list[tuple[Vec, frozenset[int]]] = []
    processed: list[Vec] = []

    for idx, nrm in enumerate(normals):
        nrm = vec(nrm)
        if is_zero(nrm):
            processed.append(nrm)
            continue
        pivot = next((l for l in lineality if dot(nrm, l) != 0), None)
        if pivot is not None:
            # one lineality direction leaves the kernel and becomes a ray
            d0 = dot(nrm, pivot)
            if d0 > 0:
                pivot = smul(Fraction(-1), pivot)
                d0 = -d0
            lineality = [
                sub(l, smul(dot(nrm, l) / d0, pivot)) for l in lineality if l != pivot
            ]
            rays = [
                (sub(r, smul(dot(nrm, r) / d0, pivot)), zs | {idx}) for r, zs in rays
            ]
            rays.append((pivot, frozenset(range(idx))))
            processed.append(nrm)
            continue
        plus = [(r, zs, dot(nrm, r)) for r, zs in rays if dot(nrm, r) > 0]
        minus = [(r, zs, dot(nrm, r)) for r, zs in rays if dot(nrm, r) < 0]
        kept = [
            (r, zs | {idx}) if dot(nrm, r) == 0 else (r, zs)
            for r, zs in rays
            if dot(nrm, r) <= 0
        ]
        for rp, zp, vp in plus:
            for rm, zm, vm in minus:
                common = zp & zm
                adjacent = True
                for r3, z3 in rays:
                    if r3 is rp or r3 is rm:
                        continue
                    if common <= z3:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                w = sub(smul(vp, rm), smul(vm, rp))
                w = vec(Fraction(x) for x in primitive(w))
                kept.append((w, common | {idx}))
        rays = kept
        processed.append(nrm)

    out_rays = [vec(Fraction(c) for c in primitive(r)) for r, _ in rays]
    return out_rays, lineality


def _canonical_subspace_basis(gens: Sequence[Vec]) -> tuple[Vec, ...]:
    """Deterministic basis of a rational subspace: RREF rows scaled primitive."""
    rows, _ = rref([g for g in gens if not is_zero(g)])
    return tuple(vec(Fraction(c) for c in primitive(row)) for row in rows)


def _reduce_mod(basis_rows: Sequence[Vec], pivots: list[int], v: Vec) -> Vec:
    out = list(v)
    for row, p in zip(basis_rows, pivots):
        f = out[p] / row[p]
        if f != 0:
            out = [x - f * y for x, y in zip(out, row)]
    return tuple(out)


@dataclass(frozen=True)
class Polyhedron:
    """conv(vertices) + cone(rays) + span(lineality), canonical and minimal."""

    vertices: tuple[Vec, ...]
    rays: tuple[Vec, ...]
    lineality: tuple[Vec, ...]
    ambient_len: int

    def dim(self) -> int:
        v0 = self.vertices[0]
        gens = [sub(v, v0) for v in self.vertices[1:]]
        gens += list(self.rays) + list(self.lineality)
        return rank(gens)

    def linear_span(self) -> list[Vec]:
        """Basis of the linear span of cell directions (differences, rays, lineality)."""
        v0 = self.vertices[0]
        gens = [sub(v, v0) for v in self.vertices[1:]]
        gens += list(self.rays) + list(self.lineality)
        rows, _ = rref(gens)
        return list(rows)

    def relint_point(self) -> Vec:
        p = [Fraction(0)] * self.ambient_len
        for v in self.vertices:
            p = [a + b for a, b in zip(p, v)]
        p = [a / len(self.vertices) for a in p]
        for r in self.rays:
            p = [a + b for a, b in zip(p, r)]
        return tuple(p)

    def translate(self, t: Sequence) -> "Polyhedron":
        tv = vec(t)
        return make_polyhedron(
            [tuple(a + b for a, b in zip(v, tv)) for v in self.vertices],
            self.rays,
            self.lineality,
            self.ambient_len,
            minimal=True,
        )

    def is_point(self) -> bool:
        return len(self.vertices) == 1 and not self.rays and not self.lineality


def make_polyhedron(
    vertices: Sequence[Sequence],
    rays: Sequence[Sequence] = (),
    lineality: Sequence[Sequence] = (),
    ambient_len: int | None = None,
    minimal: bool = False,
) -> Polyhedron:
    """Canonical polyhedron from generators.

    With minimal=False the generator set is first reduced to the unique
    minimal one (round trip through the facet description).
    """
    vs = [vec(v) for v in vertices]
    if not vs:
        raise ValueError("a polyhedron needs at least one point generator")
    width = ambient_len if ambient_len is not None else len(vs[0])
    rs = [vec(r) for r in rays if not is_zero(vec(r))]
    ls = [vec(l) for l in lineality if not is_zero(vec(l))]
    if any(len(g) != width for g in vs + rs + ls):
        raise AmbientMismatchError("generator length mismatch")

    if not minimal:
        ineqs, eqs = _hrep_from_generators(vs, rs, ls, width)
        poly = polyhedron_from_hrep(ineqs, eqs, width)
        assert poly is not None
        return poly

    lin = _canonical_subspace_basis(ls)
    if lin:
        rows, pivots = rref(list(lin))
        vs = [_reduce_mod(rows, pivots, v) for v in vs]
        rs = [_reduce_mod(rows, pivots, r) for r in rs]
        rs = [r for r in rs if not is_zero(r)]
    out_rays = tuple(sorted({vec(Fraction(c) for c in primitive(r)) for r in rs}))
    return Polyhedron(tuple(sorted(set(vs))), out_rays, lin, width)


def _hrep_from_generators(
    vs: list[Vec], rs: list[Vec], ls: list[Vec], width: int
) -> tuple[list[tuple[Vec, Fraction]], list[tuple[Vec, Fraction]]]:
    # facets of the homogenization cone = extreme rays of its polar
    polar_normals: list[Vec] = []
    for v in vs:
        polar_normals.append((_ONE,) + v)
    for r in rs:
        polar_normals.append((_ZERO,) + r)
    for l in ls:
        polar_normals.append((_ZERO,) + l)
        polar_normals.append(tuple(-x for x in (_ZERO,) + l))
    prays, plin = _cone_from_inequalities(polar_normals, width + 1)
    ineqs: list[tuple[Vec, Fraction]] = []
    eqs: list[tuple[Vec, Fraction]] = []
    for u in prays:
        u0, uu = u[0], u[1:]
        if is_zero(uu):
            continue  # the trivial 0 <= 1 row coming from t >= 0
        ineqs.append((uu, -u0))
    for w in plin:
        w0, ww = w[0], w[1:]
        if is_zero(ww):
            continue
        eqs.append((ww, -w0))
    return ineqs, eqs


def polyhedron_from_hrep(
    ineqs: Sequence[tuple[Sequence, Fraction]],
    eqs: Sequence[tuple[Sequence, Fraction]],
    width: int,
) -> Polyhedron | None:
    """Polyhedron {x : a.x <= b, e.x = d}; None when the set is empty."""
    normals: list[Vec] = [(-_ONE,) + tuple([_ZERO] * width)]
    for a, b in ineqs:
        normals.append((-Fraction(b),) + vec(a))
    for e, d in eqs:
        row = (-Fraction(d),) + vec(e)
        normals.append(row)
        normals.append(tuple(-x for x in row))
    crays, clin = _cone_from_inequalities(normals, width + 1)
    verts: list[Vec] = []
    rays: list[Vec] = []
    for r in crays:
        t, x = r[0], r[1:]
        if t > 0:
            verts.append(tuple(c / t for c in x))
        else:
            rays.append(x)
    lin: list[Vec] = []
    for l in clin:
        assert l[0] == 0, "lineality escaped the t >= 0 halfspace"
        lin.append(l[1:])
    if not verts:
        return None
    return make_polyhedron(verts, rays, lin, width, minimal=True)


@lru_cache(maxsize=4096)
def to_hrep(p: Polyhedron) -> tuple[tuple[tuple[Vec, Fraction], ...], tuple[tuple[Vec, Fraction], ...]]:
    """Facet inequalities and affine-hull equations of p (irredundant)."""
    ineqs, eqs = _hrep_from_generators(
        list(p.vertices), list(p.rays), list(p.lineality), p.ambient_len
    )
    return tuple(ineqs), tuple(eqs)


def intersect(p: Polyhedron, q: Polyhedron) -> Polyhedron | None:
    if p.ambient_len != q.ambient_len:
        raise AmbientMismatchError("intersection of polyhedra in different ambients")
    pi, pe = to_hrep(p)
    qi, qe = to_hrep(q)
    return polyhedron_from_hrep(list(pi) + list(qi), list(pe) + list(qe), p.ambient_len)


def contains_point(p: Polyhedron, x: Sequence) -> bool:
    xv = vec(x)
    ineqs, eqs = to_hrep(p)
    return all(dot(a, xv) <= b for a, b in ineqs) and all(dot(e, xv) == d for e, d in eqs)


def facets(p: Polyhedron) -> list[Polyhedron]:
    """Codimension-one faces: generators tight on each facet inequality."""
    ineqs, _ = to_hrep(p)
    out = []
    for a, b in ineqs:
        verts = [v for v in p.vertices if dot(a, v) == b]
        rays = [r for r in p.rays if dot(a, r) == 0]
        if not verts:
            continue
        out.append(make_polyhedron(verts, rays, p.lineality, p.ambient_len, minimal=True))
    return out


def is_face_of(f: Polyhedron, p: Polyhedron) -> bool:
    """Is f a face of p?  Assumes f is a subset of p."""
    ineqs, _ = to_hrep(p)
    gens = list(f.vertices)
    tight = [
        (a, b)
        for a, b in ineqs
        if all(dot(a, v) == b for v in f.vertices)
        and all(dot(a, r) == 0 for r in f.rays)
        and all(dot(a, l) == 0 for l in f.lineality)
    ]
    verts = [
        v
        for v in p.vertices
        if all(dot(a, v) == b for a, b in tight)
    ]
    rays = [r for r in p.rays if all(dot(a, r) == 0 for a, _ in tight)]
    generated = make_polyhedron(verts, rays, p.lineality, p.ambient_len, minimal=True)
    return generated == f


def affine_image(p: Polyhedron, matrix: Sequence[Sequence], offset: Sequence | None = None) -> Polyhedron:
    """Image under x -> M x + offset; generators map, then re-minimalize."""
    rows = [vec(r) for r in matrix]
    if any(len(r) != p.ambient_len for r in rows):
        raise AmbientMismatchError("matrix width does not match polyhedron ambient")
    off = vec(offset) if offset is not None else tuple([_ZERO] * len(rows))

    def apply(v: Vec) -> Vec:
        return tuple(dot(r, v) for r in rows)

    verts = [tuple(a + b for a, b in zip(apply(v), off)) for v in p.vertices]
    rays = [apply(r) for r in p.rays]
    lin = [apply(l) for l in p.lineality]
    return make_polyhedron(verts, rays, lin, len(rows), minimal=False)


def product(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    pad_p = tuple([_ZERO] * q.ambient_len)
    pad_q = tuple([_ZERO] * p.ambient_len)
    verts = [v + w for v in p.vertices for w in q.vertices]
    rays = [r + pad_p for r in p.rays] + [pad_q + r for r in q.rays]
    lin = [l + pad_p for l in p.lineality] + [pad_q + l for l in q.lineality]
    return make_polyhedron(verts, rays, lin, p.ambient_len + q.ambient_len, minimal=True)


def cut(p: Polyhedron, normal: Sequence, rhs: Fraction, sense: str) -> Polyhedron | None:
    """p intersected with a halfspace normal.x <= rhs (sense '<=') or >= ('>=')."""
    nv = vec(normal)
    if sense == ">=":
        nv = tuple(-x for x in nv)
        rhs = -Fraction(rhs)
    pi, pe = to_hrep(p)
    return polyhedron_from_hrep(list(pi) + [(nv, Fraction(rhs))], list(pe), p.ambient_len)


def single_point_polyhedron(x: Sequence) -> Polyhedron:
    xv = vec(x)
    return Polyhedron((xv,), (), (), len(xv))
