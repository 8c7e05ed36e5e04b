"""Exact rational linear programming by the primal simplex method.

Bland's rule everywhere, so the solver never cycles; with dimensions in the
single digits and a few hundred columns at most, speed is not a concern and
no tolerance ever enters a comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None
    value: Fraction | None


def solve_lp(
    objective: Sequence,
    a_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    a_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    nonneg: Sequence[bool] | None = None,
) -> LPResult:
    """Minimize objective . x subject to a_ub x <= b_ub and a_eq x = b_eq.

    Variables with nonneg[j] True are constrained to x_j >= 0, the others are
    free.  Returns an optimal vertex solution when one exists.
    """
    nvars = len(objective)
    if nonneg is None:
        nonneg = [False] * nvars
    if len(nonneg) != nvars:
        raise ValueError("nonneg mask length mismatch")

    # map original variables to standard-form columns (free vars split in two)
    col_of: list[tuple[int, int | None]] = []
    ncols = 0
    for j in range(nvars):
        if nonneg[j]:
            col_of.append((ncols, None))
            ncols += 1
        else:
            col_of.append((ncols, ncols + 1))
            ncols += 2
    nslack = len(a_ub)
    ncols += nslack

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []

    def expand(coeffs) -> list[Fraction]:
        out = [_ZERO] * ncols
        for j, c in enumerate(coeffs):
            c = Fraction(c)
            pos, neg = col_of[j]
            out[pos] += c
            if neg is not None:
                out[neg] -= c
        return out

    for idx, (coeffs, b) in enumerate(zip(a_ub, b_ub, strict=True)):
        row = expand(coeffs)
        row[ncols - nslack + idx] = _ONE
        rows.append(row)
        rhs.append(Fraction(b))
    for coeffs, b in zip(a_eq, b_eq, strict=True):
        rows.append(expand(coeffs))
        rhs.append(Fraction(b))

    m = len(rows)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    cost = expand(objective)

    # phase 1: artificial variable on every row
    total = ncols + m
    tableau = [rows[i] + [_ONE if k == i else _ZERO for k in range(m)] + [rhs[i]] for i in range(m)]
    basis = [ncols + i for i in range(m)]
    phase1 = [_ZERO] * total + [_ZERO]
    for i in range(m):
        for j in range(total + 1):
            phase1[j] -= tableau[i][j]
    for k in range(m):
        phase1[ncols + k] = _ZERO

    _simplex(tableau, phase1, basis, total)
    if -phase1[total] > 0:
        return LPResult(INFEASIBLE, None, None)

    # drive artificial variables out of the basis, dropping redundant rows
    keep: list[int] = []
    for i in range(m):
        if basis[i] < ncols:
            keep.append(i)
            continue
        piv = next((j for j in range(ncols) if tableau[i][j] != 0), None)
        if piv is None:
            continue  # redundant constraint
        _pivot(tableau, phase1, basis, i, piv, total)
        basis[i] = piv
        keep.append(i)
    tableau = [tableau[i][:ncols] + [tableau[i][total]] for i in keep]
    basis = [basis[i] for i in keep]
    m = len(tableau)

    # phase 2
    cost_row = cost + [_ZERO]
    for i in range(m):
        cb = cost_row[basis[i]]
        if cb != 0:
            for j in range(ncols + 1):
                cost_row[j] -= cb * tableau[i][j]
    status = _simplex(tableau, cost_row, basis, ncols)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None)

    values = [_ZERO] * ncols
    for i in range(m):
        values[basis[i]] = tableau[i][ncols]
    x = []
    for j in range(nvars):
        pos, neg = col_of[j]
        x.append(values[pos] - (values[neg] if neg is not None else _ZERO))
    obj = sum((Fraction(c) * v for c, v in zip(objective, x)), _ZERO)
    return LPResult(OPTIMAL, tuple(x), obj)


def _pivot(tableau, cost_row, basis, r, c, width):
    pv = tableau[r][c]
    tableau[r] = [x / pv for x in tableau[r]]
    for i in range(len(tableau)):
        if i != r and tableau[i][c] != 0:
            f = tableau[i][c]
            tableau[i] = [x - f * y for x, y in zip(tableau[i], tableau[r])]
    f = cost_row[c]
    if f != 0:
        for j in range(width + 1):
            cost_row[j] -= f * tableau[r][j]


def _simplex(tableau, cost_row, basis, width) -> str:
    m = len(tableau)
    while True:
        enter = next((j for j in range(width) if cost_row[j] < 0), None)
        if enter is None:
            return OPTIMAL
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][width] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < best[1]):
                    best = (ratio, basis[i], i)
        if best is None:
            return UNBOUNDED
        _pivot(tableau, cost_row, basis, best[2], enter, width)
        basis[best[2]] = enter


def feasible(
    a_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    a_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    nvars: int | None = None,
    nonneg: Sequence[bool] | None = None,
) -> LPResult:
    """Feasibility check: solve with a zero objective."""
    if nvars is None:
        if a_ub:
            nvars = len(a_ub[0])
        elif a_eq:
            nvars = len(a_eq[0])
        else:
            raise ValueError("cannot infer variable count")
    return solve_lp([_ZERO] * nvars, a_ub, b_ub, a_eq, b_eq, nonneg)
