from fractions import Fraction

from tropma.linprog import INFEASIBLE, OPTIMAL, UNBOUNDED, feasible, solve_lp


def test_basic_optimum():
    # min -x - y  s.t. x + y <= 1, x, y >= 0
    res = solve_lp([-1, -1], a_ub=[[1, 1]], b_ub=[1], nonneg=[True, True])
    assert res.status == OPTIMAL
    assert res.value == -1


def test_infeasible():
    res = feasible(a_eq=[[1, 1], [1, 1]], b_eq=[1, 2], nonneg=[True, True])
    assert res.status == INFEASIBLE


def test_unbounded():
    res = solve_lp([-1], a_ub=[[-1]], b_ub=[0], nonneg=[False])
    assert res.status == UNBOUNDED


def test_free_variables():
    # min x s.t. x >= -3 (as -x <= 3) with x free
    res = solve_lp([1], a_ub=[[-1]], b_ub=[3])
    assert res.status == OPTIMAL
    assert res.x == (-3,)


def test_exact_fractions():
    # convex combination: is (1/3, 1/3) in hull{(0,0),(1,0),(0,1)}?
    verts = [(0, 0), (1, 0), (0, 1)]
    a_eq = [
        [v[0] for v in verts],
        [v[1] for v in verts],
        [1, 1, 1],
    ]
    res = feasible(a_eq=a_eq, b_eq=[Fraction(1, 3), Fraction(1, 3), 1], nonneg=[True] * 3)
    assert res.status == OPTIMAL
    assert sum(res.x) == 1
    assert all(c >= 0 for c in res.x)


def test_redundant_equalities():
    # duplicated consistent rows must not break phase one
    res = feasible(a_eq=[[1, 1], [2, 2]], b_eq=[1, 2], nonneg=[True, True])
    assert res.status == OPTIMAL


def test_degenerate_pivoting_terminates():
    # classic cycling example (Beale); Bland's rule must terminate
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6]
    a_ub = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3],
        [0, 0, 1, 0],
    ]
    b_ub = [0, 0, 1]
    res = solve_lp(c, a_ub=a_ub, b_ub=b_ub, nonneg=[True] * 4)
    assert res.status == OPTIMAL
    assert res.value == Fraction(-1, 20)
