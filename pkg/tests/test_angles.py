from fractions import Fraction

from lenslink.angles import min_gap, realizable, solve_angles, wall_feasible


def L(s):
    return [(1 if x[0] == "+" else -1, int(x[1:])) for x in s.split()]


def check_solution(cycle, p, q):
    vals = solve_angles(cycle, p, q)
    assert vals is not None
    assert all(Fraction(0) < v < Fraction(1) for v in vals)
    assert all(a < b for a, b in zip(vals, vals[1:]))
    pos = {lab: k for k, lab in enumerate(cycle)}
    for lab, k in pos.items():
        if lab[0] == 1:
            m = pos[(-1, lab[1])]
            diff = vals[m] - vals[k]
            assert diff % 1 == Fraction(q, p) % 1 or diff - Fraction(q, p) in (0, -1, 1)
            assert (diff - Fraction(q, p)) % 1 == 0
    return vals


def test_empty_cycle():
    assert realizable([], 4, 1)


def test_core_knot_cycles():
    check_solution(L("+1 -1"), 3, 1)
    check_solution(L("+1 -1"), 5, 2)
    # the other basepoint gap: -1 before +1 needs the wrap, still fine
    check_solution(L("-1 +1"), 3, 1)


def test_two_pairs_feasible_and_not():
    check_solution(L("+1 -1 +2 -2"), 3, 1)
    # interleaved +1 -2 +2 -1 in L(3,1) forces a contradiction
    assert not realizable(L("+1 -2 +2 -1"), 3, 1)
    # but the same pattern is fine when q/p is large enough
    check_solution(L("+1 -2 +2 -1"), 3, 2)


def test_nested_pairs():
    check_solution(L("+1 +2 -1 -2"), 3, 1)
    check_solution(L("+1 +2 -1 -2"), 5, 1)


def test_p1_no_boundary():
    # q = 0 pairs would coincide, which the strict order forbids
    assert not realizable(L("+1 -1"), 1, 0)


def test_wall_feasibility():
    # L(3,1), cycle +1 -1 +2 -2: the mixed pair (-1, +2) can collide
    cyc = L("+1 -1 +2 -2")
    assert wall_feasible(cyc, 3, 1, 1)
    # wrap pair (-2, +1): also feasible
    assert wall_feasible(cyc, 3, 1, 3)


def test_wall_infeasible_same_pair():
    # +1 and -1 sit exactly q/p apart, so they can never coincide
    cyc = L("+1 -1")
    assert not wall_feasible(cyc, 3, 1, 0)
    assert not wall_feasible(cyc, 3, 1, 1)


def test_min_gap():
    vals = solve_angles(L("+1 -1 +2 -2"), 3, 1)
    assert min_gap(vals) > 0
