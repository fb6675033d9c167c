"""Exact feasibility of boundary-label angle assignments.

The 2t boundary labels of a diagram in L(p,q) must admit angles in (0,1),
strictly increasing in boundary-cycle order from the basepoint, with each
"-i" sitting exactly q/p after its "+i" (mod 1).  This module decides
feasibility of such systems, including "wall" systems where one adjacent
pair of labels is forced to coincide (used by boundary moves), and returns
exact rational witnesses.

Strict inequalities are handled symbolically: weights are pairs
(rational, k) standing for rational + k*epsilon, compared lexicographically;
a feasible symbolic solution is realized with an explicit small epsilon.
"""

from __future__ import annotations

from fractions import Fraction

Label = tuple[int, int]  # (sign, index), sign in {+1, -1}


def pair_offset_constraints(cycle: list[Label], p: int, q: int):
    """Equalities v[pos(-i)] - v[pos(+i)] = q/p or q/p - 1, from list order."""
    pos = {lab: k for k, lab in enumerate(cycle)}
    out = []
    for lab, k in pos.items():
        if lab[0] != 1:
            continue
        partner = (-1, lab[1])
        if partner not in pos:
            raise ValueError(f"label {lab} has no partner")
        m = pos[partner]
        c = Fraction(q, p) if m > k else Fraction(q, p) - 1
        out.append((k, m, c))
    return out


def _bellman_ford(n_nodes, edges):
    """Shortest-path potentials for x_j - x_i <= w edges; None if infeasible."""
    dist = [(Fraction(0), 0)] * n_nodes  # virtual source at distance 0 to all
    for _ in range(n_nodes):
        changed = False
        for i, j, w in edges:
            cand = (dist[i][0] + w[0], dist[i][1] + w[1])
            if cand < dist[j]:
                dist[j] = cand
                changed = True
        if not changed:
            return dist
    for i, j, w in edges:
        cand = (dist[i][0] + w[0], dist[i][1] + w[1])
        if cand < dist[j]:
            return None  # negative cycle
    return dist


def solve_angles(cycle: list[Label], p: int, q: int,
                 collapse: tuple[int, int] | None = None):
    """Rational angles in (0,1) realizing the cycle, or None.

    collapse=(k, m) additionally forces labels at positions k and m to the
    same circle point; k, m must be cyclically adjacent (m = k+1, or the
    wrap pair (n-1, 0)).
    """
    n = len(cycle)
    if n == 0:
        return []
    z = n  # basepoint node, pinned to angle 0
    edges = []

    def leq(i, j, rat, eps):  # x_j - x_i <= rat + eps*epsilon
        edges.append((i, j, (Fraction(rat), eps)))

    collapsed = set()
    if collapse is not None:
        k, m = collapse
        if m == (k + 1) % n:
            collapsed.add(k)
        else:
            raise ValueError("collapse pair must be cyclically adjacent")
    for k in range(n - 1):
        if k in collapsed:
            leq(k, k + 1, 0, 0)
            leq(k + 1, k, 0, 0)
        else:
            leq(k + 1, k, 0, -1)  # v_k < v_{k+1}
    # window (0,1) relative to the basepoint
    leq(0, z, 0, -1)             # v_0 > 0
    leq(z, n - 1, 1, -1)         # v_{n-1} < 1
    if (n - 1) in collapsed:     # wrap collapse: v_{n-1} = v_0 + 1
        leq(0, n - 1, 1, 0)
        leq(n - 1, 0, -1, 0)
    for k, m, c in pair_offset_constraints(cycle, p, q):
        leq(k, m, c, 0)
        leq(m, k, -c, 0)

    dist = _bellman_ford(n + 1, edges)
    if dist is None:
        return None
    eps = Fraction(1, p * (2 * len(edges) + 4) * 4)
    base = dist[z][0] + dist[z][1] * eps
    return [dist[k][0] + dist[k][1] * eps - base for k in range(n)]


def realizable(cycle: list[Label], p: int, q: int) -> bool:
    return solve_angles(cycle, p, q) is not None


def wall_feasible(cycle: list[Label], p: int, q: int, k: int) -> bool:
    """Can labels at positions k and k+1 (cyclic) be brought to coincide
    while every other strict ordering is maintained?

    Realizability is invariant under rotating the basepoint gap, so the
    wrap pair (n-1, 0) is tested after rotating it into the interior.
    """
    n = len(cycle)
    if n < 2:
        return False
    if k == n - 1:
        cycle = cycle[1:] + cycle[:1]
        k = n - 2
    return solve_angles(cycle, p, q, collapse=(k, k + 1)) is not None


def min_gap(values: list[Fraction]) -> Fraction:
    """Smallest slack of the strict constraints of a solved system."""
    if not values:
        return Fraction(1)
    gaps = [values[0]] + [b - a for a, b in zip(values, values[1:])]
    gaps.append(1 - values[-1])
    positive = [g for g in gaps if g > 0]
    return min(positive) if positive else Fraction(0)
