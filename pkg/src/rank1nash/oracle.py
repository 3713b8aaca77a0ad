"""Support enumeration: an independent equilibrium solver for cross-checks.

Deliberately shares no machinery with the polyhedron or parametric paths
beyond the rational type, so agreement between the three is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .games import BimatrixGame, EquilibriumPoint, MixedStrategyPair, is_nash
from .linalg import Rational, rat, vdot


@dataclass(frozen=True)
class OracleResult:
    """Equilibria found, plus a flag when the search saw signs of degeneracy
    (zero probability on a claimed support, or an off-support best reply)."""

    equilibria: tuple[EquilibriumPoint, ...]
    degenerate_suspect: bool


def _solve_unique(rows: list[list[Rational]], rhs: list[Rational]):
    """Row-reduce; classify the system as none / unique / many solutions."""
    nc = len(rows[0])
    a = [[rat(v) for v in row] + [rat(r)] for row, r in zip(rows, rhs)]
    nr = len(a)
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = prow = [v * inv for v in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], prow)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    if any(a[i][nc] != 0 for i in range(r, nr)):
        return "none", None
    sol = [rat(0)] * nc
    for i, c in enumerate(pivots):
        sol[c] = a[i][nc]
    # under-determined systems still yield the basic solution (free vars 0)
    return ("many" if len(pivots) < nc else "unique"), tuple(sol)


def support_enumeration(g: BimatrixGame, strict: bool = False) -> OracleResult:
    """Enumerate equilibria by candidate supports.

    Non-degenerate games only need equal-size supports; ``strict`` widens the
    scan to all size pairs for suspect inputs (solvable candidates there are
    over/under-determined and any hit is itself evidence of degeneracy).
    """
    m, n = g.m, g.n
    if strict:
        size_pairs = [(k1, k2) for k1 in range(1, m + 1) for k2 in range(1, n + 1)]
    else:
        size_pairs = [(k, k) for k in range(1, min(m, n) + 1)]
    found: dict[tuple, EquilibriumPoint] = {}
    suspect = False
    for k1, k2 in size_pairs:
        for s1 in combinations(range(m), k1):
            for s2 in combinations(range(n), k2):
                # y and the row value u: rows of s1 indifferent, y sums to 1
                rows = [
                    [g.A[i][j] for j in s2] + [-1] for i in s1
                ] + [[1] * k2 + [0]]
                st1, sol = _solve_unique(rows, [0] * k1 + [1])
                if st1 == "none":
                    continue
                yvals, u = sol[:k2], sol[k2]
                # x and the column value v: columns of s2 indifferent
                cols = [
                    [g.B[i][j] for i in s1] + [-1] for j in s2
                ] + [[1] * k1 + [0]]
                st2, sol = _solve_unique(cols, [0] * k2 + [1])
                if st2 == "none":
                    continue
                xvals, v = sol[:k1], sol[k1]
                if "many" in (st1, st2):
                    if k1 == k2:
                        # a square indifference system with free variables
                        # hints at a continuum of solutions
                        suspect = True
                        continue
                    # unequal sizes are under-determined by construction;
                    # only a fully verified basic solution means anything,
                    # and such a hit itself proves degeneracy
                    if any(p < 0 for p in xvals) or any(p < 0 for p in yvals):
                        continue
                    x = [rat(0)] * m
                    for i, p in zip(s1, xvals):
                        x[i] = p
                    y = [rat(0)] * n
                    for j, p in zip(s2, yvals):
                        y[j] = p
                    ok, u1, u2 = is_nash(
                        g, MixedStrategyPair(tuple(x), tuple(y))
                    )
                    if ok:
                        suspect = True
                        eq = EquilibriumPoint(
                            MixedStrategyPair(tuple(x), tuple(y)),
                            payoff1=u1,
                            payoff2=u2,
                        )
                        found.setdefault(eq.key(), eq)
                    continue
                if any(p < 0 for p in xvals) or any(p < 0 for p in yvals):
                    continue
                if any(p == 0 for p in xvals) or any(p == 0 for p in yvals):
                    suspect = True
                    continue
                x = [rat(0)] * m
                for i, p in zip(s1, xvals):
                    x[i] = p
                y = [rat(0)] * n
                for j, p in zip(s2, yvals):
                    y[j] = p
                off_rows = [vdot(g.A[i], y) for i in range(m) if i not in s1]
                off_cols = [
                    vdot(x, [g.B[i][j] for i in range(m)])
                    for j in range(n)
                    if j not in s2
                ]
                if any(w > u for w in off_rows) or any(w > v for w in off_cols):
                    continue
                if any(w == u for w in off_rows) or any(w == v for w in off_cols):
                    suspect = True
                eq = EquilibriumPoint(
                    MixedStrategyPair(tuple(x), tuple(y)), payoff1=u, payoff2=v
                )
                found.setdefault(eq.key(), eq)
    ordered = tuple(sorted(found.values(), key=lambda e: e.key()))
    return OracleResult(ordered, suspect)
