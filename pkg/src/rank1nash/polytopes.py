"""Best-reply polyhedra P and Q, exact vertex enumeration, label-based oracle.

Labels follow the shared 1..m+n convention: in P (over (x, pi2)) label i <= m
marks x_i = 0 and label m+j marks column j being a best reply; in Q (over
(y, pi1)) label i <= m marks row i being a best reply and label m+j marks
y_j = 0. A strategy pair is a Nash equilibrium exactly when the two vertex
label sets cover all of 1..m+n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import DegenerateGame, SingularMatrix
from .games import BimatrixGame, EquilibriumPoint, MixedStrategyPair, is_nash
from .linalg import RMatrix, Rational, rat, solve, vdot


@dataclass(frozen=True)
class LabeledPolyhedron:
    """One of the two best-reply polyhedra, as labeled inequality rows.

    Row l-1 of ``ineq`` carries label l; each row is (coeffs, rhs) with the
    convention coeffs . point <= rhs. ``eq`` is the probability constraint.
    """

    game: BimatrixGame
    which: str  # "P" or "Q"
    dim: int
    ineq: tuple[tuple[tuple[Rational, ...], Rational], ...]
    eq: tuple[tuple[Rational, ...], Rational]


@dataclass(frozen=True)
class LabeledVertex:
    point: tuple[Rational, ...]
    labels: frozenset[int]


@lru_cache(maxsize=None)
def build_polyhedron(g: BimatrixGame, which: str) -> LabeledPolyhedron:
    m, n = g.m, g.n
    if which == "P":
        dim = m + 1  # (x_1..x_m, pi2)
        rows = []
        for i in range(m):
            coeffs = tuple(-1 if k == i else 0 for k in range(m)) + (0,)
            rows.append((coeffs, 0))
        for j in range(n):
            coeffs = tuple(g.B[i][j] for i in range(m)) + (-1,)
            rows.append((coeffs, 0))
        eq = ((1,) * m + (0,), 1)
    elif which == "Q":
        dim = n + 1  # (y_1..y_n, pi1)
        rows = []
        for i in range(m):
            coeffs = tuple(g.A[i]) + (-1,)
            rows.append((coeffs, 0))
        for j in range(n):
            coeffs = tuple(-1 if k == j else 0 for k in range(n)) + (0,)
            rows.append((coeffs, 0))
        eq = ((1,) * n + (0,), 1)
    else:
        raise ValueError("which must be 'P' or 'Q'")
    norm = tuple(
        (tuple(rat(v) for v in coeffs), rat(rhs)) for coeffs, rhs in rows
    )
    return LabeledPolyhedron(
        g, which, dim, norm, (tuple(rat(v) for v in eq[0]), rat(eq[1]))
    )


@lru_cache(maxsize=None)
def enumerate_vertices(p: LabeledPolyhedron) -> tuple[LabeledVertex, ...]:
    """All vertices, each with its complete binding-label set.

    Exhausts the (dim-1)-subsets of inequality rows, solves each together
    with the probability equality, and keeps feasible solutions. Label sets
    are recomputed from the point so coincidental extra bindings (degenerate
    inputs) are reported faithfully.
    """
    nlab = len(p.ineq)
    seen: dict[tuple, LabeledVertex] = {}
    for subset in combinations(range(1, nlab + 1), p.dim - 1):
        rows = [p.ineq[l - 1][0] for l in subset] + [p.eq[0]]
        rhs = [p.ineq[l - 1][1] for l in subset] + [p.eq[1]]
        try:
            point = solve(RMatrix.from_rows(rows), rhs)
        except SingularMatrix:
            continue
        if any(
            vdot(coeffs, point) > rhs_l for coeffs, rhs_l in p.ineq
        ):
            continue
        if point in seen:
            continue
        labels = frozenset(
            l
            for l, (coeffs, rhs_l) in enumerate(p.ineq, start=1)
            if vdot(coeffs, point) == rhs_l
        )
        seen[point] = LabeledVertex(point, labels)
    return tuple(sorted(seen.values(), key=lambda v: v.point))


def check_nondegenerate(
    g: BimatrixGame,
) -> tuple[bool, LabeledVertex | None]:
    """True when no P-vertex exceeds m labels and no Q-vertex exceeds n.

    On failure the offending vertex is returned as witness.
    """
    for which, bound in (("P", g.m), ("Q", g.n)):
        for v in enumerate_vertices(build_polyhedron(g, which)):
            if len(v.labels) != bound:
                return False, v
    return True, None


def equilibria_by_labels(g: BimatrixGame) -> tuple[EquilibriumPoint, ...]:
    """All Nash equilibria of a non-degenerate game, via label covering."""
    ok, witness = check_nondegenerate(g)
    if not ok:
        pt = "(" + ", ".join(str(v) for v in witness.point) + ")"
        raise DegenerateGame(
            f"vertex {pt} carries labels {sorted(witness.labels)}",
            witness=witness,
        )
    full = frozenset(range(1, g.m + g.n + 1))
    out = []
    pv = enumerate_vertices(build_polyhedron(g, "P"))
    qv = enumerate_vertices(build_polyhedron(g, "Q"))
    for vp in pv:
        for vq in qv:
            if vp.labels | vq.labels != full:
                continue
            s = MixedStrategyPair(vp.point[: g.m], vq.point[: g.n])
            eq = EquilibriumPoint(
                s, payoff1=vq.point[g.n], payoff2=vp.point[g.m]
            )
            flag, _, _ = is_nash(g, s)
            assert flag, "completely labeled pair failed the equilibrium check"
            out.append(eq)
    return tuple(sorted(out, key=lambda e: e.key()))
