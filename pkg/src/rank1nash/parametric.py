"""Parametric enumeration of all equilibria of a non-degenerate rank-1 game.

With A + B = b c^T the equilibrium condition becomes a one-parameter family
of LPs: fix xi = c^T y, maximize (x^T b) xi - pi1 - pi2 over the product of
the two best-reply polyhedra sliced at c^T y = xi. The optimal value is a
piecewise quadratic in xi, nonpositive everywhere, and its zeros are exactly
the equilibria. The sweep walks optimal bases of this LP from xi_min to
xi_max, collecting the zeros of each basis objective.

Constraint rows of M1 (1-based, z = (x, y, pi1, pi2), K = 2(m+n) rows):
rows 1..m are -x <= 0, rows m+1..m+n are B^T x <= 1 pi2, rows m+n+1..m+n+m
are A y <= 1 pi1, rows m+n+m+1..K are -y <= 0. M2 holds the equalities
1^T x = 1, 1^T y = 1, c^T y = xi. A basis keeps m of the P-side rows
(1..m+n) and n-1 of the Q-side rows tight; with the three equality rows that
is a square system in the m+n+2 unknowns.

The LP decomposes: P-side rows touch (x, pi2) only, so their basis solution
is constant in xi while their dual multipliers are affine; Q-side rows touch
(y, pi1), affine in xi with constant duals. Feasibility breakpoints therefore
always name a Q-side row and optimality breakpoints a P-side row, and pivots
stay within one side.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    DegenerateGame,
    EmptyInterval,
    FactorizationMismatch,
    IdenticallyZero,
    Infeasible,
    NotRankOne,
    SingularBasis,
    SingularMatrix,
    Stalled,
    UnboundedObjective,
)
from .games import (
    BimatrixGame,
    EquilibriumPoint,
    General,
    MixedStrategyPair,
    RankOneFactorization,
    RowConstant,
    ZeroSum,
    classify_special,
    factor_rank1,
    is_nash,
    reduce_row_constant,
)
from .linalg import (
    AffineRVector,
    QuadraticR,
    RMatrix,
    Rational,
    quadratic_zeros_in_interval,
    rat,
    solve_square,
    vdot,
)
from .polytopes import build_polyhedron, check_nondegenerate, enumerate_vertices


@dataclass(frozen=True)
class ParametricTableau:
    game: BimatrixGame
    factorization: RankOneFactorization
    m1: RMatrix  # K x N
    e1: tuple[Rational, ...]  # K zeros
    m2: RMatrix  # 3 x N
    e2_const: tuple[Rational, ...]  # (1, 1, 0)
    e2_slope: tuple[Rational, ...]  # (0, 0, 1)
    dual_rhs_const: tuple[Rational, ...]  # (0,...,0, -1, -1)
    dual_rhs_slope: tuple[Rational, ...]  # (b, 0,...,0, 0, 0)

    @property
    def m(self) -> int:
        return self.game.m

    @property
    def n(self) -> int:
        return self.game.n

    @property
    def k_rows(self) -> int:
        return 2 * (self.game.m + self.game.n)

    @property
    def n_vars(self) -> int:
        return self.game.m + self.game.n + 2


def build_tableau(
    g: BimatrixGame, factorization: RankOneFactorization | None = None
) -> ParametricTableau:
    """Assemble M1, M2 and the dual right-hand side for the parametric LP."""
    s = g.payoff_sum()
    f = factorization
    if f is None:
        if all(v == 0 for row in s for v in row):
            f = RankOneFactorization((rat(0),) * g.m, (rat(0),) * g.n)
        else:
            f = factor_rank1(g)
    for i in range(g.m):
        for j in range(g.n):
            if f.b[i] * f.c[j] != s[i][j]:
                raise FactorizationMismatch("b c^T != A + B")
    m, n = g.m, g.n
    nv = m + n + 2
    rows = []
    for i in range(m):  # -x_i <= 0
        rows.append([-1 if k == i else 0 for k in range(m)] + [0] * (n + 2))
    for j in range(n):  # x^T B_(j) <= pi2
        rows.append(
            [g.B[i][j] for i in range(m)] + [0] * n + [0, -1]
        )
    for i in range(m):  # A^(i) y <= pi1
        rows.append([0] * m + list(g.A[i]) + [-1, 0])
    for j in range(n):  # -y_j <= 0
        rows.append([0] * m + [-1 if k == j else 0 for k in range(n)] + [0, 0])
    m1 = RMatrix.from_rows(rows)
    m2 = RMatrix.from_rows(
        [
            [1] * m + [0] * n + [0, 0],
            [0] * m + [1] * n + [0, 0],
            [0] * m + list(f.c) + [0, 0],
        ]
    )
    return ParametricTableau(
        game=g,
        factorization=f,
        m1=m1,
        e1=(rat(0),) * (2 * (m + n)),
        m2=m2,
        e2_const=(rat(1), rat(1), rat(0)),
        e2_slope=(rat(0), rat(0), rat(1)),
        dual_rhs_const=(rat(0),) * (m + n) + (rat(-1), rat(-1)),
        dual_rhs_slope=tuple(f.b) + (rat(0),) * n + (rat(0), rat(0)),
    )


def xi_range(t: ParametricTableau) -> tuple[Rational, Rational]:
    """Feasible range of xi = c^T y over the strategy simplex."""
    return min(t.factorization.c), max(t.factorization.c)


@dataclass(frozen=True)
class ParametricBasis:
    """m P-side labels and n-1 Q-side labels, each within 1..m+n."""

    i_labels: frozenset[int]
    j_labels: frozenset[int]
    m: int
    n: int

    def __post_init__(self):
        span = range(1, self.m + self.n + 1)
        if not (set(self.i_labels) <= set(span) and set(self.j_labels) <= set(span)):
            raise ValueError("labels out of range")
        if len(self.i_labels) != self.m or len(self.j_labels) != self.n - 1:
            raise ValueError("basis needs m P-labels and n-1 Q-labels")

    @property
    def rows(self) -> tuple[int, ...]:
        """Global 1-based M1 row indices, ascending."""
        off = self.m + self.n
        return tuple(
            sorted(self.i_labels | {off + l for l in self.j_labels})
        )

    @classmethod
    def from_rows(cls, rows, m: int, n: int) -> "ParametricBasis":
        off = m + n
        i_l = frozenset(r for r in rows if r <= off)
        j_l = frozenset(r - off for r in rows if r > off)
        return cls(i_l, j_l, m, n)


def _row_side(t: ParametricTableau, row: int) -> str:
    return "P" if row <= t.m + t.n else "Q"


def solve_basis(
    t: ParametricTableau, basis: ParametricBasis
) -> tuple[AffineRVector, AffineRVector]:
    """Affine primal z(xi) and full dual u(xi) (length K+3) for one basis."""
    rows = basis.rows
    s = RMatrix.from_rows(
        [t.m1.entries[r - 1] for r in rows] + list(t.m2.entries)
    )
    nb = len(rows)
    try:
        z = solve_square(
            s,
            (rat(0),) * nb + t.e2_const,
            (rat(0),) * nb + t.e2_slope,
        )
        w = solve_square(s.transpose(), t.dual_rhs_const, t.dual_rhs_slope)
    except SingularMatrix as exc:
        raise SingularBasis(str(exc)) from exc
    k = t.k_rows
    uc = [rat(0)] * (k + 3)
    us = [rat(0)] * (k + 3)
    for pos, r in enumerate(rows):
        uc[r - 1] = w.const[pos]
        us[r - 1] = w.slope[pos]
    for pos in range(3):
        uc[k + pos] = w.const[nb + pos]
        us[k + pos] = w.slope[nb + pos]
    return z, AffineRVector(tuple(uc), tuple(us))


@dataclass(frozen=True)
class BasisInterval:
    """One maximal xi-interval on which a basis stays optimal.

    alpha2 is the first xi where primal feasibility breaks (alpha2_row names
    the violated M1 row), beta2 the first where a basic dual multiplier goes
    negative (beta2_row names it); xi2 = min of the two.
    """

    basis: ParametricBasis
    z: AffineRVector
    u: AffineRVector
    xi1: Rational
    xi2: Rational
    alpha2: Rational | None
    beta2: Rational | None
    alpha2_row: int | None
    beta2_row: int | None
    objective: QuadraticR

    @property
    def case(self) -> str | None:
        hits_a = self.alpha2 is not None and self.alpha2 == self.xi2
        hits_b = self.beta2 is not None and self.beta2 == self.xi2
        if hits_a and hits_b:
            return "Both"
        if hits_a:
            return "Feasibility"
        if hits_b:
            return "Optimality"
        return None


def basis_interval(t: ParametricTableau, basis: ParametricBasis) -> BasisInterval:
    z, u = solve_basis(t, basis)
    lo = hi = None
    lo_row = hi_row = None
    a2 = a2_row = None
    b2 = b2_row = None

    def push(bound, row, upper):
        nonlocal lo, hi, lo_row, hi_row
        if upper:
            if hi is None or bound < hi:
                hi, hi_row = bound, row
        else:
            if lo is None or bound > lo:
                lo, lo_row = bound, row

    # primal rows: (M1 z)(xi) <= 0
    for idx, row in enumerate(t.m1.entries, start=1):
        c = vdot(row, z.const)
        s = vdot(row, z.slope)
        if s == 0:
            if c > 0:
                raise EmptyInterval(f"row {idx} infeasible for every xi")
            continue
        bound = -c / s
        if s > 0:
            if a2 is None or bound < a2 or (bound == a2 and idx < a2_row):
                a2, a2_row = bound, idx
            push(bound, idx, upper=True)
        else:
            push(bound, idx, upper=False)
    # dual rows: u_l(xi) >= 0 on basic rows
    for r in basis.rows:
        c, s = u.const[r - 1], u.slope[r - 1]
        if s == 0:
            if c < 0:
                raise EmptyInterval(f"dual of row {r} negative for every xi")
            continue
        bound = -c / s
        if s < 0:
            if b2 is None or bound < b2 or (bound == b2 and r < b2_row):
                b2, b2_row = bound, r
            push(bound, r, upper=True)
        else:
            push(bound, r, upper=False)

    if hi is None:
        raise UnboundedObjective("no upper bound on the optimality interval")
    if lo is None:
        raise UnboundedObjective("no lower bound on the optimality interval")
    if lo > hi:
        raise EmptyInterval(f"basis optimal on no xi (got [{lo}, {hi}])")

    m, n = t.m, t.n
    pc = vdot(t.factorization.b, z.const[:m])
    ps = vdot(t.factorization.b, z.slope[:m])
    pi1c, pi1s = z.const[m + n], z.slope[m + n]
    pi2c, pi2s = z.const[m + n + 1], z.slope[m + n + 1]
    obj = QuadraticR(c0=-pi1c - pi2c, c1=pc - pi1s - pi2s, c2=ps)
    return BasisInterval(
        basis=basis,
        z=z,
        u=u,
        xi1=lo,
        xi2=hi,
        alpha2=a2,
        beta2=b2,
        alpha2_row=a2_row,
        beta2_row=b2_row,
        objective=obj,
    )


def equilibria_on_interval(
    t: ParametricTableau, iv: BasisInterval
) -> tuple[EquilibriumPoint, ...]:
    """Zeros of the interval objective, converted to equilibria."""
    try:
        zeros = quadratic_zeros_in_interval(
            iv.objective, iv.xi1, iv.xi2, nonpositive_hint=True
        )
    except IdenticallyZero as exc:
        raise DegenerateGame(
            "objective vanishes on a whole interval; equilibria form a continuum"
        ) from exc
    m, n = t.m, t.n
    out = []
    for xi in zeros:
        zv = iv.z.at(xi)
        s = MixedStrategyPair(zv[:m], zv[m : m + n])
        flag, _, _ = is_nash(t.game, s)
        assert flag, "objective zero failed the equilibrium check"
        out.append(
            EquilibriumPoint(
                s,
                payoff1=zv[m + n],
                payoff2=zv[m + n + 1],
                source_xi=xi,
            )
        )
    return tuple(out)


def initial_basis(t: ParametricTableau, xi: Rational) -> ParametricBasis:
    """An optimal basis at xi, built from the two sides independently.

    P side: vertices of P ranked by xi b^T x - pi2 (descending). Q side:
    vertices of Q sliced with c^T y = xi, found by solving every (n-1)-subset
    of Q rows against the two equalities, ranked by pi1 (ascending). The
    first pair whose combined basis is optimal at xi (its interval contains
    xi) is returned; ranking makes that almost always the first try, while
    degenerate slice endpoints fall through to the next candidate.
    """
    xi = rat(xi)
    m, n = t.m, t.n
    g = t.game
    b, c = t.factorization.b, t.factorization.c

    p_cands = []
    for v in enumerate_vertices(build_polyhedron(g, "P")):
        if len(v.labels) != m:
            continue
        value = xi * vdot(b, v.point[:m]) - v.point[m]
        p_cands.append((value, tuple(sorted(v.labels))))
    p_cands.sort(key=lambda kv: (-kv[0], kv[1]))

    q_poly = build_polyhedron(g, "Q")
    q_cands = []
    for j_labels in combinations(range(1, m + n + 1), n - 1):
        rows = [q_poly.ineq[l - 1][0] for l in j_labels]
        rhs = [q_poly.ineq[l - 1][1] for l in j_labels]
        rows.append(q_poly.eq[0])
        rhs.append(q_poly.eq[1])
        rows.append(tuple(c) + (rat(0),))
        rhs.append(xi)
        try:
            point = solve_square(RMatrix.from_rows(rows), rhs).const
        except SingularMatrix:
            continue
        if any(
            vdot(coeffs, point) > r for coeffs, r in q_poly.ineq
        ):
            continue
        q_cands.append((point[n], j_labels))
    q_cands.sort(key=lambda kv: (kv[0], kv[1]))

    for _, i_labels in p_cands:
        for _, j_labels in q_cands:
            basis = ParametricBasis(
                frozenset(i_labels), frozenset(j_labels), m, n
            )
            try:
                iv = basis_interval(t, basis)
            except (SingularBasis, EmptyInterval):
                continue
            if iv.xi1 <= xi <= iv.xi2:
                return basis
    raise Infeasible(f"no optimal basis found at xi = {xi}")


def advance(t: ParametricTableau, iv: BasisInterval) -> ParametricBasis:
    """The basis taking over just past iv.xi2.

    Candidate swaps come from the breakpoint kind: past a feasibility
    breakpoint the violated row enters and a same-side basic row leaves;
    past an optimality breakpoint the row with the vanishing dual leaves
    and a same-side nonbasic row enters. Each candidate is accepted only
    if its own interval certifies optimality at xi2, strict progress
    preferred. Exact arithmetic makes the certificate sound.
    """
    xi2 = iv.xi2
    case = iv.case
    if case is None:
        raise Stalled(f"interval of basis {iv.basis.rows} has no breakpoint")
    basis_rows = set(iv.basis.rows)
    cands: list[tuple[int, int]] = []  # (leaving, entering)
    if case in ("Feasibility", "Both"):
        enter = iv.alpha2_row
        side = _row_side(t, enter)
        for leave in sorted(r for r in basis_rows if _row_side(t, r) == side):
            cands.append((leave, enter))
    if case in ("Optimality", "Both"):
        leave = iv.beta2_row
        side = _row_side(t, leave)
        for enter in sorted(
            r
            for r in range(1, t.k_rows + 1)
            if r not in basis_rows and _row_side(t, r) == side
        ):
            cands.append((leave, enter))

    fallback = None
    for leave, enter in cands:
        rows = (basis_rows - {leave}) | {enter}
        nb = ParametricBasis.from_rows(rows, t.m, t.n)
        try:
            new_iv = basis_interval(t, nb)
        except (SingularBasis, EmptyInterval):
            continue
        if not (new_iv.xi1 <= xi2 <= new_iv.xi2):
            continue
        if new_iv.xi2 > xi2:
            return nb
        if fallback is None:
            fallback = nb
    if fallback is not None:
        return fallback
    raise Stalled(f"no verifiable pivot at xi = {xi2}")


@dataclass(frozen=True)
class BreakpointRecord:
    xi: Rational
    kind: str  # "Feasibility" | "Optimality" | "Both"
    leaving: int  # global 1-based M1 row
    entering: int


@dataclass(frozen=True)
class SweepTrace:
    """Everything the enumeration saw: one entry per visited basis."""

    game: BimatrixGame
    factorization: RankOneFactorization | None
    dispatch: str  # "general" | "zero-sum" | "row-constant"
    xi_min: Rational
    xi_max: Rational
    intervals: tuple[BasisInterval, ...]
    breakpoints: tuple[BreakpointRecord, ...]
    equilibria: tuple[EquilibriumPoint, ...]


def _minimax_vertex(g: BimatrixGame, which: str):
    """Unique payoff-minimizing vertex of P or Q; ties mean degeneracy."""
    verts = enumerate_vertices(build_polyhedron(g, which))
    last = g.m if which == "P" else g.n
    best = min(v.point[last] for v in verts)
    hits = [v for v in verts if v.point[last] == best]
    if len(hits) != 1:
        raise DegenerateGame(
            f"{which} has {len(hits)} payoff-minimizing vertices",
            witness=hits[0],
        )
    return hits[0]


def _solve_special(
    g: BimatrixGame, dispatch: str, source_xi: Rational
) -> EquilibriumPoint:
    """Zero-sum core: best guaranteed payoffs on both sides meet at the
    unique equilibrium. Row-constant games reduce to this after shifting B."""
    cls = classify_special(g)
    if isinstance(cls, RowConstant):
        reduced = reduce_row_constant(g, cls.u)
    else:
        reduced = g
    vp = _minimax_vertex(reduced, "P")
    vq = _minimax_vertex(reduced, "Q")
    s = MixedStrategyPair(vp.point[: g.m], vq.point[: g.n])
    flag, u1, u2 = is_nash(g, s)
    assert flag, f"{dispatch} candidate failed the equilibrium check"
    return EquilibriumPoint(s, payoff1=u1, payoff2=u2, source_xi=source_xi)


def enumerate_all(
    g: BimatrixGame, factorization: RankOneFactorization | None = None
) -> SweepTrace:
    """All Nash equilibria of a non-degenerate game with rank(A+B) <= 1.

    Zero-sum games (A+B = 0) and row-constant games collapse to a single LP
    and contribute their unique equilibrium; everything else runs the
    parametric sweep. NotRankOne is raised when rank(A+B) >= 2,
    DegenerateGame when the non-degeneracy check fails.
    """
    ok, witness = check_nondegenerate(g)
    if not ok:
        pt = "(" + ", ".join(str(v) for v in witness.point) + ")"
        raise DegenerateGame(
            f"vertex {pt} carries labels {sorted(witness.labels)}",
            witness=witness,
        )
    cls = classify_special(g)
    if isinstance(cls, ZeroSum):
        eq = _solve_special(g, "zero-sum", rat(0))
        return SweepTrace(
            g, None, "zero-sum", rat(0), rat(0), (), (), (eq,)
        )
    if isinstance(cls, RowConstant):
        f = factor_rank1(g)
        xi = f.c[0]
        eq = _solve_special(g, "row-constant", xi)
        return SweepTrace(g, f, "row-constant", xi, xi, (), (), (eq,))

    f = factorization if factorization is not None else factor_rank1(g)
    t = build_tableau(g, f)
    lo, hi = xi_range(t)
    basis = initial_basis(t, lo)
    intervals: list[BasisInterval] = []
    breakpoints: list[BreakpointRecord] = []
    found: dict[tuple, EquilibriumPoint] = {}
    visited: set[tuple[int, ...]] = set()
    while True:
        key = basis.rows
        if key in visited:
            raise Stalled(f"basis {key} revisited; sweep is cycling")
        visited.add(key)
        iv = basis_interval(t, basis)
        intervals.append(iv)
        for eq in equilibria_on_interval(t, iv):
            found.setdefault(eq.key(), eq)
        if iv.xi2 >= hi:
            break
        nxt = advance(t, iv)
        leaving = set(iv.basis.rows) - set(nxt.rows)
        entering = set(nxt.rows) - set(iv.basis.rows)
        breakpoints.append(
            BreakpointRecord(
                iv.xi2, iv.case, min(leaving), min(entering)
            )
        )
        basis = nxt
    return SweepTrace(
        g,
        f,
        "general",
        lo,
        hi,
        tuple(intervals),
        tuple(breakpoints),
        tuple(sorted(found.values(), key=lambda e: e.key())),
    )


def binding_rows(t: ParametricTableau, zvals) -> frozenset[int]:
    """1-based M1 rows tight at the given primal point."""
    return frozenset(
        idx
        for idx, row in enumerate(t.m1.entries, start=1)
        if vdot(row, zvals) == 0
    )


@dataclass(frozen=True)
class TraceRow:
    """One line of the sweep table: a breakpoint or an open interval."""

    kind: str  # "point" | "interval"
    xi: Rational | None
    span: tuple[Rational, Rational] | None
    objective: Rational | None  # exact value at points, None on intervals
    binding: frozenset[int]


def sweep_table(t: ParametricTableau, trace: SweepTrace) -> tuple[TraceRow, ...]:
    """The breakpoint/interval table for a general sweep.

    Point rows carry the union of binding rows over every basis optimal
    there (adjacent bases both contribute at a breakpoint); interval rows
    carry the rows tight throughout the open interval.
    """
    ivs = trace.intervals
    if not ivs:
        return ()
    points: list[Rational] = []
    for iv in ivs:
        for v in (iv.xi1, iv.xi2):
            if not points or v != points[-1]:
                points.append(v)

    def binding_at(xi):
        rows: frozenset[int] = frozenset()
        objs = []
        for iv in ivs:
            if iv.xi1 <= xi <= iv.xi2:
                rows |= binding_rows(t, iv.z.at(xi))
                objs.append(iv.objective.at(xi))
        assert objs and all(o == objs[0] for o in objs)
        return rows, objs[0]

    out: list[TraceRow] = []
    for idx, xi in enumerate(points):
        rows, obj = binding_at(xi)
        out.append(TraceRow("point", xi, None, obj, rows))
        if idx + 1 < len(points):
            nxt = points[idx + 1]
            mid = (xi + nxt) / 2
            iv = next(
                v for v in ivs if v.xi1 <= xi and nxt <= v.xi2
            )
            out.append(
                TraceRow(
                    "interval",
                    None,
                    (xi, nxt),
                    None,
                    binding_rows(t, iv.z.at(mid)),
                )
            )
    return tuple(out)


def zero_sum_dual_coincidence(t: ParametricTableau) -> bool:
    """Verify that at xi = 0 the dual of a zero-sum tableau is the primal.

    Reading the dual equations (M1^T | M2^T) u = rhs component by component
    and substituting x_i = u_{m+n+i}, y_j = u_{m+j}, pi1 = u_{K+1},
    pi2 = u_{K+2} must reproduce the primal rows, with u_1..u_m and
    u_{2m+n+1}..u_K acting as slacks and the objectives additive inverses.
    """
    g = t.game
    m, n = t.m, t.n
    k = t.k_rows
    assert all(v == 0 for v in t.factorization.b)
    assert all(v == 0 for v in t.factorization.c)

    def dual_coeff(comp: int, l: int) -> Rational:
        # coefficient of u_l (1-based) in dual equation for z-component comp
        if l <= k:
            return t.m1.entries[l - 1][comp]
        return t.m2.entries[l - k - 1][comp]

    # x_i equations ~ primal rows m+n+i (A y <= 1 pi1), slack u_i
    for i in range(m):
        prim = t.m1.entries[m + n + i]
        for j in range(n):
            if dual_coeff(i, m + 1 + j) != -prim[m + j]:
                return False
        if dual_coeff(i, k + 1) != -prim[m + n]:  # pi1 slot
            return False
        if dual_coeff(i, i + 1) != -1:
            return False
        others = set(range(1, k + 4)) - {i + 1, k + 1} - {m + 1 + j for j in range(n)}
        if any(dual_coeff(i, l) != 0 for l in others):
            return False
        if t.dual_rhs_const[i] != 0 or t.dual_rhs_slope[i] != 0:
            return False
    # y_j equations ~ primal rows m+j (B^T x <= 1 pi2), slack u_{2m+n+j}
    for j in range(n):
        comp = m + j
        prim = t.m1.entries[m + j]
        for i in range(m):
            if dual_coeff(comp, m + n + 1 + i) != -prim[i]:
                return False
        if dual_coeff(comp, k + 2) != -prim[m + n + 1]:  # pi2 slot
            return False
        if dual_coeff(comp, 2 * m + n + 1 + j) != -1:
            return False
        others = (
            set(range(1, k + 4))
            - {2 * m + n + 1 + j, k + 2}
            - {m + n + 1 + i for i in range(m)}
        )
        if any(dual_coeff(comp, l) != 0 for l in others):
            return False
        if t.dual_rhs_const[comp] != 0 or t.dual_rhs_slope[comp] != 0:
            return False
    # pi1 equation ~ 1^T x~ = 1; pi2 equation ~ 1^T y~ = 1
    comp = m + n
    for i in range(m):
        if dual_coeff(comp, m + n + 1 + i) != -1:
            return False
    others = set(range(1, k + 4)) - {m + n + 1 + i for i in range(m)}
    if any(dual_coeff(comp, l) != 0 for l in others):
        return False
    if t.dual_rhs_const[comp] != -1:
        return False
    comp = m + n + 1
    for j in range(n):
        if dual_coeff(comp, m + 1 + j) != -1:
            return False
    others = set(range(1, k + 4)) - {m + 1 + j for j in range(n)}
    if any(dual_coeff(comp, l) != 0 for l in others):
        return False
    if t.dual_rhs_const[comp] != -1:
        return False
    # objectives: dual minimizes u_{K+1} + u_{K+2} (+ 0 * u_{K+3} at xi = 0),
    # i.e. pi1 + pi2, the additive inverse of the primal max -pi1 - pi2
    if any(v != 0 for v in t.e1):
        return False
    if t.e2_const != (1, 1, 0) or t.e2_slope != (0, 0, 1):
        return False
    return True
