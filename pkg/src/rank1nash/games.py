"""Bimatrix games: model types, rank tools, special-class handling, transforms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    FactorizationMismatch,
    NonPositiveScale,
    NotFullRank,
    NotRankOne,
    NotRowConstant,
)
from .linalg import RMatrix, Rational, matrix_rank, rat, solve, vdot

Matrix = tuple[tuple[Rational, ...], ...]


def _to_matrix(rows: Iterable[Iterable[Rational]]) -> Matrix:
    return tuple(tuple(rat(x) for x in row) for row in rows)


@dataclass(frozen=True)
class BimatrixGame:
    """An m x n bimatrix game with exact rational payoffs A (row), B (column)."""

    m: int
    n: int
    A: Matrix
    B: Matrix

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("need at least one strategy per player")
        for mat in (self.A, self.B):
            if len(mat) != self.m or any(len(r) != self.n for r in mat):
                raise ValueError("payoff matrix shape mismatch")

    @classmethod
    def from_payoffs(
        cls, a: Iterable[Iterable[Rational]], b: Iterable[Iterable[Rational]]
    ) -> "BimatrixGame":
        am, bm = _to_matrix(a), _to_matrix(b)
        return cls(len(am), len(am[0]) if am else 0, am, bm)

    def payoff_sum(self) -> Matrix:
        return tuple(
            tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(self.A, self.B)
        )


@dataclass(frozen=True)
class MixedStrategyPair:
    """A pair of mixed strategies; entries nonnegative, each summing to one."""

    x: tuple[Rational, ...]
    y: tuple[Rational, ...]

    def __post_init__(self):
        for v in (self.x, self.y):
            if any(p < 0 for p in v):
                raise ValueError("negative probability")
            if sum(v) != 1:
                raise ValueError("probabilities must sum to 1")

    @classmethod
    def from_vectors(
        cls, x: Iterable[Rational], y: Iterable[Rational]
    ) -> "MixedStrategyPair":
        return cls(tuple(rat(p) for p in x), tuple(rat(p) for p in y))


@dataclass(frozen=True)
class EquilibriumPoint:
    """A Nash equilibrium with its payoffs; source_xi records the sweep
    parameter it was found at, when it came out of the parametric run."""

    strategies: MixedStrategyPair
    payoff1: Rational
    payoff2: Rational
    source_xi: Rational | None = None

    def key(self) -> tuple:
        return (self.strategies.x, self.strategies.y)


@dataclass(frozen=True)
class RankOneFactorization:
    """Vectors b, c with b * c^T = A + B."""

    b: tuple[Rational, ...]
    c: tuple[Rational, ...]

    @classmethod
    def for_game(
        cls, g: BimatrixGame, b: Iterable[Rational], c: Iterable[Rational]
    ) -> "RankOneFactorization":
        bt = tuple(rat(v) for v in b)
        ct = tuple(rat(v) for v in c)
        if len(bt) != g.m or len(ct) != g.n:
            raise FactorizationMismatch("factor length mismatch")
        s = g.payoff_sum()
        for i in range(g.m):
            for j in range(g.n):
                if bt[i] * ct[j] != s[i][j]:
                    raise FactorizationMismatch(
                        f"b[{i}]*c[{j}] != (A+B)[{i}][{j}]"
                    )
        return cls(bt, ct)


def best_response_values(
    g: BimatrixGame, s: MixedStrategyPair
) -> tuple[Rational, Rational]:
    """(max_i A^(i) y, max_j x^T B_(j)): the two best-reply payoffs."""
    p1 = max(vdot(row, s.y) for row in g.A)
    p2 = max(vdot(s.x, col) for col in zip(*g.B))
    return p1, p2


def is_nash(
    g: BimatrixGame, s: MixedStrategyPair
) -> tuple[bool, Rational, Rational]:
    """Whether s is a Nash equilibrium, plus the realized payoffs (x^T A y, x^T B y)."""
    u1 = vdot(s.x, tuple(vdot(row, s.y) for row in g.A))
    u2 = vdot(s.x, tuple(vdot(row, s.y) for row in g.B))
    b1, b2 = best_response_values(g, s)
    return (u1 == b1 and u2 == b2), u1, u2


def loss(g: BimatrixGame, s: MixedStrategyPair) -> Rational:
    """Total best-reply improvement available; zero exactly at equilibria."""
    b1, b2 = best_response_values(g, s)
    csum = g.payoff_sum()
    return b1 + b2 - vdot(s.x, tuple(vdot(row, s.y) for row in csum))


def game_rank(g: BimatrixGame) -> int:
    """Rank of A + B."""
    return matrix_rank(RMatrix.from_rows(g.payoff_sum()))


def factor_rank1(g: BimatrixGame) -> RankOneFactorization:
    """Canonical factorization b * c^T of A + B for a rank-1 game.

    c is the first nonzero row of A + B; b_i = (A+B)[i][j0] / c[j0] for the
    first j0 with c[j0] != 0. Raises NotRankOne unless rank(A+B) == 1.
    """
    if game_rank(g) != 1:
        raise NotRankOne(f"rank(A+B) = {game_rank(g)}, need 1")
    s = g.payoff_sum()
    c = next(row for row in s if any(v != 0 for v in row))
    j0 = next(j for j, v in enumerate(c) if v != 0)
    b = tuple(row[j0] / c[j0] for row in s)
    return RankOneFactorization(b, c)


@dataclass(frozen=True)
class RankReduction:
    """Result of a one-step rank reduction: lam * 1 was added to A's column."""

    game: BimatrixGame
    column: int
    lam: Rational


def reduce_rank(g: BimatrixGame) -> RankReduction:
    """Drop the rank of a full-rank d x d game by one (d >= 2).

    With C = A + B nonsingular and w = C^{-1} 1, adding lam * 1 to column j of
    A changes det(C) by the factor 1 + lam * w_j, so the first j with w_j != 0
    and lam = -1/w_j produce a game of rank d-1. Such a j always exists (w = 0
    would force 1 = 0). The equilibrium set is unchanged: a constant added to
    a column of A shifts every row payoff A^(i) y by the same lam * y_j.
    """
    if g.m != g.n:
        raise NotFullRank("rank reduction needs a square game")
    if g.m < 2:
        raise NotFullRank("need d >= 2")
    if game_rank(g) != g.m:
        raise NotFullRank(f"rank(A+B) = {game_rank(g)}, need {g.m}")
    c = RMatrix.from_rows(g.payoff_sum())
    w = solve(c, (1,) * g.m)
    j = next(i for i, v in enumerate(w) if v != 0)
    lam = -1 / w[j]
    a2 = tuple(
        tuple(v + lam if jj == j else v for jj, v in enumerate(row)) for row in g.A
    )
    return RankReduction(BimatrixGame(g.m, g.n, a2, g.B), j, lam)


@dataclass(frozen=True)
class ZeroSum:
    """A + B = 0."""


@dataclass(frozen=True)
class RowConstant:
    """Every row of A + B is constant; u holds the per-row constants."""

    u: tuple[Rational, ...]


@dataclass(frozen=True)
class General:
    """Neither zero-sum nor row-constant."""


def classify_special(g: BimatrixGame) -> ZeroSum | RowConstant | General:
    s = g.payoff_sum()
    if all(v == 0 for row in s for v in row):
        return ZeroSum()
    if all(all(v == row[0] for v in row) for row in s):
        return RowConstant(tuple(row[0] for row in s))
    return General()


def reduce_row_constant(g: BimatrixGame, u: Sequence[Rational]) -> BimatrixGame:
    """Subtract u_i from row i of B, turning a row-constant game zero-sum."""
    ut = tuple(rat(v) for v in u)
    s = g.payoff_sum()
    if len(ut) != g.m or any(
        s[i][j] != ut[i] for i in range(g.m) for j in range(g.n)
    ):
        raise NotRowConstant("A + B rows are not constant at the given u")
    b2 = tuple(tuple(v - ut[i] for v in row) for i, row in enumerate(g.B))
    return BimatrixGame(g.m, g.n, g.A, b2)


@dataclass(frozen=True)
class AddToColumnOfA:
    """Add lam to every entry of A's column (0-based index)."""

    column: int
    lam: Rational


@dataclass(frozen=True)
class AddToRowOfB:
    """Add lam to every entry of B's row (0-based index)."""

    row: int
    lam: Rational


@dataclass(frozen=True)
class ScaleColumnOfA:
    """Multiply A's column by a positive factor (0-based index)."""

    column: int
    factor: Rational


@dataclass(frozen=True)
class ScaleRowOfB:
    """Multiply B's row by a positive factor (0-based index)."""

    row: int
    factor: Rational


TransformOp = AddToColumnOfA | AddToRowOfB | ScaleColumnOfA | ScaleRowOfB


def transform(g: BimatrixGame, op: TransformOp) -> BimatrixGame:
    """Apply one payoff transform, returning the modified game."""
    if isinstance(op, AddToColumnOfA):
        lam = rat(op.lam)
        a2 = tuple(
            tuple(v + lam if j == op.column else v for j, v in enumerate(row))
            for row in g.A
        )
        return BimatrixGame(g.m, g.n, a2, g.B)
    if isinstance(op, AddToRowOfB):
        lam = rat(op.lam)
        b2 = tuple(
            tuple(v + lam for v in row) if i == op.row else row
            for i, row in enumerate(g.B)
        )
        return BimatrixGame(g.m, g.n, g.A, b2)
    if isinstance(op, ScaleColumnOfA):
        f = rat(op.factor)
        if f <= 0:
            raise NonPositiveScale(f"scale factor {f} must be positive")
        a2 = tuple(
            tuple(v * f if j == op.column else v for j, v in enumerate(row))
            for row in g.A
        )
        return BimatrixGame(g.m, g.n, a2, g.B)
    if isinstance(op, ScaleRowOfB):
        f = rat(op.factor)
        if f <= 0:
            raise NonPositiveScale(f"scale factor {f} must be positive")
        b2 = tuple(
            tuple(v * f for v in row) if i == op.row else row
            for i, row in enumerate(g.B)
        )
        return BimatrixGame(g.m, g.n, g.A, b2)
    raise TypeError(f"unknown transform {op!r}")


def generate_kt(d: int) -> BimatrixGame:
    """d x d rank-1 game with at least 2d-1 equilibria.

    With 1-based indices, a_ij = 2ij - i^2 + j^2 and b_ij = 2ij + i^2 - j^2,
    so A + B = (2i * 2j)_ij has rank one.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    a = [
        [2 * i * j - i * i + j * j for j in range(1, d + 1)]
        for i in range(1, d + 1)
    ]
    b = [
        [2 * i * j + i * i - j * j for j in range(1, d + 1)]
        for i in range(1, d + 1)
    ]
    return BimatrixGame.from_payoffs(a, b)
