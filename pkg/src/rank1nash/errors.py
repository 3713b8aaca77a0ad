"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class Rank1NashError(Exception):
    """Base class for every error raised by this package."""


class SingularMatrix(Rank1NashError):
    """Square solve attempted on a singular matrix."""


class IrrationalInteriorZero(Rank1NashError):
    """A quadratic has an irrational root strictly inside the query interval."""


class IdenticallyZero(Rank1NashError):
    """The quadratic is the zero polynomial; its zero set is not finite."""


class NotRankOne(Rank1NashError):
    """Operation requires a payoff-sum matrix of rank exactly one."""


class NotFullRank(Rank1NashError):
    """Operation requires a square payoff-sum matrix of full rank."""


class NotRowConstant(Rank1NashError):
    """Operation requires every row of the payoff-sum matrix to be constant."""


class NonPositiveScale(Rank1NashError):
    """Scaling transforms require a strictly positive factor."""


class FactorizationMismatch(Rank1NashError):
    """Supplied rank-1 factors do not multiply out to the payoff-sum matrix."""


class DegenerateGame(Rank1NashError):
    """The game is degenerate; enumeration contracts do not apply.

    The offending vertex (or other witness) is attached when available.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SingularBasis(Rank1NashError):
    """Basis rows plus equality rows form a singular square system."""


class EmptyInterval(Rank1NashError):
    """A basis is optimal for no parameter value."""


class Stalled(Rank1NashError):
    """No verifiable pivot advances the sweep past the current breakpoint."""


class Infeasible(Rank1NashError):
    """No optimal basis exists at the requested parameter value."""


class UnboundedObjective(Rank1NashError):
    """The parametric objective is unbounded; signals a construction bug."""


class GameFileError(Rank1NashError):
    """Game file (or inline game text) failed to parse."""
