"""Exact enumeration of Nash equilibria in rank-1 bimatrix games.

The central entry point is :func:`enumerate_all`, which sweeps a scalar
parameter across a one-dimensional family of linear programs whose optimal
objective touches zero exactly at the equilibria of the game.  Two
independent slower methods, :func:`support_enumeration` and
:func:`equilibria_by_labels`, are provided for cross-checking, along with
label-dropping path analysis (:func:`lh_run`, :func:`reachability`,
:func:`gprime_components`) over the best-response polyhedra.
"""

from .errors import (
    DegenerateGame,
    EmptyInterval,
    FactorizationMismatch,
    GameFileError,
    IdenticallyZero,
    Infeasible,
    IrrationalInteriorZero,
    NonPositiveScale,
    NotFullRank,
    NotRankOne,
    NotRowConstant,
    Rank1NashError,
    SingularBasis,
    SingularMatrix,
    Stalled,
    UnboundedObjective,
)
from .linalg import rat
from .games import (
    AddToColumnOfA,
    AddToRowOfB,
    BimatrixGame,
    EquilibriumPoint,
    General,
    MixedStrategyPair,
    RankOneFactorization,
    RankReduction,
    RowConstant,
    ScaleColumnOfA,
    ScaleRowOfB,
    ZeroSum,
    best_response_values,
    classify_special,
    factor_rank1,
    game_rank,
    generate_kt,
    is_nash,
    loss,
    reduce_rank,
    reduce_row_constant,
    transform,
)
from .gamefile import format_game, load_game, parse_game
from .polytopes import (
    LabeledPolyhedron,
    LabeledVertex,
    build_polyhedron,
    check_nondegenerate,
    enumerate_vertices,
    equilibria_by_labels,
)
from .oracle import OracleResult, support_enumeration
from .lemke_howson import (
    GPrimeReport,
    LHGraph,
    LHPath,
    ReachabilityReport,
    build_lh_graphs,
    gprime_components,
    lh_run,
    reachability,
)
from .parametric import (
    BasisInterval,
    BreakpointRecord,
    ParametricBasis,
    ParametricTableau,
    SweepTrace,
    TraceRow,
    advance,
    basis_interval,
    binding_rows,
    build_tableau,
    enumerate_all,
    equilibria_on_interval,
    initial_basis,
    solve_basis,
    sweep_table,
    xi_range,
    zero_sum_dual_coincidence,
)

__version__ = "1.0.0"

__all__ = [
    "AddToColumnOfA",
    "AddToRowOfB",
    "BasisInterval",
    "BimatrixGame",
    "BreakpointRecord",
    "DegenerateGame",
    "EmptyInterval",
    "EquilibriumPoint",
    "FactorizationMismatch",
    "GPrimeReport",
    "GameFileError",
    "General",
    "IdenticallyZero",
    "Infeasible",
    "IrrationalInteriorZero",
    "LHGraph",
    "LHPath",
    "LabeledPolyhedron",
    "LabeledVertex",
    "MixedStrategyPair",
    "NonPositiveScale",
    "NotFullRank",
    "NotRankOne",
    "NotRowConstant",
    "OracleResult",
    "ParametricBasis",
    "ParametricTableau",
    "Rank1NashError",
    "RankOneFactorization",
    "RankReduction",
    "ReachabilityReport",
    "RowConstant",
    "ScaleColumnOfA",
    "ScaleRowOfB",
    "SingularBasis",
    "SingularMatrix",
    "Stalled",
    "SweepTrace",
    "TraceRow",
    "UnboundedObjective",
    "ZeroSum",
    "advance",
    "basis_interval",
    "binding_rows",
    "best_response_values",
    "build_lh_graphs",
    "build_polyhedron",
    "build_tableau",
    "check_nondegenerate",
    "classify_special",
    "enumerate_all",
    "equilibria_on_interval",
    "enumerate_vertices",
    "equilibria_by_labels",
    "factor_rank1",
    "format_game",
    "game_rank",
    "generate_kt",
    "gprime_components",
    "initial_basis",
    "is_nash",
    "lh_run",
    "load_game",
    "loss",
    "parse_game",
    "rat",
    "reachability",
    "reduce_rank",
    "reduce_row_constant",
    "solve_basis",
    "support_enumeration",
    "sweep_table",
    "transform",
    "xi_range",
    "zero_sum_dual_coincidence",
]
