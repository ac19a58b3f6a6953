"""Exact Fourier-Motzkin elimination with nonnegative-combination certificates,
and a self-certifying solver for two-player zero-sum matrix games."""

from .core import (
    InequalitySystem,
    InvariantViolation,
    LinearInequality,
    Rational,
    RationalLike,
    SatisfactionReport,
    ShapeError,
    check_certificate,
    evaluate,
    new_system,
    normalize_row,
    rat,
    rational_vector,
)
from .elimination import (
    EliminationTrace,
    RowClassification,
    back_substitute,
    classify_rows,
    eliminate_variable,
    project,
    prune_redundant,
)
from .game import GameMatrix, GameSolution, build_game_system, solve_game, verify_solution
from .oracles import SaddlePoint, grid_feasibility_oracle, pure_saddle_oracle, solve_2x2_oracle

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "RationalLike",
    "ShapeError",
    "InvariantViolation",
    "rat",
    "rational_vector",
    "LinearInequality",
    "InequalitySystem",
    "SatisfactionReport",
    "new_system",
    "evaluate",
    "check_certificate",
    "normalize_row",
    "RowClassification",
    "EliminationTrace",
    "classify_rows",
    "eliminate_variable",
    "prune_redundant",
    "project",
    "back_substitute",
    "GameMatrix",
    "GameSolution",
    "build_game_system",
    "solve_game",
    "verify_solution",
    "SaddlePoint",
    "pure_saddle_oracle",
    "solve_2x2_oracle",
    "grid_feasibility_oracle",
    "__version__",
]
