"""Brute-force and closed-form references for tests.

Deliberately naive: exhaustive scans and textbook formulas, sharing no code
with the elimination path, so disagreement always means a real bug.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import InequalitySystem, InvariantViolation, ShapeError
from .game import GameMatrix, verify_solution

__all__ = ["SaddlePoint", "pure_saddle_oracle", "solve_2x2_oracle", "grid_feasibility_oracle"]


@dataclass(frozen=True)
class SaddlePoint:
    """An entry that is its row's minimum and its column's maximum."""

    row: int
    col: int
    value: Fraction


def pure_saddle_oracle(game: GameMatrix) -> SaddlePoint | None:
    """First pure saddle point in row-major scan order, or None."""
    m, n = game.num_rows, game.num_cols
    for i in range(m):
        for j in range(n):
            a = game.entries[i][j]
            if all(a <= game.entries[i][jj] for jj in range(n)) and all(
                a >= game.entries[ii][j] for ii in range(m)
            ):
                return SaddlePoint(i, j, a)
    return None


def solve_2x2_oracle(
    game: GameMatrix,
) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction], Fraction]:
    """Closed form for 2x2 games.

    With a pure saddle, both players play the saddle entry.  Otherwise the
    unique optimum is completely mixed and follows the diagonal-difference
    formulas.  The output is verified before being returned.
    """
    if (game.num_rows, game.num_cols) != (2, 2):
        raise ShapeError("this oracle only handles 2x2 games")
    saddle = pure_saddle_oracle(game)
    if saddle is not None:
        p = (Fraction(1 - saddle.row), Fraction(saddle.row))
        q = (Fraction(1 - saddle.col), Fraction(saddle.col))
        v = saddle.value
    else:
        (a, b), (c, d) = game.entries
        pivot = a + d - b - c
        if pivot == 0:
            raise InvariantViolation("saddle-free 2x2 game must have a nonzero pivot sum")
        v = (a * d - b * c) / pivot
        p = ((d - c) / pivot, (a - b) / pivot)
        q = ((d - b) / pivot, (a - c) / pivot)
    if not verify_solution(game, p, q, v):
        raise InvariantViolation("closed-form 2x2 output failed verification")
    return p, q, v


def grid_feasibility_oracle(
    system: InequalitySystem, bounds: tuple[int, int], denominator: int
) -> list[tuple[Fraction, ...]]:
    """All points with coordinates k/denominator in the closed box that
    satisfy the system, in lexicographic order.

    Rows are cleared to integers once so the scan itself is pure integer
    arithmetic; the check stays exact.
    """
    lo, hi = int(bounds[0]), int(bounds[1])
    den = int(denominator)
    if den <= 0:
        raise ValueError("denominator must be a positive integer")
    scaled_rows: list[tuple[tuple[int, ...], int]] = []
    for row in system.rows:
        scale = math.lcm(*(c.denominator for c in row.coeffs), row.rhs.denominator)
        ints = tuple(int(c * scale) for c in row.coeffs)
        limit = int(row.rhs * scale) * den
        scaled_rows.append((ints, limit))
    points: list[tuple[Fraction, ...]] = []
    for numerators in itertools.product(range(lo * den, hi * den + 1), repeat=system.num_vars):
        if all(
            sum(c * k for c, k in zip(ints, numerators)) <= limit
            for ints, limit in scaled_rows
        ):
            points.append(tuple(Fraction(k, den) for k in numerators))
    return points
