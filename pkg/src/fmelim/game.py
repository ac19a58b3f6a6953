"""Zero-sum matrix games solved by exact projection, with self-verifying output.

The column player's constraints are stacked into one inequality system over
(q, v); eliminating the strategy weights leaves bounds on v alone.  The
greatest lower bound is the game value, the multiplier vector of the row
realizing it contains an optimal row strategy, and back-substitution recovers
an optimal column strategy.  Nothing is returned without passing the exact
feasibility checks that certify optimality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    InequalitySystem,
    InvariantViolation,
    RationalLike,
    ShapeError,
    check_certificate,
    new_system,
    rat,
    rational_vector,
)
from .elimination import back_substitute, project

__all__ = ["GameMatrix", "GameSolution", "build_game_system", "solve_game", "verify_solution"]


@dataclass(frozen=True)
class GameMatrix:
    """Payoff matrix: entry (i, j) is what the column player pays the row player."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(rational_vector(r) for r in self.entries))
        if not self.entries or not self.entries[0]:
            raise ShapeError("a game matrix needs at least one row and one column")
        width = len(self.entries[0])
        if any(len(r) != width for r in self.entries):
            raise ShapeError("payoff rows have unequal lengths")

    @property
    def num_rows(self) -> int:
        return len(self.entries)

    @property
    def num_cols(self) -> int:
        return len(self.entries[0])


@dataclass(frozen=True)
class GameSolution:
    """Optimal strategies, the value, and the multiplier vector certifying them.

    ``multiplier`` has length m+n+2 and decomposes as (p, slacks, delta,
    epsilon): nonnegative, with delta - epsilon equal to the negated value.
    """

    p: tuple[Fraction, ...]
    q: tuple[Fraction, ...]
    value: Fraction
    multiplier: tuple[Fraction, ...]


def build_game_system(game: GameMatrix) -> InequalitySystem:
    """Stack the column player's constraints over unknowns (q_1..q_n, v).

    Rows in order: expected-payoff caps (A row | -1) <= 0, nonnegativity
    (-I | 0) <= 0, then the two rows pinning the weights to sum to one.
    """
    m, n = game.num_rows, game.num_cols
    matrix: list[list[RationalLike]] = []
    rhs: list[RationalLike] = []
    for i in range(m):
        matrix.append(list(game.entries[i]) + [-1])
        rhs.append(0)
    for j in range(n):
        matrix.append([-1 if k == j else 0 for k in range(n)] + [0])
        rhs.append(0)
    matrix.append([1] * n + [0])
    rhs.append(1)
    matrix.append([-1] * n + [0])
    rhs.append(-1)
    return new_system(matrix, rhs)


def verify_solution(
    game: GameMatrix,
    p: Sequence[RationalLike],
    q: Sequence[RationalLike],
    v: RationalLike,
) -> bool:
    """Exact optimality check for a claimed (p, q, v).

    True iff both strategies are probability vectors, the row strategy earns
    at least v against every column, and the column strategy caps every row
    at v.  Meeting floor and ceiling at the same v certifies that v is the
    value and both strategies are optimal.
    """
    m, n = game.num_rows, game.num_cols
    pv = rational_vector(p)
    qv = rational_vector(q)
    value = rat(v)
    if len(pv) != m:
        raise ShapeError(f"row strategy has {len(pv)} entries, expected {m}")
    if len(qv) != n:
        raise ShapeError(f"column strategy has {len(qv)} entries, expected {n}")
    if any(x < 0 for x in pv) or sum(pv) != 1:
        return False
    if any(x < 0 for x in qv) or sum(qv) != 1:
        return False
    for j in range(n):
        if sum(pv[i] * game.entries[i][j] for i in range(m)) < value:
            return False
    for i in range(m):
        if sum(game.entries[i][j] * qv[j] for j in range(n)) > value:
            return False
    return True


def solve_game(game: GameMatrix) -> GameSolution:
    """Compute the value and one optimal mixed strategy per player.

    Eliminates the column weights from the stacked system, reads the value
    off the binding lower-bound row, splits that row's rescaled multiplier
    vector into the row strategy and slack terms, and back-substitutes to
    recover column weights.  Every invariant is asserted exactly before
    returning; a failure raises instead of producing an unverified answer.
    """
    m, n = game.num_rows, game.num_cols
    system = build_game_system(game)
    trace = project(system, list(range(n)))
    final = trace.levels[-1]
    v_col = n
    best_index: int | None = None
    best_value: Fraction | None = None
    for index, row in enumerate(final.rows):
        alpha = row.coeffs[v_col]
        if alpha < 0:
            candidate = row.rhs / alpha
            if best_value is None or candidate > best_value:
                best_index, best_value = index, candidate
    if best_index is None or best_value is None:
        raise InvariantViolation("projection produced no lower bound on the game value")
    chosen = final.rows[best_index]
    if not check_certificate(final, best_index, system):
        raise InvariantViolation("value row carries an unsound certificate")
    rescaled = chosen.scaled(-1 / chosen.coeffs[v_col])
    v_star = best_value
    if rescaled.coeffs != (Fraction(0),) * n + (Fraction(-1),) or rescaled.rhs != -v_star:
        raise InvariantViolation("value row does not rescale to -v <= -value")
    y = rescaled.certificate
    p = y[:m]
    slacks = y[m : m + n]
    delta = y[m + n]
    epsilon = y[m + n + 1]
    full = back_substitute(trace, {v_col: v_star})
    q = full[:n]
    if not verify_solution(game, p, q, v_star):
        raise InvariantViolation("solver output failed exact feasibility verification")
    if delta - epsilon != -v_star:
        raise InvariantViolation("multiplier decomposition does not encode the value")
    for j in range(n):
        balance = sum(p[i] * game.entries[i][j] for i in range(m)) - slacks[j] + (delta - epsilon)
        if balance != 0:
            raise InvariantViolation("multiplier decomposition does not balance column payoffs")
    return GameSolution(p, q, v_star, y)
