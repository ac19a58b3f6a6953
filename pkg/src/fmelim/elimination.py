"""Variable elimination for inequality systems, with certificate tracking.

One elimination step pairs every row bounding the pivot variable from above
with every row bounding it from below; the pivot's coefficient cancels and the
pair's multipliers add.  Eliminating every variable either empties the system
(feasible) or leaves rows ``0 <= negative`` whose certificates are explicit
infeasibility witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .core import (
    InequalitySystem,
    InvariantViolation,
    LinearInequality,
    RationalLike,
    ShapeError,
    evaluate,
    normalize_row,
    rat,
)

__all__ = [
    "RowClassification",
    "EliminationTrace",
    "classify_rows",
    "eliminate_variable",
    "prune_redundant",
    "project",
    "back_substitute",
]


@dataclass(frozen=True)
class RowClassification:
    """Row indices split by the sign of the pivot variable's coefficient.

    ``positive`` rows bound the variable from above, ``negative`` rows from
    below, and ``zero`` rows do not involve it.
    """

    positive: tuple[int, ...]
    zero: tuple[int, ...]
    negative: tuple[int, ...]


@dataclass(frozen=True)
class EliminationTrace:
    """The input system plus every pruned stage, one per eliminated variable.

    ``levels[0]`` is the input; ``levels[t]`` is the system after eliminating
    ``order[:t]``.  Eliminated columns stay in place but are identically zero,
    so variable indices are stable across levels.
    """

    order: tuple[int, ...]
    levels: tuple[InequalitySystem, ...]


def _check_var(system: InequalitySystem, var: int) -> None:
    if not 0 <= var < system.num_vars:
        raise IndexError(f"variable index {var} out of range for {system.num_vars} variables")


def classify_rows(system: InequalitySystem, var: int) -> RowClassification:
    """Partition row indices by the sign of the coefficient of ``var``."""
    _check_var(system, var)
    positive: list[int] = []
    zero: list[int] = []
    negative: list[int] = []
    for index, row in enumerate(system.rows):
        c = row.coeffs[var]
        if c > 0:
            positive.append(index)
        elif c < 0:
            negative.append(index)
        else:
            zero.append(index)
    return RowClassification(tuple(positive), tuple(zero), tuple(negative))


def _row_sum(a: LinearInequality, b: LinearInequality) -> LinearInequality:
    return LinearInequality(
        tuple(x + y for x, y in zip(a.coeffs, b.coeffs)),
        a.rhs + b.rhs,
        tuple(x + y for x, y in zip(a.certificate, b.certificate)),
    )


def eliminate_variable(system: InequalitySystem, var: int) -> InequalitySystem:
    """Zero out ``var`` everywhere by pairwise combination.

    Zero-coefficient rows pass through unchanged; each (upper, lower) pair is
    scaled by the positive reciprocals of its pivot coefficients and added, so
    the pivot cancels exactly and the combined certificate stays nonnegative.
    Produces exactly ``len(zero) + len(positive) * len(negative)`` rows.
    """
    split = classify_rows(system, var)
    out = [system.rows[k] for k in split.zero]
    lower_scaled = [
        system.rows[j].scaled(-1 / system.rows[j].coeffs[var]) for j in split.negative
    ]
    for i in split.positive:
        upper = system.rows[i].scaled(1 / system.rows[i].coeffs[var])
        for lower in lower_scaled:
            out.append(_row_sum(upper, lower))
    return InequalitySystem(system.num_vars, tuple(out), system.origin_dims)


def prune_redundant(system: InequalitySystem) -> InequalitySystem:
    """Drop tautologies and duplicate directions without changing solutions.

    Rows are normalized; rows sharing a coefficient vector keep only the one
    with the smallest right-hand side (first wins ties).  Zero-coefficient
    rows with nonnegative right-hand side are tautologies and are dropped;
    those with negative right-hand side are infeasibility witnesses and are
    all kept.
    """
    normalized = [normalize_row(row) for row in system.rows]
    best: dict[tuple[Fraction, ...], LinearInequality] = {}
    first_seen: dict[tuple[Fraction, ...], int] = {}
    for index, row in enumerate(normalized):
        if all(c == 0 for c in row.coeffs):
            continue
        key = row.coeffs
        if key not in best:
            best[key] = row
            first_seen[key] = index
        elif row.rhs < best[key].rhs:
            best[key] = row
    kept: list[LinearInequality] = []
    for index, row in enumerate(normalized):
        if all(c == 0 for c in row.coeffs):
            if row.rhs < 0:
                kept.append(row)
        elif first_seen[row.coeffs] == index:
            kept.append(best[row.coeffs])
    return InequalitySystem(system.num_vars, tuple(kept), system.origin_dims)


def _pair_count(system: InequalitySystem, var: int) -> int:
    split = classify_rows(system, var)
    return len(split.positive) * len(split.negative)


def project(system: InequalitySystem, eliminate: Sequence[int]) -> EliminationTrace:
    """Eliminate the requested variables, recording each pruned stage.

    The next variable is always the remaining one with the fewest
    upper-lower pairings, ties broken by lowest index; this keeps the row
    blowup in check while leaving the projected solution set unchanged.
    """
    requested = [int(v) for v in eliminate]
    if len(set(requested)) != len(requested):
        raise ValueError("duplicate variable indices in eliminate list")
    for v in requested:
        _check_var(system, v)
    remaining = sorted(requested)
    levels = [system]
    order: list[int] = []
    current = system
    while remaining:
        var = min(remaining, key=lambda v: (_pair_count(current, v), v))
        remaining.remove(var)
        current = prune_redundant(eliminate_variable(current, var))
        levels.append(current)
        order.append(var)
    return EliminationTrace(tuple(order), tuple(levels))


def back_substitute(
    trace: EliminationTrace, partial: Mapping[int, RationalLike]
) -> tuple[Fraction, ...]:
    """Extend an assignment of the surviving variables to all variables.

    Walks the trace backwards.  At each stage the variable eliminated there
    is squeezed between the largest lower bound and the smallest upper bound
    the stage's rows impose at the already-fixed values: midpoint when both
    sides exist, the binding bound when only one does, zero when free.  The
    result satisfies the original system exactly.
    """
    base = trace.levels[0]
    n = base.num_vars
    eliminated = set(trace.order)
    values = {int(k): rat(v) for k, v in partial.items()}
    if set(values) != set(range(n)) - eliminated:
        raise ShapeError("partial assignment must cover exactly the surviving variables")
    probe = [values.get(v, Fraction(0)) for v in range(n)]
    if not evaluate(trace.levels[-1], probe).satisfied:
        raise ValueError("partial assignment does not satisfy the projected system")
    for t in range(len(trace.order) - 1, -1, -1):
        var = trace.order[t]
        lower: Fraction | None = None
        upper: Fraction | None = None
        for row in trace.levels[t].rows:
            a = row.coeffs[var]
            if a == 0:
                continue
            rest = sum(
                (row.coeffs[u] * values[u] for u in range(n) if u != var and row.coeffs[u] != 0),
                Fraction(0),
            )
            bound = (row.rhs - rest) / a
            if a > 0:
                upper = bound if upper is None else min(upper, bound)
            else:
                lower = bound if lower is None else max(lower, bound)
        if lower is not None and upper is not None:
            if upper < lower:
                raise InvariantViolation("empty squeeze interval despite satisfied projection")
            values[var] = (lower + upper) / 2
        elif lower is not None:
            values[var] = lower
        elif upper is not None:
            values[var] = upper
        else:
            values[var] = Fraction(0)
    return tuple(values[v] for v in range(n))
