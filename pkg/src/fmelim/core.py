"""Exact rational inequality systems with nonnegative-combination certificates.

Every row of every system built here carries a multiplier vector over the rows
of the system it originally came from, so that any derived inequality can be
re-checked by pure arithmetic: multipliers are nonnegative and reproduce the
row's coefficients and right-hand side exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

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
]

Rational = Fraction

RationalLike = Union[int, str, Fraction]

# optional sign, digits, then optionally "/digits" or ".digits"
_ENTRY_RE = re.compile(r"[+-]?\d+(?:/(?P<den>\d+)|\.\d+)?")


class ShapeError(ValueError):
    """Vector or matrix dimensions do not line up."""


class InvariantViolation(RuntimeError):
    """An internal exactness guarantee failed; no answer is returned."""


def rat(value: RationalLike) -> Fraction:
    """Convert an int, Fraction, or literal string to an exact Fraction.

    String literals follow the entry grammar: optional sign, digits, then
    optionally ``/digits`` (nonzero denominator) or ``.digits``.  Decimal
    literals convert exactly ("0.25" -> 1/4).  Floats are rejected: they would
    smuggle binary rounding error into exact arithmetic.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: pass the literal as a string to keep it exact"
        )
    if isinstance(value, str):
        text = value.strip()
        match = _ENTRY_RE.fullmatch(text)
        if match is None:
            raise ValueError(f"not a rational literal: {value!r}")
        if match.group("den") is not None and int(match.group("den")) == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational scalar")


def rational_vector(values: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    """Coerce an iterable of scalars to a tuple of exact Fractions."""
    return tuple(rat(v) for v in values)


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class LinearInequality:
    """One row ``coeffs . x <= rhs`` plus the nonnegative multipliers that
    derive it from the rows of the originating system."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    certificate: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", rational_vector(self.coeffs))
        object.__setattr__(self, "rhs", rat(self.rhs))
        object.__setattr__(self, "certificate", rational_vector(self.certificate))
        if any(y < 0 for y in self.certificate):
            raise ValueError("certificate multipliers must be nonnegative")

    def scaled(self, factor: RationalLike) -> "LinearInequality":
        """Multiply both sides (and the certificate) by a positive factor."""
        k = rat(factor)
        if k <= 0:
            raise ValueError("scaling factor must be positive")
        return LinearInequality(
            tuple(k * c for c in self.coeffs),
            k * self.rhs,
            tuple(k * y for y in self.certificate),
        )


@dataclass(frozen=True)
class InequalitySystem:
    """An ordered conjunction of inequality rows over a fixed variable count.

    ``origin_dims`` is the (row count, variable count) of the system every
    certificate refers to; freshly built systems refer to themselves.
    """

    num_vars: int
    rows: tuple[LinearInequality, ...]
    origin_dims: tuple[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "num_vars", int(self.num_vars))
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(
            self, "origin_dims", (int(self.origin_dims[0]), int(self.origin_dims[1]))
        )
        if self.num_vars < 0:
            raise ShapeError("variable count cannot be negative")
        m0 = self.origin_dims[0]
        for index, row in enumerate(self.rows):
            if len(row.coeffs) != self.num_vars:
                raise ShapeError(
                    f"row {index} has {len(row.coeffs)} coefficients, expected {self.num_vars}"
                )
            if len(row.certificate) != m0:
                raise ShapeError(
                    f"row {index} certificate has length {len(row.certificate)}, expected {m0}"
                )


@dataclass(frozen=True)
class SatisfactionReport:
    """Per-row slack (rhs minus achieved value) and the overall verdict."""

    slacks: tuple[Fraction, ...]
    satisfied: bool


def new_system(
    coeff_matrix: Sequence[Sequence[RationalLike]],
    rhs: Sequence[RationalLike],
    *,
    num_vars: int | None = None,
) -> InequalitySystem:
    """Build a fresh system ``A x <= b``; row k starts with certificate e_k.

    ``num_vars`` is only needed for systems with no rows; otherwise it is
    inferred from (and checked against) the matrix width.
    """
    matrix = [rational_vector(r) for r in coeff_matrix]
    b = rational_vector(rhs)
    if len(matrix) != len(b):
        raise ShapeError(f"{len(matrix)} coefficient rows but {len(b)} right-hand sides")
    if matrix:
        width = len(matrix[0])
        if any(len(r) != width for r in matrix):
            raise ShapeError("coefficient rows have unequal lengths")
        if num_vars is not None and num_vars != width:
            raise ShapeError(f"num_vars={num_vars} but matrix rows have {width} entries")
    else:
        width = 0 if num_vars is None else int(num_vars)
    m = len(matrix)
    rows = tuple(
        LinearInequality(
            coeffs,
            b[k],
            tuple(Fraction(1 if i == k else 0) for i in range(m)),
        )
        for k, coeffs in enumerate(matrix)
    )
    return InequalitySystem(width, rows, (m, width))


def evaluate(system: InequalitySystem, point: Sequence[RationalLike]) -> SatisfactionReport:
    """Exact satisfaction check of every row at the given point."""
    x = rational_vector(point)
    if len(x) != system.num_vars:
        raise ShapeError(f"point has {len(x)} coordinates, expected {system.num_vars}")
    slacks = tuple(row.rhs - _dot(row.coeffs, x) for row in system.rows)
    return SatisfactionReport(slacks, all(s >= 0 for s in slacks))


def check_certificate(
    system: InequalitySystem, row_index: int, original: InequalitySystem
) -> bool:
    """True iff the row's multipliers are nonnegative and reproduce its
    coefficients and right-hand side from ``original`` exactly."""
    m0, n0 = system.origin_dims
    if (len(original.rows), original.num_vars) != (m0, n0):
        raise ShapeError("original system does not match the certificate's origin dimensions")
    if system.num_vars != n0:
        raise ShapeError("system and certificate origin disagree on variable count")
    if not 0 <= row_index < len(system.rows):
        raise IndexError(f"row index {row_index} out of range for {len(system.rows)} rows")
    row = system.rows[row_index]
    y = row.certificate
    if any(yk < 0 for yk in y):
        return False
    combined = [Fraction(0)] * n0
    combined_rhs = Fraction(0)
    for yk, origin_row in zip(y, original.rows):
        if yk == 0:
            continue
        for j, c in enumerate(origin_row.coeffs):
            combined[j] += yk * c
        combined_rhs += yk * origin_row.rhs
    return tuple(combined) == row.coeffs and combined_rhs == row.rhs


def normalize_row(row: LinearInequality) -> LinearInequality:
    """Scale the row so its first nonzero coefficient has absolute value one.

    The leading coefficient keeps its sign, and zero rows pass through, so
    the satisfaction set never changes.
    """
    for c in row.coeffs:
        if c != 0:
            return row.scaled(1 / abs(c))
    return row
