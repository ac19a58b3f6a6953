"""Command-line front end: solve games, project systems, check claimed solutions.

Documents are JSON; a payoff matrix may also be given as plain rows of
whitespace-separated entries.  Scalars are read and written as exact literals
("3", "-1/2", "0.25"); JSON numbers are parsed exactly, never through floats.
Decimal output is opt-in and always labeled approximate.

Exit codes: 0 success, 1 infeasible projection or failed check, 2 input
errors, 70 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .core import InvariantViolation, new_system, rat
from .elimination import project
from .game import GameMatrix, solve_game, verify_solution

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 70


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _parse_json(text: str) -> Any:
    # parse_float receives the literal text, so decimals convert exactly
    return json.loads(text, parse_float=Fraction, parse_int=int)


def _entry(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"not a rational entry: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return rat(value)
    raise ValueError(f"not a rational entry: {value!r}")


def _entry_rows(rows: Any) -> list[list[Fraction]]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError("expected an array of arrays of entries")
    return [[_entry(e) for e in r] for r in rows]


def _entry_vector(values: Any) -> list[Fraction]:
    if not isinstance(values, list):
        raise ValueError("expected an array of entries")
    return [_entry(e) for e in values]


def _load_matrix_document(text: str) -> list[list[Fraction]]:
    """Accept {"matrix": [[..]]}, a bare JSON array, or whitespace rows."""
    try:
        doc = _parse_json(text)
    except json.JSONDecodeError:
        doc = None
    if isinstance(doc, dict):
        if "matrix" not in doc:
            raise ValueError("matrix document is missing the 'matrix' field")
        return _entry_rows(doc["matrix"])
    if isinstance(doc, list):
        return _entry_rows(doc)
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty matrix document")
    return [[rat(cell) for cell in row] for row in rows]


def _fmt(value: Fraction) -> str:
    return str(value)


def _fmt_vector(values: Sequence[Fraction]) -> list[str]:
    return [str(v) for v in values]


def _cmd_solve(args: argparse.Namespace) -> int:
    matrix = _load_matrix_document(_read_source(args.file))
    game = GameMatrix(tuple(tuple(r) for r in matrix))
    solution = solve_game(game)
    verified = verify_solution(game, solution.p, solution.q, solution.value)
    if args.out == "structured":
        payload: dict[str, Any] = {
            "value": _fmt(solution.value),
            "p": _fmt_vector(solution.p),
            "q": _fmt_vector(solution.q),
            "verified": verified,
            "multiplier": _fmt_vector(solution.multiplier),
        }
        if args.approx:
            payload["approximate"] = {
                "value": float(solution.value),
                "p": [float(x) for x in solution.p],
                "q": [float(x) for x in solution.q],
            }
        print(json.dumps(payload, indent=2))
    else:
        print(f"value: {_fmt(solution.value)}")
        print(f"p: {' '.join(_fmt_vector(solution.p))}")
        print(f"q: {' '.join(_fmt_vector(solution.q))}")
        print(f"verified: {'true' if verified else 'false'}")
        if args.approx:
            print(f"approximate value: {float(solution.value)}")
            print(f"approximate p: {' '.join(str(float(x)) for x in solution.p)}")
            print(f"approximate q: {' '.join(str(float(x)) for x in solution.q)}")
    return EXIT_OK


def _cmd_project(args: argparse.Namespace) -> int:
    doc = _parse_json(_read_source(args.file))
    if not isinstance(doc, dict):
        raise ValueError("system document must be a JSON object with fields A, b, eliminate")
    for field in ("A", "b", "eliminate"):
        if field not in doc:
            raise ValueError(f"system document is missing the '{field}' field")
    coeffs = _entry_rows(doc["A"])
    rhs = _entry_vector(doc["b"])
    eliminate = doc["eliminate"]
    if not isinstance(eliminate, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in eliminate
    ):
        raise ValueError("'eliminate' must be an array of 0-based variable indices")
    system = new_system(coeffs, rhs)
    trace = project(system, eliminate)
    final = trace.levels[-1]
    rows_payload = []
    witness = None
    for row in final.rows:
        item: dict[str, Any] = {"coeffs": _fmt_vector(row.coeffs), "rhs": _fmt(row.rhs)}
        if args.certificates:
            item["certificate"] = _fmt_vector(row.certificate)
        rows_payload.append(item)
        if witness is None and all(c == 0 for c in row.coeffs) and row.rhs < 0:
            witness = row
    payload: dict[str, Any] = {"rows": rows_payload, "feasible": witness is None}
    if witness is not None:
        payload["infeasibility_certificate"] = _fmt_vector(witness.certificate)
    print(json.dumps(payload, indent=2))
    return EXIT_OK if witness is None else EXIT_NEGATIVE


def _cmd_check(args: argparse.Namespace) -> int:
    doc = _parse_json(_read_source(args.file))
    if not isinstance(doc, dict):
        raise ValueError("check document must be a JSON object with fields matrix, p, q, v")
    for field in ("matrix", "p", "q", "v"):
        if field not in doc:
            raise ValueError(f"check document is missing the '{field}' field")
    game = GameMatrix(tuple(tuple(r) for r in _entry_rows(doc["matrix"])))
    valid = verify_solution(game, _entry_vector(doc["p"]), _entry_vector(doc["q"]), _entry(doc["v"]))
    print("valid" if valid else "invalid")
    return EXIT_OK if valid else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fmelim",
        description="Exact zero-sum game solving and inequality projection with certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute value and optimal mixed strategies")
    solve.add_argument("file", help="matrix document (JSON or whitespace rows); '-' for stdin")
    solve.add_argument("--out", choices=("text", "structured"), default="text")
    solve.add_argument(
        "--approx",
        action="store_true",
        help="also print decimal approximations (labeled approximate)",
    )
    solve.set_defaults(func=_cmd_solve)

    proj = sub.add_parser("project", help="eliminate variables from a system A x <= b")
    proj.add_argument("file", help="JSON document {A, b, eliminate}; '-' for stdin")
    proj.add_argument(
        "--certificates",
        action="store_true",
        help="include each output row's multipliers over the input rows",
    )
    proj.set_defaults(func=_cmd_project)

    check = sub.add_parser("check", help="verify a claimed solution (matrix, p, q, v)")
    check.add_argument("file", help="JSON document {matrix, p, q, v}; '-' for stdin")
    check.set_defaults(func=_cmd_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (OSError, LookupError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
