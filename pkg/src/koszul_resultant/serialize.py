"""JSON and CSV forms of exact matrices and complexes. Rationals travel as "p/q" strings."""

import json
from fractions import Fraction

from .complexes import ChainComplex
from .errors import InputError
from .linalg import ExactMatrix


def _cell(x: Fraction) -> str:
    return str(x)


def _parse_cell(s) -> Fraction:
    if isinstance(s, bool):
        raise InputError(f"bad matrix cell {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise InputError(f"matrix cells must be \"p/q\" strings or integers, got {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational cell {s!r}") from exc


def matrix_to_lists(m: ExactMatrix):
    return [[_cell(x) for x in m.row(i)] for i in range(m.rows)]


def emit_matrix(m: ExactMatrix, fmt: str = "csv") -> str:
    if fmt == "csv":
        return "".join(",".join(_cell(x) for x in m.row(i)) + "\n" for i in range(m.rows))
    if fmt == "json":
        return json.dumps(matrix_to_lists(m))
    raise InputError(f"unknown matrix format {fmt!r}")


def parse_matrix(text: str, fmt: str = "csv", cols: int = None) -> ExactMatrix:
    if fmt == "csv":
        rows = [[_parse_cell(c) for c in line.split(",")] for line in text.splitlines() if line.strip()]
        return ExactMatrix.from_rows(rows, cols)
    if fmt == "json":
        data = json.loads(text)
        return ExactMatrix.from_rows([[_parse_cell(c) for c in row] for row in data], cols)
    raise InputError(f"unknown matrix format {fmt!r}")


def complex_to_json(c: ChainComplex) -> dict:
    return {"dims": list(c.dims), "diffs": [matrix_to_lists(d) for d in c.diffs]}


def complex_from_json(data, verify: bool = False) -> ChainComplex:
    """Load {"dims": [...], "diffs": [...]}; nilpotency is left to the caller by default."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "dims" not in data or "diffs" not in data:
        raise InputError('complex JSON needs "dims" and "diffs"')
    dims = data["dims"]
    if not isinstance(dims, list) or not all(isinstance(d, int) and not isinstance(d, bool) for d in dims):
        raise InputError('"dims" must be a list of integers')
    diffs = data["diffs"]
    if not isinstance(diffs, list) or len(diffs) != len(dims) - 1:
        raise InputError(f'"diffs" must hold {len(dims) - 1} matrices')
    mats = []
    for k, d in enumerate(diffs):
        if not isinstance(d, list):
            raise InputError(f"diffs[{k}] is not a list of rows")
        mats.append(ExactMatrix.from_rows([[_parse_cell(x) for x in row] for row in d], dims[k + 1]))
    return ChainComplex(tuple(dims), tuple(mats), verify=verify)
