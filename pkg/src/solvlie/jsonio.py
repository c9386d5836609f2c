"""JSON wire formats.

Rationals are strings "p/q" in lowest terms (plain "p" for integers);
quadratic-extension scalars are objects {"a": "p/q", "b": "p/q", "d": n}.
Matrices are arrays of arrays; algebras are
{"dim": n, "brackets": [{"i": i, "j": j, "coeffs": [...]}, ...]} with
1-based i < j in ascending order and coefficient vectors of length n.
Writers emit a fixed key order so equal values give byte-equal output.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .liealg import LieAlgebra, StructureTensor
from .matrices import Mat
from .scalars import QuadExt, Scalar, compact, format_rational


class FormatError(ValueError):
    pass


def scalar_to_json(x: Scalar):
    if isinstance(x, QuadExt):
        return {"a": format_rational(x.a), "b": format_rational(x.b), "d": x.d}
    return format_rational(x)


def scalar_from_json(v) -> Scalar:
    if isinstance(v, str):
        try:
            return compact(Fraction(v.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational {v!r}") from exc
    if isinstance(v, int):
        return v
    if isinstance(v, dict):
        try:
            return QuadExt.make(
                Fraction(str(v["a"])), Fraction(str(v["b"])), int(v["d"])
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise FormatError(f"bad quadratic scalar {v!r}") from exc
    raise FormatError(f"bad scalar {v!r}")


def matrix_to_json(m: Mat) -> list:
    return [[scalar_to_json(x) for x in row] for row in m.data]


def matrix_from_json(v) -> Mat:
    if not isinstance(v, list) or not v or not all(isinstance(r, list) for r in v):
        raise FormatError("matrix must be a non-empty array of arrays")
    return Mat([[scalar_from_json(x) for x in row] for row in v])


def algebra_to_json(a: Union[LieAlgebra, StructureTensor]) -> dict:
    t = a.tensor if isinstance(a, LieAlgebra) else a
    brackets = []
    for (i, j), vec in t.items():
        brackets.append(
            {"i": i + 1, "j": j + 1, "coeffs": [scalar_to_json(x) for x in vec]}
        )
    return {"dim": t.n, "brackets": brackets}


def algebra_from_json(d) -> StructureTensor:
    if not isinstance(d, dict) or "dim" not in d:
        raise FormatError("algebra object needs a 'dim' field")
    n = d["dim"]
    if not isinstance(n, int) or n < 1:
        raise FormatError("'dim' must be a positive integer")
    table = {}
    for entry in d.get("brackets", []):
        if not isinstance(entry, dict):
            raise FormatError("bracket entries must be objects")
        try:
            i, j = int(entry["i"]), int(entry["j"])
            coeffs = entry["coeffs"]
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad bracket entry {entry!r}") from exc
        if not (1 <= i < j <= n):
            raise FormatError(f"bracket indices ({i}, {j}) out of range")
        if not isinstance(coeffs, list) or len(coeffs) != n:
            raise FormatError(f"bracket ({i}, {j}) needs {n} coefficients")
        if (i - 1, j - 1) in table:
            raise FormatError(f"duplicate bracket ({i}, {j})")
        table[(i - 1, j - 1)] = tuple(scalar_from_json(x) for x in coeffs)
    try:
        return StructureTensor(n, table)
    except Exception as exc:
        raise FormatError(str(exc)) from exc


def dumps(obj) -> str:
    """Canonical rendering: fixed key order, no whitespace variation."""
    return json.dumps(obj, separators=(", ", ": "), indent=None)


def load_path(path: str):
    import sys

    if path == "-":
        raw = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON in {path}: {exc}") from exc
