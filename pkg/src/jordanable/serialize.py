"""JSON wire format shared by the CLI and the test fixtures.

Rationals are integers when integral and "num/den" strings otherwise;
polynomials are coefficient arrays [a0, a1, ..., 1] (a human string such
as "X^3 - 2" is also accepted on input); matrices are arrays of row
arrays; multiplicity functions are lists of {"p", "n", "mult"} objects.
"""

from __future__ import annotations

from fractions import Fraction

from .field import Matrix, Polynomial, _frac
from .multiplicity import MultiplicityFunction
from .spectrum import IrreduciblePoly, parse_poly


def frac_to_json(x: Fraction):
    x = _frac(x)
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def frac_from_json(v) -> Fraction:
    if isinstance(v, bool):
        raise ValueError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    raise ValueError(f"not a rational: {v!r}")


def vector_to_json(v) -> list:
    return [frac_to_json(x) for x in v]


def vector_from_json(data) -> tuple:
    if not isinstance(data, list):
        raise ValueError("vector must be a JSON array")
    return tuple(frac_from_json(x) for x in data)


def matrix_to_json(m: Matrix) -> list:
    return [vector_to_json(row) for row in m.to_rows()]


def matrix_from_json(data) -> Matrix:
    if not isinstance(data, list) or not data:
        raise ValueError("matrix must be a nonempty JSON array of rows")
    rows = [vector_from_json(r) for r in data]
    if len({len(r) for r in rows}) != 1:
        raise ValueError("matrix rows must all have the same length")
    return Matrix.from_rows(rows)


def poly_to_json(p: Polynomial) -> list:
    return [frac_to_json(c) for c in p.coeffs]


def poly_from_json(data) -> Polynomial:
    if isinstance(data, str):
        return parse_poly(data)
    if isinstance(data, list):
        return Polynomial(frac_from_json(c) for c in data)
    raise ValueError(f"not a polynomial: {data!r}")


def irreducible_from_json(data) -> IrreduciblePoly:
    p = poly_from_json(data)
    if p.degree <= 3:
        return IrreduciblePoly.check(p)
    return IrreduciblePoly.hinted(p)


def hints_from_json(data) -> list[IrreduciblePoly]:
    if not isinstance(data, list):
        raise ValueError("hints must be a JSON list of polynomials")
    return [IrreduciblePoly.hinted(poly_from_json(p)) for p in data]


def aleph_to_json(a: MultiplicityFunction) -> list:
    return [
        {"p": poly_to_json(p.poly), "n": n, "mult": m} for (p, n), m in a.items()
    ]


def aleph_from_json(data) -> MultiplicityFunction:
    if not isinstance(data, list):
        raise ValueError("a multiplicity function is a JSON list of entries")
    entries = []
    for item in data:
        if not isinstance(item, dict) or not {"p", "n", "mult"} <= set(item):
            raise ValueError(f"bad multiplicity entry: {item!r}")
        entries.append(
            (irreducible_from_json(item["p"]), int(item["n"]), int(item["mult"]))
        )
    return MultiplicityFunction(entries)


def solution_space_to_json(space) -> dict:
    out = {"dim": space.dim, "basis": [matrix_to_json(b) for b in space.basis]}
    if space.offset is not None:
        out["offset"] = matrix_to_json(space.offset)
    return out


def labeled_vectors_to_json(vectors) -> list:
    return [
        {"label": "e0" if lv.label is None else str(lv.label),
         "vector": vector_to_json(lv.vector)}
        for lv in vectors
    ]


def pretty_matrix(m: Matrix, cuts: list[int] | None = None) -> str:
    """Fixed-width rendering with block rules after the listed coordinates."""
    cuts = set(cuts or [])
    cells = [[str(frac_to_json(m[i, j])) for j in range(m.cols)] for i in range(m.rows)]
    widths = [max(len(cells[i][j]) for i in range(m.rows)) for j in range(m.cols)]
    lines = []
    for i in range(m.rows):
        parts = []
        for j in range(m.cols):
            parts.append(cells[i][j].rjust(widths[j]))
            if j + 1 in cuts and j + 1 < m.cols:
                parts.append("|")
        lines.append("[ " + " ".join(parts) + " ]")
        if i + 1 in cuts and i + 1 < m.rows:
            rule_len = len(lines[-1])
            lines.append("-" * rule_len)
    return "\n".join(lines)
