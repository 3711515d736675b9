"""JSON representation files.

A file holds one representation::

    {"cyclotomic_order": 4, "dimension": 1, "kind": "single",
     "generators": [[[["0/1", "1/1"]]]]}

``generators`` is a list of matrices, a matrix a list of rows, and each
entry the phi(N) coordinates of a field element in the basis
1, z, ..., z^(phi(N)-1), written as exact rational strings.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .cyclotomic import CycQ, phi
from .linalg import Matrix
from .poteq import DEFAULT_CLOSURE_CAP, Kind, MatRep

E_JSON = "E_JSON"
E_SCHEMA = "E_SCHEMA"
E_DECIMAL = "E_DECIMAL"
E_ENTRY_LENGTH = "E_ENTRY_LENGTH"
E_SINGULAR = "E_SINGULAR"

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")
_DECIMALISH = re.compile(r"[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?|[+-]?(inf|nan)", re.I)


class RepFileError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


def _rational(s, where: str) -> Fraction:
    if isinstance(s, float):
        raise RepFileError(E_DECIMAL, f"{where}: decimal number {s!r}; write it as a string 'p/q'")
    if not isinstance(s, str):
        raise RepFileError(E_SCHEMA, f"{where}: expected a rational string, got {s!r}")
    t = s.strip()
    if _RATIONAL.fullmatch(t):
        num, _, den = t.partition("/")
        if den and int(den) == 0:
            raise RepFileError(E_SCHEMA, f"{where}: zero denominator in {s!r}")
        return Fraction(int(num), int(den) if den else 1)
    if _DECIMALISH.fullmatch(t):
        raise RepFileError(E_DECIMAL, f"{where}: decimal literal {s!r} is not exact; use 'p/q'")
    raise RepFileError(E_SCHEMA, f"{where}: cannot read {s!r} as a rational")


def _require(cond, message):
    if not cond:
        raise RepFileError(E_SCHEMA, message)


def rep_from_dict(data) -> MatRep:
    _require(isinstance(data, dict), "top level must be an object")
    for key in ("cyclotomic_order", "dimension", "kind", "generators"):
        _require(key in data, f"missing field {key!r}")
    extra = set(data) - {"cyclotomic_order", "dimension", "kind", "generators", "closure_cap"}
    _require(not extra, f"unknown fields {sorted(extra)}")
    N, n = data["cyclotomic_order"], data["dimension"]
    _require(type(N) is int and N >= 1, f"cyclotomic_order must be a positive integer, got {N!r}")
    _require(type(n) is int and n >= 1, f"dimension must be a positive integer, got {n!r}")
    _require(data["kind"] in {k.value for k in Kind}, f"kind must be single, free or finite, got {data['kind']!r}")
    cap = data.get("closure_cap", DEFAULT_CLOSURE_CAP)
    _require(type(cap) is int and cap >= 1, f"closure_cap must be a positive integer, got {cap!r}")
    gens = data["generators"]
    _require(isinstance(gens, list) and gens, "generators must be a nonempty list")
    d = phi(N)
    mats = []
    for gi, g in enumerate(gens):
        _require(isinstance(g, list) and len(g) == n, f"generator {gi} must have {n} rows")
        rows = []
        for i, row in enumerate(g):
            _require(isinstance(row, list) and len(row) == n, f"generator {gi} row {i} must have {n} entries")
            out = []
            for j, entry in enumerate(row):
                where = f"generator {gi} entry ({i}, {j})"
                _require(isinstance(entry, list), f"{where} must be a list of coordinates")
                if len(entry) != d:
                    raise RepFileError(
                        E_ENTRY_LENGTH, f"{where} has {len(entry)} coordinates, phi({N}) = {d} expected"
                    )
                out.append(CycQ(N, [_rational(c, where) for c in entry]))
            rows.append(out)
        mats.append(Matrix(rows, N))
    kind = Kind(data["kind"])
    if kind is Kind.FINITE:
        for gi, M in enumerate(mats):
            if not M.is_invertible():
                raise RepFileError(E_SINGULAR, f"generator {gi} is singular; kind=finite needs invertible generators")
    try:
        return MatRep(kind, tuple(mats), cap)
    except ValueError as exc:
        raise RepFileError(E_SCHEMA, str(exc)) from None


def parse_rep(text: str) -> MatRep:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RepFileError(E_JSON, f"invalid JSON: {exc}") from None
    return rep_from_dict(data)


def parse_rep_file(source) -> MatRep:
    """Parse a path, or JSON text if ``source`` looks like an object."""
    if isinstance(source, str) and source.lstrip().startswith("{"):
        return parse_rep(source)
    return parse_rep(Path(source).read_text())


def _fmt(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def rep_to_dict(rep: MatRep) -> dict:
    out = {
        "cyclotomic_order": rep.N,
        "dimension": rep.n,
        "kind": rep.kind.value,
        "generators": [
            [[[_fmt(c) for c in M[i, j].coeffs] for j in range(rep.n)] for i in range(rep.n)]
            for M in rep.generators
        ],
    }
    if rep.closure_cap != DEFAULT_CLOSURE_CAP:
        out["closure_cap"] = rep.closure_cap
    return out


def serialize_rep(rep: MatRep) -> str:
    return json.dumps(rep_to_dict(rep)) + "\n"
