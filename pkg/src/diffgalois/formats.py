"""JSON file grammars and canonical serialisation.

Matrix:      [["1", "-1/2"], ["0", "3"]]          (rows of "p" / "p/q" strings)
Wedge data:  {"g": 2, "h": 1, "label": "...",
              "entries": [{"i": 1, "k": 1, "l": 2, "value": "1"}]}
Connection:  {"rank": 2, "matrices": [matrix, ...],
              "beta": <wedge data> | {"model": "curve", "genus": 2}
                                   | {"model": "abelian", "dim": 2}}

Parsing is strict: unknown keys, numbers where strings are expected and
ragged rows are all rejected with a :class:`MalformedInput` that names the
offending field.  Output uses sorted keys and canonical "p/q" scalars so
identical values always serialise to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .connection import Connection, make
from .errors import DiffGaloisError, MalformedInput
from .exact import Matrix, format_scalar, parse_scalar
from .geometry import WedgeData, abelian_model, curve_model, validate


def _expect_keys(obj, where, required, optional=()):
    if not isinstance(obj, dict):
        raise MalformedInput("expected a JSON object", where)
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise MalformedInput(f"unknown field(s) {sorted(unknown)}", where)
    missing = [k for k in required if k not in obj]
    if missing:
        raise MalformedInput(f"missing field(s) {missing}", where)


def _int(obj, where, minimum=None):
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise MalformedInput("expected an integer", where)
    if minimum is not None and obj < minimum:
        raise MalformedInput(f"must be >= {minimum}", where)
    return obj


def _scalar(obj, where) -> Fraction:
    try:
        return parse_scalar(obj)
    except (ValueError, ZeroDivisionError):
        raise MalformedInput(f"expected a rational string 'p' or 'p/q', got {obj!r}", where) from None


def _join(where, key):
    return f"{where}.{key}" if where else str(key)


# -- matrices --------------------------------------------------------------

def matrix_to_json(m: Matrix) -> list:
    return [[format_scalar(x) for x in r] for r in m.to_rows()]


def matrix_from_json(obj, where="matrix") -> Matrix:
    if not isinstance(obj, list) or not obj:
        raise MalformedInput("expected a non-empty array of rows", where)
    rows = []
    for i, r in enumerate(obj):
        if not isinstance(r, list):
            raise MalformedInput("expected an array of strings", f"{where}[{i}]")
        rows.append([_scalar(x, f"{where}[{i}][{j}]") for j, x in enumerate(r)])
    if any(len(r) != len(rows[0]) for r in rows) or not rows[0]:
        raise MalformedInput("rows have different lengths", where)
    return Matrix.from_rows(rows)


def matrix_list_from_json(obj, where="matrices") -> list[Matrix]:
    if not isinstance(obj, list):
        raise MalformedInput("expected an array of matrices", where)
    mats = [matrix_from_json(m, f"{where}[{i}]") for i, m in enumerate(obj)]
    for i, m in enumerate(mats):
        if not m.is_square or m.rows != mats[0].rows:
            raise MalformedInput("matrices must be square and of equal size", f"{where}[{i}]")
    return mats


# -- wedge data ------------------------------------------------------------

def beta_to_json(beta: WedgeData) -> dict:
    return {
        "g": beta.g,
        "h": beta.h,
        "label": beta.label,
        "entries": [{"i": i, "k": k, "l": l, "value": format_scalar(v)}
                    for (i, k, l), v in beta.coefficients],
    }


def beta_from_json(obj, where="beta") -> WedgeData:
    if isinstance(obj, dict) and "model" in obj:
        model = obj["model"]
        if model == "curve":
            _expect_keys(obj, where, ("model", "genus"))
            return curve_model(_int(obj["genus"], _join(where, "genus"), 0))
        if model == "abelian":
            _expect_keys(obj, where, ("model", "dim"))
            return abelian_model(_int(obj["dim"], _join(where, "dim"), 1))
        raise MalformedInput(f"unknown model {model!r} (expected 'curve' or 'abelian')", _join(where, "model"))
    _expect_keys(obj, where, ("g", "h", "entries"), ("label",))
    g = _int(obj["g"], _join(where, "g"), 0)
    h = _int(obj["h"], _join(where, "h"), 0)
    label = obj.get("label", "")
    if not isinstance(label, str):
        raise MalformedInput("expected a string", _join(where, "label"))
    entries = obj["entries"]
    if not isinstance(entries, list):
        raise MalformedInput("expected an array", _join(where, "entries"))
    raw = []
    for n, e in enumerate(entries):
        w = f"{where}.entries[{n}]"
        _expect_keys(e, w, ("i", "k", "l", "value"))
        raw.append((_int(e["i"], _join(w, "i")), _int(e["k"], _join(w, "k")),
                    _int(e["l"], _join(w, "l")), _scalar(e["value"], _join(w, "value"))))
    try:
        return validate(g, h, raw, label=label)
    except DiffGaloisError as err:
        raise MalformedInput(str(err), _join(where, "entries")) from err


# -- connections -----------------------------------------------------------

def connection_to_json(c: Connection) -> dict:
    return {
        "rank": c.rank,
        "matrices": [matrix_to_json(a) for a in c.matrices],
        "beta": beta_to_json(c.beta),
    }


def connection_from_json(obj, where="") -> Connection:
    _expect_keys(obj, where, ("rank", "matrices", "beta"))
    rank = _int(obj["rank"], _join(where, "rank"), 1)
    beta = beta_from_json(obj["beta"], _join(where, "beta"))
    if not isinstance(obj["matrices"], list):
        raise MalformedInput("expected an array of matrices", _join(where, "matrices"))
    mats = [matrix_from_json(m, f"{_join(where, 'matrices')}[{i}]") for i, m in enumerate(obj["matrices"])]
    try:
        return make(rank, mats, beta)
    except DiffGaloisError as err:
        raise MalformedInput(str(err), _join(where, "matrices")) from err


# -- generic ---------------------------------------------------------------

def to_jsonable(obj):
    """Recursively turn Matrices, Fractions, tuples and dataclass-free dicts into JSON data."""
    if isinstance(obj, Matrix):
        return matrix_to_json(obj)
    if isinstance(obj, Fraction):
        return format_scalar(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str, where=""):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise MalformedInput(err.msg, where or None, line=err.lineno) from None


def load(path) -> object:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as err:
        raise MalformedInput(f"cannot read file: {err.strerror}", str(p)) from None
    return loads(text, str(p))


def load_connection(path) -> Connection:
    return connection_from_json(load(path))


def save_connection(c: Connection, path) -> None:
    Path(path).write_text(dumps(connection_to_json(c)))
