"""JSON problem files.

::

    {"order": 2, "exponents": [-1, 2],
     "c": {"re": "1", "im": "0"},
     "initial": [{"re": "2", "im": "0"}, {"re": "6", "im": "0"}],
     "queries": [{"s": 4, "path": "exact"}],
     "name": "...", "description": "..."}

Exact rationals are strings (``"22/7"``) so nothing is lost to float
truncation; a JSON number with a fractional part or exponent is read as a
float and makes the recursion numeric-only. A bare string or number is accepted
wherever an ``{"re", "im"}`` object is.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any

from ..core import RecursionSpec, validate_spec
from ..errors import ParseError, ValidationError
from ..gaussian import GaussianRational, fraction_text
from .dsl import ProblemDocument, Query

QUERY_PATHS = ("exact", "numeric", "logmag")


def _fail(message):
    raise ParseError(message, 1, 1)


def encode_value(v) -> dict:
    if isinstance(v, GaussianRational):
        return {"re": fraction_text(v.re), "im": fraction_text(v.im)}
    v = complex(v)
    return {"re": v.real, "im": v.imag}


def _decode_part(x, where):
    if isinstance(x, bool):
        _fail(f"{where}: booleans are not numbers")
    if isinstance(x, int):
        return Fraction(x), False
    if isinstance(x, float):
        if not math.isfinite(x):
            _fail(f"{where}: non-finite number")
        return x, True
    if isinstance(x, str):
        try:
            return Fraction(x.strip()), False
        except (ValueError, ZeroDivisionError):
            _fail(f"{where}: {x!r} is not a rational string like '22/7'")
    _fail(f"{where}: expected a number or rational string")


def decode_value(obj, where="value"):
    if isinstance(obj, dict):
        extra = set(obj) - {"re", "im"}
        if extra:
            _fail(f"{where}: unknown keys {sorted(extra)}")
        re, d1 = _decode_part(obj.get("re", 0), f"{where}.re")
        im, d2 = _decode_part(obj.get("im", 0), f"{where}.im")
    else:
        (re, d1), (im, d2) = _decode_part(obj, where), (Fraction(0), False)
    if d1 or d2:
        return complex(float(re), float(im))
    return GaussianRational(re, im)


def document_to_dict(doc: ProblemDocument) -> dict:
    spec = doc.spec
    out: dict = {"order": spec.order, "exponents": list(spec.exponents),
                 "c": encode_value(spec.constant)}
    if spec.initial_values is not None:
        out["initial"] = [encode_value(v) for v in spec.initial_values]
    if doc.queries:
        out["queries"] = [{"s": q.s, "path": q.path} for q in doc.queries]
    for key in ("name", "description"):
        if key in doc.metadata:
            out[key] = doc.metadata[key]
    return out


def dumps_document(doc: ProblemDocument) -> str:
    return json.dumps(document_to_dict(doc), indent=2, sort_keys=False)


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        _fail(f"{where}: expected an integer, got {x!r}")
    return x


def document_from_dict(data: Any) -> ProblemDocument:
    if not isinstance(data, dict):
        _fail("problem document must be a JSON object")
    for key in ("order", "exponents", "c"):
        if key not in data:
            _fail(f"missing required key {key!r}")
    order = _int(data["order"], "order")
    exps = data["exponents"]
    if not isinstance(exps, list):
        _fail("exponents must be a list")
    for i, a in enumerate(exps):
        if isinstance(a, bool) or not isinstance(a, int):
            _fail(f"exponents[{i}]: {a!r} is not an integer")
    c = decode_value(data["c"], "c")
    initial = data.get("initial")
    if initial is not None:
        if not isinstance(initial, list):
            _fail("initial must be a list")
        initial = tuple(decode_value(v, f"initial[{i}]") for i, v in enumerate(initial))
    queries = []
    for i, q in enumerate(data.get("queries", []) or []):
        if not isinstance(q, dict) or "s" not in q:
            _fail(f"queries[{i}] must be an object with an 's' key")
        s = _int(q["s"], f"queries[{i}].s")
        if s < 0:
            _fail(f"queries[{i}].s must be nonnegative")
        path = q.get("path", "exact")
        if path not in QUERY_PATHS:
            _fail(f"queries[{i}].path must be one of {QUERY_PATHS}")
        queries.append(Query(s, path))
    try:
        spec = validate_spec(RecursionSpec(order, tuple(exps), c, initial))
    except ValidationError as exc:
        err = ParseError(f"invalid recursion: {exc}", 1, 1)
        err.cause = exc
        raise err from exc
    meta = {k: data[k] for k in ("name", "description") if k in data}
    return ProblemDocument(spec, meta, tuple(queries))


def loads_document(text: str) -> ProblemDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    except (RecursionError, ValueError) as exc:
        raise ParseError(f"unreadable JSON: {exc}", 1, 1) from None
    return document_from_dict(data)
