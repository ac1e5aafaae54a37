"""Recursive-descent parser for the recursion DSL.

::

    document   := rule { ";" binding } [ ";" ] ;
    rule       := "z(n+" INT ")" "=" "c" { "*" factor } ;
    factor     := "z(n" [ "+" INT ] ")" [ "^" SINT ] ;
    binding    := ( "c" | "z(" INT ")" ) "=" value ;
    value      := gaussian | decimal ;
    gaussian   := rat [ ("+"|"-") rat "i" ] | rat "i" ;
    rat        := SINT [ "/" INT ] ;

Whitespace is ignored between tokens. A trailing ``;`` is tolerated. Any
component written with a decimal point or exponent makes the value a float,
and a spec containing one is numeric-only. Factors may come in any order;
a missing lag has exponent 0 and a repeated lag is an error.

Every failure, including a semantic one found by validation, surfaces as
:class:`~multrec.errors.ParseError` with a 1-based line and column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..core import RecursionSpec, validate_spec
from ..errors import ParseError, ValidationError
from ..gaussian import GaussianRational, format_gaussian

MAX_ORDER = 4096
MAX_DIGITS = 4000


@dataclass(frozen=True)
class Query:
    s: int
    path: str = "exact"


@dataclass(frozen=True)
class ProblemDocument:
    spec: RecursionSpec
    metadata: dict = field(default_factory=dict)
    queries: Tuple[Query, ...] = ()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # -- low level ----------------------------------------------------------

    def where(self, pos: Optional[int] = None) -> Tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, message, expected=(), pos=None):
        line, col = self.where(pos)
        raise ParseError(message, line, col, expected)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.accept(ch):
            got = self.peek()
            self.fail(f"unexpected {got!r}" if got else "unexpected end of input",
                      (repr(ch),))

    def digits(self, label="INT") -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            got = self.peek()
            self.fail(f"unexpected {got!r}" if got else "unexpected end of input",
                      (label,))
        return self.text[start:self.pos]

    def integer(self, label="INT") -> int:
        start = self._mark()
        text = self.digits(label)
        if len(text) > MAX_DIGITS:
            self.fail(f"integer literal longer than {MAX_DIGITS} digits", pos=start)
        return int(text)

    def signed_integer(self) -> int:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        return sign * self.integer("SINT")

    # -- grammar ------------------------------------------------------------

    def document(self):
        rule_pos = self._mark()
        order, factors = self.rule()
        bindings: Dict[object, Tuple[object, int]] = {}
        while self.accept(";"):
            if self.peek() == "":
                break
            key, value, pos = self.binding()
            if key in bindings:
                name = "c" if key == "c" else f"z({key})"
                self.fail(f"duplicate binding for {name}", pos=pos)
            bindings[key] = (value, pos)
        if self.peek() != "":
            self.fail(f"unexpected {self.peek()!r}", ("';'",))
        return order, factors, bindings, rule_pos

    def _mark(self) -> int:
        self.skip_ws()
        return self.pos

    def rule(self):
        self.expect("z")
        self.expect("(")
        self.expect("n")
        self.expect("+")
        order_pos = self._mark()
        order = self.integer()
        if order < 1:
            self.fail("order must be at least 1", pos=order_pos)
        if order > MAX_ORDER:
            self.fail(f"order above {MAX_ORDER} is not supported", pos=order_pos)
        self.expect(")")
        self.expect("=")
        self.expect("c")
        factors: Dict[int, int] = {}
        while self.accept("*"):
            fpos = self._mark()
            lag, exp = self.factor()
            if lag >= order:
                self.fail(f"lag n+{lag} is not below the order {order}", pos=fpos)
            if lag in factors:
                self.fail(f"duplicate factor for z(n+{lag})", pos=fpos)
            factors[lag] = exp
        nxt = self.peek()
        if nxt not in ("", ";"):
            self.fail(f"unexpected {nxt!r}", ("'*'", "';'"))
        return order, factors

    def factor(self):
        self.expect("z")
        self.expect("(")
        self.expect("n")
        lag = 0
        if self.accept("+"):
            lag = self.integer()
        self.expect(")")
        exp = 1
        if self.accept("^"):
            exp = self.signed_integer()
            if self.peek() in (".", "/", "e", "E"):
                self.fail("exponents must be integers", ("'*'", "';'"))
        return lag, exp

    def binding(self):
        pos = self._mark()
        if self.accept("c"):
            key = "c"
        elif self.accept("z"):
            self.expect("(")
            key = self.integer()
            self.expect(")")
        else:
            got = self.peek()
            self.fail(f"unexpected {got!r}" if got else "unexpected end of input",
                      ("'c'", "'z'"))
        self.expect("=")
        return key, self.value(), pos

    def component(self):
        """SINT ['/' INT] or a decimal; returns (number, is_decimal)."""
        self.skip_ws()
        start = self.pos
        sign = 1
        if self.accept("-"):
            sign = -1
        elif self.accept("+"):
            pass
        whole = self.digits("number")
        if len(whole) > MAX_DIGITS:
            self.fail(f"number longer than {MAX_DIGITS} digits", pos=start)
        is_dec = False
        text = whole
        if self.pos < len(self.text) and self.text[self.pos] == ".":
            self.pos += 1
            text += "." + self.digits("digits after '.'")
            is_dec = True
        if self.pos < len(self.text) and self.text[self.pos] in "eE":
            self.pos += 1
            esign = ""
            if self.pos < len(self.text) and self.text[self.pos] in "+-":
                esign = self.text[self.pos]
                self.pos += 1
            text += "e" + esign + self.digits("exponent digits")
            is_dec = True
        if is_dec:
            val = sign * float(text)
            if not math.isfinite(val):
                self.fail("decimal out of range", pos=start)
            return val, True
        if self.accept("/"):
            den_pos = self._mark()
            den = self.integer("INT")
            if den == 0:
                self.fail("zero denominator", pos=den_pos)
            return Fraction(sign * int(whole), den), False
        return Fraction(sign * int(whole)), False

    def value(self):
        re, dec1 = self.component()
        if self.accept("i"):
            return _make_value(Fraction(0), re, dec1)
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            im, dec2 = self.component()
            self.expect("i")
            return _make_value(re, sign * im, dec1 or dec2)
        return _make_value(re, Fraction(0), dec1)


def _is_zero(v) -> bool:
    return v.is_zero() if isinstance(v, GaussianRational) else v == 0


def _make_value(re, im, decimal):
    if decimal:
        return complex(float(re), float(im))
    return GaussianRational(re, im)


def parse_recursion(text: str) -> ProblemDocument:
    """Parse DSL text into a validated :class:`ProblemDocument`.

    >>> parse_recursion("z(n+1) = c * z(n)^2; c = 3").spec.exponents
    (2,)
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    parser = _Parser(text)
    order, factors, bindings, rule_pos = parser.document()

    exponents = tuple(factors.get(l, 0) for l in range(order))
    end = len(text)
    if "c" not in bindings:
        parser.fail("missing binding for c", ("';'",), pos=end)
    c, c_pos = bindings.pop("c")
    initial = None
    if bindings:
        for key, (_, pos) in bindings.items():
            if key >= order:
                parser.fail(f"z({key}) is not an initial value of an order-{order} "
                            "recursion", pos=pos)
        missing = [l for l in range(order) if l not in bindings]
        if missing:
            parser.fail("initial values incomplete: missing "
                        + ", ".join(f"z({l})" for l in missing), ("';'",), pos=end)
        initial = tuple(bindings[l][0] for l in range(order))

    try:
        spec = validate_spec(RecursionSpec(order, exponents, c, initial))
    except ValidationError as exc:
        pos = c_pos
        if initial is not None and not _is_zero(c):
            pos = next((bindings[l][1] for l in range(order)
                        if _is_zero(bindings[l][0])), c_pos)
        err = ParseError(f"invalid recursion: {exc}", *parser.where(pos))
        err.cause = exc
        raise err from exc
    return ProblemDocument(spec)


# -- rendering --------------------------------------------------------------

def format_decimal(x: float) -> str:
    text = repr(float(x))
    if "." not in text and "e" not in text:
        text += ".0"
    return text


def format_value(v) -> str:
    """DSL literal for a Gaussian rational or a complex float."""
    if isinstance(v, GaussianRational):
        return format_gaussian(v)
    v = complex(v)
    if v.imag == 0:
        return format_decimal(v.real)
    if v.real == 0:
        return f"{format_decimal(v.imag)}i"
    sign = "-" if math.copysign(1.0, v.imag) < 0 else "+"
    return f"{format_decimal(v.real)}{sign}{format_decimal(abs(v.imag))}i"


def render_recursion(spec: RecursionSpec) -> str:
    """Canonical DSL text; ``parse_recursion`` of it gives back ``spec``."""
    p = spec.order
    parts = [f"z(n+{p}) = c"]
    for lag in range(p - 1, -1, -1):
        a = spec.exponents[lag]
        if a == 0:
            continue
        var = "z(n)" if lag == 0 else f"z(n+{lag})"
        parts.append(var if a == 1 else f"{var}^{a}")
    text = " * ".join(parts)
    text += f"; c = {format_value(spec.constant)}"
    if spec.initial_values is not None:
        for l, v in enumerate(spec.initial_values):
            text += f"; z({l}) = {format_value(v)}"
    return text
