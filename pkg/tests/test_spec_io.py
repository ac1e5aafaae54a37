import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from multrec import (GaussianRational, dumps_document, loads_document,
                     make_spec, parse_recursion, render_recursion,
                     render_solution, spectral_solution)
from multrec.errors import ParseError, ZeroBase
from multrec.spec_io import solution_to_dict

rats = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
gaussians = st.builds(GaussianRational, rats, rats).filter(lambda g: not g.is_zero())
floats = st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False,
                            allow_subnormal=False).filter(lambda z: z != 0)


@st.composite
def specs(draw):
    p = draw(st.integers(1, 5))
    a = draw(st.lists(st.integers(-9, 9), min_size=p, max_size=p))
    values = floats if draw(st.booleans()) and draw(st.booleans()) else gaussians
    c = draw(values)
    init = draw(st.one_of(st.none(), st.lists(values, min_size=p, max_size=p)))
    return make_spec(a, c, init)


def test_examples():
    doc = parse_recursion("z(n+2) = c * z(n+1)^2 * z(n)^-1; c = 1; z(0) = 2; z(1) = 6")
    assert doc.spec.order == 2 and doc.spec.exponents == (-1, 2)
    assert doc.spec.initial_values == (2, 6)
    doc = parse_recursion("z(n+1) = c * z(n)^2; c = 3")
    assert doc.spec.exponents == (2,) and doc.spec.initial_values is None


@pytest.mark.parametrize("text, value", [
    ("3/2", GaussianRational(Fraction(3, 2))),
    ("-1/2i", GaussianRational(0, Fraction(-1, 2))),
    ("2+3i", GaussianRational(2, 3)),
    ("-7/3 - 2/5i", GaussianRational(Fraction(-7, 3), Fraction(-2, 5))),
    ("0.5", 0.5 + 0j),
    ("1e3-2.5i", 1000 - 2.5j),
])
def test_values(text, value):
    assert parse_recursion(f"z(n+1) = c * z(n); c = {text}").spec.constant == value


def test_factor_order_and_missing_lags():
    doc = parse_recursion("z(n+3)=c*z(n)*z(n+2)^-2;c=1")
    assert doc.spec.exponents == (1, 0, -2)


def test_decimal_forces_numeric_mode():
    doc = parse_recursion("z(n+1) = c * z(n); c = 2; z(0) = 1.5")
    assert not doc.spec.is_exact
    assert isinstance(doc.spec.constant, complex)


@pytest.mark.parametrize("text, line, column", [
    ("z(n+2) = c * z(n+1)^1.5", 1, 22),
    ("z(n+2) = c * z(n+1) * z(n+1); c = 1", 1, 23),
    ("z(n+1) = c * z(n+1); c = 1", 1, 14),
    ("z(n+0) = c; c = 1", 1, 5),
    ("z(n+1) = c * z(n)", 1, 18),
    ("z(n+1) = c * z(n); c = 1; c = 2", 1, 27),
    ("z(n+2) = c * z(n); c = 1; z(0) = 1", 1, 35),
    ("z(n+1) = c * z(n);\nc = 0", 2, 1),
    ("z(n+1) = c * z(n); c = 1; z(0) = 0", 1, 27),
    ("z(n+1) = c * z(n); c = 1/0", 1, 26),
    ("", 1, 1),
    ("y(n+1) = c", 1, 1),
])
def test_errors_have_positions(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_recursion(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(info.value)


def test_validation_cause_is_kept():
    with pytest.raises(ParseError) as info:
        parse_recursion("z(n+1) = c * z(n); c = 0")
    assert isinstance(info.value.cause, ZeroBase)


def test_expected_tokens_are_reported():
    with pytest.raises(ParseError) as info:
        parse_recursion("z(n+1) = c z(n); c = 1")
    assert "'*'" in info.value.expected


@given(specs())
@settings(max_examples=200)
def test_dsl_round_trip(spec):
    text = render_recursion(spec)
    again = parse_recursion(text).spec
    assert again == spec
    assert render_recursion(again) == text


@given(specs())
@settings(max_examples=200)
def test_json_round_trip(spec):
    doc = parse_recursion(render_recursion(spec))
    assert loads_document(dumps_document(doc)).spec == spec


def test_json_rationals_are_strings():
    doc = parse_recursion("z(n+1) = c * z(n); c = 22/7")
    data = json.loads(dumps_document(doc))
    assert data["c"] == {"re": "22/7", "im": "0"}


def test_json_queries():
    doc = loads_document(json.dumps({
        "order": 1, "exponents": [2], "c": "3", "initial": [2],
        "queries": [{"s": 4}, {"s": 5, "path": "logmag"}]}))
    assert [(q.s, q.path) for q in doc.queries] == [(4, "exact"), (5, "logmag")]


@pytest.mark.parametrize("text", [
    "{", "[]", '{"order": 1}', '{"order": 1, "exponents": [1.5], "c": 1}',
    '{"order": 1, "exponents": [1], "c": 0}', '{"order": 1, "exponents": [1], "c": "x"}',
    '{"order": 1, "exponents": [1], "c": 1, "queries": [{"s": -1}]}',
    '{"order": 1, "exponents": [1], "c": 1, "queries": [{"s": 1, "path": "fast"}]}',
])
def test_json_errors(text):
    with pytest.raises(ParseError):
        loads_document(text)


@given(st.text(alphabet="zcn()+-*^=;/.ie0123456789 \n", max_size=60))
@settings(max_examples=400)
def test_parser_totality(text):
    try:
        parse_recursion(text)
    except ParseError as err:
        assert err.line >= 1 and err.column >= 1


def test_huge_literals_are_rejected_cleanly():
    with pytest.raises(ParseError):
        parse_recursion("z(n+1) = c * z(n); c = " + "9" * 5000)
    with pytest.raises(ParseError):
        parse_recursion("z(n+100000) = c; c = 1")


def test_render_solution_order_one():
    spec = make_spec([2], 3)
    text = render_solution(spectral_solution(spec), spec)
    assert "alpha(s) = 2^s" in text
    assert "gamma(s) = 2^s - 1" in text


def test_render_solution_double_root():
    spec = make_spec([-1, 2], 1)
    text = render_solution(spectral_solution(spec), spec)
    assert "double root" in text and "confluent basis" in text


def test_render_solution_golden_ratio():
    spec = make_spec([1, 1], 1)
    text = render_solution(spectral_solution(spec), spec)
    assert "1.6180339887498949" in text and "-0.61803398874989479" in text
    assert "root residual:" in text
    data = solution_to_dict(spectral_solution(spec), spec)
    assert data["roots"][0]["multiplicity"] == 1
    assert json.loads(json.dumps(data)) == data


def test_render_is_deterministic():
    spec = make_spec([3, -1, 2], 2)
    assert render_solution(spectral_solution(spec), spec) == \
        render_solution(spectral_solution(spec), spec)
