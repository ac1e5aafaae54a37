import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from multrec import (closed_form_exponents, exponents_at, make_spec,
                     spectral_solution)
from multrec.errors import RootFindingFailed, ToleranceInvalid
from multrec.spectral import characteristic_roots
from multrec.spectral.roots import (aberth, char_poly, integer_roots,
                                    poly_backward_error,
                                    squarefree_decomposition)
from multrec.spectral.solver import basis_value


def _close(x, y, rel=1e-9):
    return abs(complex(x) - y) <= rel * max(1.0, abs(y))


def test_char_poly_coefficients():
    assert char_poly(make_spec([3, -1, 2])) == [-3, 1, -2, 1]


def test_squarefree_decomposition():
    # (y - 1)**2 (y + 2)
    parts = squarefree_decomposition([2, -3, 0, 1])
    assert sorted(m for _, m in parts) == [1, 2]


def test_integer_roots():
    roots, rest = integer_roots([-6, 11, -6, 1])
    assert sorted(roots) == [1, 2, 3]


def test_golden_ratio_roots():
    rs = characteristic_roots(make_spec([1, 1]))
    phi = (1 + math.sqrt(5)) / 2
    assert rs.roots[0] == pytest.approx(phi, abs=1e-15)
    assert rs.roots[1] == pytest.approx(1 - phi, abs=1e-15)
    assert rs.residual < 1e-15


def test_repeated_roots_found_exactly():
    # y^3 - 3y^2 + 3y - 1 = (y - 1)^3
    rs = characteristic_roots(make_spec([1, -3, 3]))
    assert rs.multiplicities == (3,)
    assert rs.roots[0] == 1
    # (y^2 + 1)^2 = y^4 + 2y^2 + 1
    rs = characteristic_roots(make_spec([-1, 0, -2, 0]))
    assert rs.multiplicities == (2, 2)
    assert sorted(abs(y.imag) for y in rs.roots) == [pytest.approx(1)] * 2


def test_zero_root():
    rs = characteristic_roots(make_spec([0, 0, 1]))
    assert dict(zip(rs.roots, rs.multiplicities))[0] == 2


def test_aberth_polishes_to_small_backward_error():
    poly = [7, -3, 0, 2, 5, 1]
    for y in aberth(poly):
        assert poly_backward_error(poly, y) < 1e-13


def test_invalid_tolerances():
    with pytest.raises(ToleranceInvalid):
        characteristic_roots(make_spec([1, 1]), tol=0)
    with pytest.raises(ToleranceInvalid):
        characteristic_roots(make_spec([1, 1]), cluster=-1)


def test_root_finding_failure_is_reported():
    # a residual tolerance below machine precision cannot be met for irrational roots
    with pytest.raises(RootFindingFailed):
        characteristic_roots(make_spec([1, 1, 1]), tol=1e-30)


def test_basis_value_conventions():
    assert basis_value(0j, 0, 0) == 1
    assert basis_value(0j, 1, 1) == 1
    assert basis_value(0j, 1, 2) == 0
    assert basis_value(2 + 0j, 2, 5) == pytest.approx(10 * 8)
    assert basis_value(3 + 0j, 2, 1) == 0


def test_order_one_doubling():
    sol = spectral_solution(make_spec([2]))
    assert sol.gamma_offset == -1
    assert sol.offset_coeffs()[0] == pytest.approx(1)
    assert sol.alpha_coeffs[0][0] == pytest.approx(1)


def test_confluent_double_root():
    sol = spectral_solution(make_spec([-1, 2]))
    assert sol.confluent and sol.resonant
    for s in range(30):
        ce = closed_form_exponents(sol, s)
        assert _close(ce.gamma, s * (s - 1) // 2)
        assert _close(ce.alphas[1], s)


def test_p2_coefficients_match_root_formulas():
    for a0, a1 in [(1, 1), (2, 1), (3, -2), (-2, 3), (5, 4), (-3, 1)]:
        sol = spectral_solution(make_spec([a0, a1]))
        yp, ym = sol.root_set.roots
        d = yp - ym
        np.testing.assert_allclose(sol.alpha_coeffs[1], [1 / d, -1 / d], rtol=1e-12, atol=1e-12)
        np.testing.assert_allclose(sol.alpha_coeffs[0], [-ym / d, yp / d], rtol=1e-12, atol=1e-12)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4), st.integers(0, 40))
@settings(max_examples=100, deadline=None)
def test_closed_form_matches_engine(a, s):
    spec = make_spec(a)
    rs = characteristic_roots(spec)
    assume(rs.min_separation() > 1e-3)
    sol = spectral_solution(spec)
    exact = exponents_at(spec, s, bit_budget=None)
    ce = closed_form_exponents(sol, s)
    assert _close(ce.gamma, exact.gamma)
    for x, y in zip(ce.alphas, exact.alphas):
        assert _close(x, y)
