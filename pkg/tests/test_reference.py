import itertools

import pytest

from multrec import exponents_at, make_spec, oracle_iterate
from multrec.errors import UnsupportedOrder
from multrec.spectral import reference_branch, reference_exponents


@pytest.mark.parametrize("a0, a1, branch", [
    (1, 1, "generic"), (-4, 4, "repeated-root"), (0, 1, "resonant"),
    (3, -2, "resonant"), (-1, 2, "doubly-special"), (-1, 1, "generic"),
])
def test_branches(a0, a1, branch):
    assert reference_branch(make_spec([a0, a1])) == branch


def test_order_one_branches():
    assert reference_branch(make_spec([1])) == "p1-unit"
    assert reference_branch(make_spec([3])) == "p1"


def test_higher_order_rejected():
    with pytest.raises(UnsupportedOrder):
        reference_exponents(make_spec([1, 1, 1]), 3)


def test_unit_exponent_closed_form():
    # z(s+1) = c z(s): z(s) = c**s z(0)
    spec = make_spec([1], 2, [3])
    zs = oracle_iterate(spec, 6)
    for s, z in enumerate(zs):
        vec = reference_exponents(spec, s)
        assert vec.gamma == s and vec.alphas == (1,)
        assert z == 2**s * 3


def test_z0_to_the_s_plus_one_is_not_a_solution():
    spec = make_spec([1], 2, [3])
    assert [2**s * 3**(s + 1) for s in range(4)] != oracle_iterate(spec, 3)


def test_grid_against_engine():
    for a0, a1 in itertools.product(range(-4, 5), repeat=2):
        spec = make_spec([a0, a1])
        for s in range(0, 41, 5):
            assert reference_exponents(spec, s) == exponents_at(spec, s, bit_budget=None)
