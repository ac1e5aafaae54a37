"""Exact exponents at arbitrary ``s`` by fast doubling of a companion matrix.

The ``alpha`` recursions and the inhomogeneous ``gamma`` recursion are packed
into one ``(p+1) x (p+1)`` integer matrix ``M``::

    [0 1 0 ... 0 | 0]
    [0 0 1 ... 0 | 0]
    [   ...      |  ]
    [a0 a1 ... a_{p-1} | 1]
    [0 0 ...  0  | 1]

Multiplying ``M`` by a window ``(x(s), ..., x(s+p-1), t)`` advances it one
step, adding ``t`` to the new last entry. Seeding with ``t = 0`` and a unit
vector gives the ``alpha`` sequences; seeding with zeros and ``t = 1`` gives
``gamma``. Consequently row 0 of ``M**s`` is exactly
``(alpha_0(s), ..., alpha_{p-1}(s), gamma(s))``, and no division by
``1 - sum(a)`` ever appears, so the resonant case needs no special handling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .core import ExponentVector, RecursionSpec, validate_spec
from .errors import OverflowBudgetExceeded
from .gaussian import DEFAULT_BIT_BUDGET

Matrix = List[List[int]]


@dataclass(frozen=True)
class AugmentedCompanion:
    dimension: int
    entries: Tuple[Tuple[int, ...], ...]

    def as_lists(self) -> Matrix:
        return [list(row) for row in self.entries]


def build_companion(spec: RecursionSpec) -> AugmentedCompanion:
    spec = validate_spec(spec)
    p = spec.order
    m = [[0] * (p + 1) for _ in range(p + 1)]
    for i in range(p - 1):
        m[i][i + 1] = 1
    m[p - 1][:p] = list(spec.exponents)
    m[p - 1][p] = 1
    m[p][p] = 1
    return AugmentedCompanion(p + 1, tuple(tuple(r) for r in m))


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(x: Matrix, y: Matrix, modulus: Optional[int] = None) -> Matrix:
    cols = list(zip(*y))
    if modulus is None:
        return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in x]
    return [[sum(a * b for a, b in zip(row, col)) % modulus for col in cols]
            for row in x]


def _vecmat(v: Sequence[int], y: Matrix, modulus: Optional[int]) -> List[int]:
    n = len(y)
    out = [sum(v[k] * y[k][j] for k in range(n)) for j in range(n)]
    if modulus is not None:
        out = [x % modulus for x in out]
    return out


def _check(mat, budget):
    if budget is None:
        return
    bits = max(abs(x).bit_length() for row in mat for x in row)
    if bits > budget:
        raise OverflowBudgetExceeded(
            f"companion power needs {bits} bits, budget is {budget}",
            bits=bits, budget=budget)


def companion_power(comp: AugmentedCompanion, k: int,
                    modulus: Optional[int] = None,
                    bit_budget: Optional[int] = None) -> Matrix:
    """Full ``M**k`` by square-and-multiply (optionally reduced mod ``modulus``)."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    result = identity(comp.dimension)
    base = comp.as_lists()
    if modulus is not None:
        base = [[x % modulus for x in row] for row in base]
    while k:
        if k & 1:
            result = matmul(result, base, modulus)
            _check(result, bit_budget)
        k >>= 1
        if k:
            base = matmul(base, base, modulus)
            _check(base, bit_budget)
    return result


def _first_row_of_power(spec: RecursionSpec, s: int, modulus, bit_budget):
    comp = build_companion(spec)
    n = comp.dimension
    row = [1] + [0] * (n - 1)
    base = comp.as_lists()
    if modulus is not None:
        base = [[x % modulus for x in r] for r in base]
    k = s
    while k:
        if k & 1:
            row = _vecmat(row, base, modulus)
            _check([row], bit_budget)
        k >>= 1
        if k:
            base = matmul(base, base, modulus)
            _check(base, bit_budget)
    return row


def exponents_at(spec: RecursionSpec, s: int,
                 bit_budget: Optional[int] = DEFAULT_BIT_BUDGET) -> ExponentVector:
    """Exact ``ExponentVector`` at step ``s`` in O(log s) matrix products.

    >>> from multrec.core import make_spec
    >>> exponents_at(make_spec([1, 1]), 10)
    ExponentVector(step=10, gamma=88, alphas=(34, 55))
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    spec = validate_spec(spec)
    try:
        row = _first_row_of_power(spec, s, None, bit_budget)
    except OverflowBudgetExceeded as exc:
        raise OverflowBudgetExceeded(
            f"exponents at s={s} exceed the bit budget: {exc}",
            bits=exc.bits, budget=bit_budget, step=s) from None
    p = spec.order
    return ExponentVector(s, row[p], tuple(row[:p]))


def exponents_at_mod(spec: RecursionSpec, s: int, m: int) -> ExponentVector:
    """``exponents_at(spec, s)`` reduced componentwise into ``[0, m)``."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    if m < 2:
        raise ValueError("modulus must be at least 2")
    spec = validate_spec(spec)
    row = _first_row_of_power(spec, s, m, None)
    p = spec.order
    return ExponentVector(s, row[p] % m, tuple(x % m for x in row[:p]))
