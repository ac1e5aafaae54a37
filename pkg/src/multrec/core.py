"""Problem data model and the brute-force ground truth.

A multiplicative recursion of order ``p`` is

    z(s+p) = c * prod_{l<p} z(s+l) ** a[l]

with integer exponents ``a[0..p-1]``. Writing every term as
``z(s) = c**gamma(s) * prod_l z(l)**alpha_l(s)`` turns it into ``p + 1`` linear
recursions with the same coefficients: the ``alpha`` sequences are homogeneous
and ``gamma`` carries an extra ``+1`` per step.

Everything here is deliberately naive. :func:`oracle_iterate` and
:func:`oracle_exponents` step the recursions one index at a time and are what
the fast and spectral paths get checked against.
"""

from __future__ import annotations

import cmath
import numbers
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from .errors import (ArityMismatch, NonExactData, NonIntegerExponent,
                     OrderZero, OverflowBudgetExceeded, ValidationError,
                     ZeroBase)
from .gaussian import DEFAULT_BIT_BUDGET, GaussianRational

Value = Union[GaussianRational, complex]


@dataclass(frozen=True)
class RecursionSpec:
    """The recursion ``z(s+p) = c * prod z(s+l)**exponents[l]``.

    ``exponents[l]`` multiplies ``z(s+l)``, so ``exponents[0]`` is the lag
    furthest back. ``initial_values`` may be ``None`` when only the exponent
    functions are wanted. Build instances through :func:`validate_spec` or
    :func:`make_spec`; the constructor itself does not check anything.
    """

    order: int
    exponents: Tuple[int, ...]
    constant: Value = GaussianRational(1)
    initial_values: Optional[Tuple[Value, ...]] = None

    @property
    def is_exact(self) -> bool:
        """True when ``c`` and every initial value are Gaussian rationals."""
        vals = (self.constant,) + tuple(self.initial_values or ())
        return all(isinstance(v, GaussianRational) for v in vals)

    @property
    def exponent_sum(self) -> int:
        return sum(self.exponents)

    @property
    def resonant(self) -> bool:
        """``sum(a) == 1``: y = 1 is a characteristic root."""
        return self.exponent_sum == 1

    def with_initial_values(self, values) -> "RecursionSpec":
        return validate_spec(RecursionSpec(self.order, self.exponents,
                                           self.constant, tuple(values)))


@dataclass(frozen=True)
class ExponentVector:
    """Exponents at step ``s``: ``z(s) = c**gamma * prod z(l)**alphas[l]``."""

    step: int
    gamma: int
    alphas: Tuple[int, ...]

    def mod(self, m: int) -> "ExponentVector":
        return ExponentVector(self.step, self.gamma % m,
                              tuple(a % m for a in self.alphas))

    def max_bits(self) -> int:
        return max(abs(v).bit_length() for v in (self.gamma,) + self.alphas)


def _canonical_value(v, what):
    if isinstance(v, GaussianRational):
        return v
    if isinstance(v, bool):
        raise ValidationError(f"{what}: booleans are not numeric data")
    if isinstance(v, numbers.Rational):
        return GaussianRational(v)
    if isinstance(v, numbers.Complex):
        v = complex(v)
        if not (cmath.isfinite(v)):
            raise ValidationError(f"{what} must be finite, got {v!r}")
        return v
    if isinstance(v, str):
        try:
            return GaussianRational(Fraction(v))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"{what}: cannot read {v!r}") from exc
    raise ValidationError(f"{what}: unsupported value type {type(v).__name__}")


def _is_zero(v) -> bool:
    return v.is_zero() if isinstance(v, GaussianRational) else v == 0


def validate_spec(raw: RecursionSpec) -> RecursionSpec:
    """Check invariants and return a canonical copy of ``raw``.

    Rationals become :class:`GaussianRational` (hence reduced). If any of
    ``c`` or the initial values is a float/complex, all of them are converted
    to ``complex`` and the recursion is numeric-only.

    Raises
    ------
    OrderZero, ArityMismatch, ZeroBase, NonIntegerExponent
    """
    try:
        p = operator.index(raw.order)
    except TypeError as exc:
        raise OrderZero(f"order must be an integer, got {raw.order!r}") from exc
    if p < 1:
        raise OrderZero(f"order must be at least 1, got {p}")

    exps = tuple(raw.exponents)
    if len(exps) != p:
        raise ArityMismatch(f"order {p} needs {p} exponents, got {len(exps)}")
    canon_exps = []
    for l, a in enumerate(exps):
        if isinstance(a, bool):
            raise NonIntegerExponent(f"exponent a[{l}] is a boolean")
        try:
            canon_exps.append(operator.index(a))
        except TypeError:
            if isinstance(a, Fraction) and a.denominator == 1:
                canon_exps.append(a.numerator)
            else:
                raise NonIntegerExponent(
                    f"exponent a[{l}] = {a!r} is not an integer") from None

    c = _canonical_value(raw.constant, "constant c")
    if _is_zero(c):
        raise ZeroBase("constant c must be nonzero")

    init = None
    if raw.initial_values is not None:
        init = tuple(_canonical_value(v, f"z({l})")
                     for l, v in enumerate(raw.initial_values))
        if len(init) != p:
            raise ArityMismatch(
                f"order {p} needs {p} initial values, got {len(init)}")
        for l, v in enumerate(init):
            if _is_zero(v):
                raise ZeroBase(f"initial value z({l}) must be nonzero")

    vals = (c,) + (init or ())
    if not all(isinstance(v, GaussianRational) for v in vals):
        c = complex(c)
        if init is not None:
            init = tuple(complex(v) for v in init)

    return RecursionSpec(p, tuple(canon_exps), c, init)


def make_spec(exponents: Sequence[int], constant=1,
              initial_values: Optional[Sequence] = None) -> RecursionSpec:
    """Shorthand: the order is ``len(exponents)``; result is validated."""
    return validate_spec(RecursionSpec(
        len(exponents), tuple(exponents), constant,
        None if initial_values is None else tuple(initial_values)))


def _require_exact_initial(spec: RecursionSpec):
    if spec.initial_values is None:
        raise ArityMismatch("initial values are required")
    if not spec.is_exact:
        raise NonExactData("exact evaluation needs Gaussian-rational data")


def oracle_iterate(spec: RecursionSpec, s_max: int,
                   bit_budget: Optional[int] = DEFAULT_BIT_BUDGET) -> list:
    """``[z(0), ..., z(s_max)]`` by literal step-by-step iteration.

    On budget overflow the raised :class:`OverflowBudgetExceeded` carries the
    failing ``step`` and the completed prefix in ``partial``.
    """
    spec = validate_spec(spec)
    _require_exact_initial(spec)
    if s_max < 0:
        raise ValueError("s_max must be nonnegative")
    p, a, c = spec.order, spec.exponents, spec.constant
    z = list(spec.initial_values[:s_max + 1])
    for s in range(p, s_max + 1):
        try:
            val = c
            for l in range(p):
                if a[l]:
                    val = val * z[s - p + l].power(a[l], bit_budget)
            if bit_budget is not None and val.bit_size() > bit_budget:
                raise OverflowBudgetExceeded(
                    f"z({s}) needs {val.bit_size()} bits",
                    bits=val.bit_size(), budget=bit_budget)
        except OverflowBudgetExceeded as exc:
            raise OverflowBudgetExceeded(
                f"oracle iteration exceeded the bit budget at s={s}: {exc}",
                bits=exc.bits, budget=bit_budget, step=s, partial=z) from None
        z.append(val)
    return z


def oracle_exponents(spec: RecursionSpec, s_max: int,
                     bit_budget: Optional[int] = DEFAULT_BIT_BUDGET) -> list:
    """ExponentVectors for ``s = 0..s_max`` by direct linear iteration.

    Seeds are the Kronecker window ``alpha_n(s) = [n == s]``, ``gamma(s) = 0``
    for ``s < p``; afterwards ``alpha_n(s+p) = sum a_l alpha_n(s+l)`` and
    ``gamma(s+p) = 1 + sum a_l gamma(s+l)``.
    """
    spec = validate_spec(spec)
    if s_max < 0:
        raise ValueError("s_max must be nonnegative")
    p, a = spec.order, spec.exponents
    gamma = [0] * p
    alpha = [[int(n == s) for s in range(p)] for n in range(p)]
    out = []
    for s in range(s_max + 1):
        if s >= p:
            g = 1 + sum(a[l] * gamma[s - p + l] for l in range(p))
            gamma.append(g)
            for n in range(p):
                seq = alpha[n]
                seq.append(sum(a[l] * seq[s - p + l] for l in range(p)))
            vec = ExponentVector(s, g, tuple(alpha[n][s] for n in range(p)))
            if bit_budget is not None and vec.max_bits() > bit_budget:
                raise OverflowBudgetExceeded(
                    f"exponents at s={s} need {vec.max_bits()} bits",
                    bits=vec.max_bits(), budget=bit_budget, step=s, partial=out)
        else:
            vec = ExponentVector(s, 0, tuple(alpha[n][s] for n in range(p)))
        out.append(vec)
    return out


def reconstruct(spec: RecursionSpec, vec: ExponentVector,
                bit_budget: Optional[int] = DEFAULT_BIT_BUDGET) -> GaussianRational:
    """``c**gamma * prod z(l)**alpha_l`` in exact arithmetic."""
    _require_exact_initial(spec)
    val = spec.constant.power(vec.gamma, bit_budget)
    for z, k in zip(spec.initial_values, vec.alphas):
        if k:
            val = val * z.power(k, bit_budget)
    if bit_budget is not None and val.bit_size() > bit_budget:
        raise OverflowBudgetExceeded(
            f"value needs {val.bit_size()} bits, budget is {bit_budget}",
            bits=val.bit_size(), budget=bit_budget, step=vec.step)
    return val
