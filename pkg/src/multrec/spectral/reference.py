"""Explicit closed forms for orders 1 and 2, in exact arithmetic.

These are kept independent of the companion-matrix engine on purpose: they
are test oracles, not a solving path.

The generic order-2 formulas involve ``y_pm = (a1 +- d) / 2`` with
``d = sqrt(a1**2 + 4 a0)``, usually irrational or complex. They are evaluated
in the ring ``Q[t] / (t**2 - D)`` with ``D = a1**2 + 4 a0``: there
``y_pm**s = U +- V t``, so ``(y_+**s - y_-**s) / d = 2 V`` exactly. This holds
whether or not ``D`` is a perfect square or negative.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Tuple

from ..core import ExponentVector, RecursionSpec, validate_spec
from ..errors import UnsupportedOrder

Quad = Tuple[Fraction, Fraction]


def _qmul(x: Quad, y: Quad, disc: int) -> Quad:
    return (x[0] * y[0] + x[1] * y[1] * disc, x[0] * y[1] + x[1] * y[0])


def _qpow(x: Quad, k: int, disc: int) -> Quad:
    result: Quad = (Fraction(1), Fraction(0))
    while k:
        if k & 1:
            result = _qmul(result, x, disc)
        k >>= 1
        if k:
            x = _qmul(x, x, disc)
    return result


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"closed form produced non-integer {x}")
    return x.numerator


def _pow0(base: int, k: int) -> int:
    # 0**0 == 1, as the sums in the resonant formula require
    return 1 if k == 0 else base**k


def reference_branch(spec: RecursionSpec) -> str:
    """Which explicit formula applies: ``'p1'``, ``'p1-unit'``, ``'generic'``,
    ``'repeated-root'``, ``'resonant'`` or ``'doubly-special'``."""
    spec = validate_spec(spec)
    if spec.order == 1:
        return "p1-unit" if spec.exponents[0] == 1 else "p1"
    if spec.order != 2:
        raise UnsupportedOrder(f"reference formulas exist for p <= 2, got p={spec.order}")
    a0, a1 = spec.exponents
    if a1 == 2 and a0 == -1:
        return "doubly-special"
    if a1 + a0 == 1:
        return "resonant"
    if a1 * a1 + 4 * a0 == 0:
        return "repeated-root"
    return "generic"


def reference_exponents(spec: RecursionSpec, s: int) -> Optional[ExponentVector]:
    """Exponents at step ``s`` from the explicit order-1/order-2 formulas.

    Order 1 with ``a = 1`` uses ``gamma(s) = s``, ``alpha(s) = 1`` (the limit of
    the general branch). ``z(0)**(s+1)`` would not satisfy the recursion.

    Raises
    ------
    UnsupportedOrder
        For ``p > 2``.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    branch = reference_branch(spec)
    a = validate_spec(spec).exponents

    if branch == "p1":
        (e,) = a
        alpha = e**s
        gamma = Fraction(1 - alpha, 1 - e)
        return ExponentVector(s, _as_int(gamma), (alpha,))
    if branch == "p1-unit":
        return ExponentVector(s, s, (1,))

    a0, a1 = a
    if branch == "doubly-special":
        return ExponentVector(s, s * (s - 1) // 2, (1 - s, s))

    if branch == "resonant":
        x = a1 - 1
        expo = _as_int(Fraction(1 - _pow0(x, s), 2 - a1))
        gamma = sum((s - 1 - l) * _pow0(x, l) for l in range(s - 1))
        return ExponentVector(s, gamma, (1 - expo, expo))

    if branch == "repeated-root":
        y = a1 // 2
        alpha1 = 0 if s == 0 else s * _pow0(y, s - 1)
        alpha0 = (1 - s) * _pow0(y, s)
    else:
        disc = a1 * a1 + 4 * a0
        yplus: Quad = (Fraction(a1, 2), Fraction(1, 2))
        alpha1 = _as_int(2 * _qpow(yplus, s, disc)[1])
        if s == 0:
            # -y+ y- (1/y+ - 1/y-) / d reduces to (y+ - y-) / d
            alpha0 = 1
        else:
            # -y+ y- = a0
            alpha0 = _as_int(a0 * 2 * _qpow(yplus, s - 1, disc)[1])
    gamma = Fraction(1 - alpha1 - alpha0, 1 - a1 - a0)
    return ExponentVector(s, _as_int(gamma), (alpha0, alpha1))
