"""Values of ``z(s)`` itself, exactly or in the log domain.

Three paths:

``exact``
    ``c**gamma * prod z(l)**alpha_l`` over Gaussian rationals with the exact
    exponents from :func:`~multrec.engine.exponents_at`.
``numeric-log``
    ``exp(gamma Log c + sum alpha_l Log z(l))`` in floating point. Because
    every exponent is an integer, a ``2 pi i`` change in any logarithm shifts
    the total by an integer number of turns, so the principal branch is as
    good as any other. To keep that true numerically as well, the angular
    part is accumulated in turns with the integer multiples dropped exactly.
``spectral-log-magnitude``
    Only ``ln|z(s)|``, from floating spectral exponents, for ``s`` far too
    large for exact exponents.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .core import (RecursionSpec, _require_exact_initial, reconstruct,
                   validate_spec)
from .engine import exponents_at
from .errors import ArityMismatch, OverflowBudgetExceeded
from .gaussian import DEFAULT_BIT_BUDGET, GaussianRational
from .spectral.solver import SpectralSolution, closed_form_exponents

EXACT = "exact"
NUMERIC_LOG = "numeric-log"
LOG_MAGNITUDE = "spectral-log-magnitude"

_TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class EvalResult:
    step: int
    value: Union[GaussianRational, complex, float]
    path: str
    diagnostics: dict = field(default_factory=dict)


def evaluate_exact(spec: RecursionSpec, s: int,
                   bit_budget: Optional[int] = DEFAULT_BIT_BUDGET) -> EvalResult:
    """Exact ``z(s)`` from exact exponents; equals the iterated value."""
    spec = validate_spec(spec)
    _require_exact_initial(spec)
    if s < 0:
        raise ValueError("s must be nonnegative")
    if s < spec.order:
        value = spec.initial_values[s]
        return EvalResult(s, value, EXACT, {"bits": value.bit_size()})
    vec = exponents_at(spec, s, bit_budget)
    try:
        value = reconstruct(spec, vec, bit_budget)
    except OverflowBudgetExceeded as exc:
        raise OverflowBudgetExceeded(
            f"z({s}) exceeds the bit budget: {exc}", bits=exc.bits,
            budget=bit_budget, step=s) from None
    return EvalResult(s, value, EXACT,
                      {"bits": value.bit_size(), "exponent_bits": vec.max_bits()})


class _Log:
    """``ln|w| + 2 pi i * turns`` with ``turns`` kept as an exact dyadic."""

    __slots__ = ("mag", "turns")

    def __init__(self, w: complex, shift: int = 0):
        self.mag = math.log(abs(w))
        self.turns = Fraction(cmath.phase(w) / _TWO_PI) + shift


def _principal_logs(spec: RecursionSpec, shifts: Optional[Sequence[int]]):
    bases = [complex(spec.constant)] + [complex(v) for v in spec.initial_values]
    shifts = list(shifts) if shifts is not None else [0] * len(bases)
    if len(shifts) != len(bases):
        raise ValueError(f"need {len(bases)} branch shifts, got {len(shifts)}")
    return [_Log(w, k) for w, k in zip(bases, shifts)]


def evaluate_numeric(spec: RecursionSpec, s: int,
                     branch_shifts: Optional[Sequence[int]] = None) -> EvalResult:
    """Floating ``z(s) = exp(gamma Log c + sum alpha_l Log z(l))``.

    ``branch_shifts`` (one integer per base, ``c`` first) replaces ``Log w`` by
    ``Log w + 2 pi i k``; results do not depend on it. Overflow is reported in
    ``diagnostics['overflow']`` rather than raised.
    """
    spec = validate_spec(spec)
    if spec.initial_values is None:
        raise ArityMismatch("initial values are required")
    if s < 0:
        raise ValueError("s must be nonnegative")
    if s < spec.order:
        return EvalResult(s, complex(spec.initial_values[s]), NUMERIC_LOG,
                          {"overflow": False})
    vec = exponents_at(spec, s, bit_budget=None)
    logs = _principal_logs(spec, branch_shifts)
    ks = (vec.gamma,) + vec.alphas
    log_mag = math.fsum(float(k) * lg.mag for k, lg in zip(ks, logs) if k and lg.mag)
    turns = sum((k * lg.turns for k, lg in zip(ks, logs)), Fraction(0))
    frac = turns - math.floor(turns)
    angle = _TWO_PI * float(frac)
    diag = {"log_magnitude": log_mag, "overflow": False}
    try:
        mag = math.exp(log_mag)
    except OverflowError:
        mag = math.inf
        diag["overflow"] = True
    if mag == math.inf:
        value = complex(math.inf, 0.0)
        diag["overflow"] = True
    else:
        value = complex(mag * math.cos(angle), mag * math.sin(angle))
    return EvalResult(s, value, NUMERIC_LOG, diag)


def evaluate_log_magnitude(spec: RecursionSpec, solution: SpectralSolution,
                           s: int) -> EvalResult:
    """``ln|z(s)|`` from the spectral exponents; works for astronomically large ``s``."""
    spec = validate_spec(spec)
    if spec.initial_values is None:
        raise ArityMismatch("initial values are required")
    if s < 0:
        raise ValueError("s must be nonnegative")
    ce = closed_form_exponents(solution, s)
    mags = [math.log(abs(complex(spec.constant)))] + \
        [math.log(abs(complex(v))) for v in spec.initial_values]
    ks = (ce.gamma,) + ce.alphas
    terms = [k.real * m for k, m in zip(ks, mags) if m != 0.0]
    if any(math.isnan(t) for t in terms) or (
            any(t == math.inf for t in terms) and any(t == -math.inf for t in terms)):
        value = math.nan
    else:
        value = math.fsum(terms) if all(math.isfinite(t) for t in terms) else sum(terms)
    return EvalResult(s, float(value), LOG_MAGNITUDE,
                      {"nonfinite": not math.isfinite(value),
                       "max_imag_exponent": ce.max_imag,
                       "exponent_overflow": ce.overflow})
