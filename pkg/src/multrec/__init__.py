"""Solve ``z(s+p) = c * prod_l z(s+l)**a_l`` exactly, modularly and spectrally.

Every ``z(s)`` is ``c**gamma(s) * prod_n z(n)**alpha_n(s)`` with integer
exponents obeying linear recursions. This package computes those exponents
by iteration or fast doubling, in closed form from the characteristic roots,
and reconstructs ``z(s)`` over the Gaussian rationals or in floating point.
"""

__version__ = "0.1.0"

from .core import (ExponentVector, RecursionSpec, make_spec, oracle_exponents,
                   oracle_iterate, reconstruct, validate_spec)
from .engine import (AugmentedCompanion, build_companion, companion_power,
                     exponents_at, exponents_at_mod)
from .errors import (ArityMismatch, MultrecError, NonExactData,
                     NonIntegerExponent, OrderZero, OverflowBudgetExceeded,
                     ParseError, RootFindingFailed, SingularSystem,
                     ToleranceInvalid, UnsupportedOrder, ValidationError,
                     ZeroBase)
from .evaluator import (EvalResult, evaluate_exact, evaluate_log_magnitude,
                        evaluate_numeric)
from .gaussian import DEFAULT_BIT_BUDGET, GaussianRational
from .spectral import (RootSet, SpectralSolution, characteristic_roots,
                       closed_form_exponents, reference_exponents,
                       solve_coefficients, spectral_solution)
from .spec_io import (ProblemDocument, Query, dumps_document, loads_document,
                      parse_recursion, render_recursion, render_solution)

__all__ = [name for name in dir() if not name.startswith("_")]
