"""Spectral closed form of the exponent functions.

For a root ``y`` of multiplicity ``m`` the basis functions are
``b_j(s) = C(s, j) * y**(s - j)`` for ``j < m`` (zero when ``s < j``, and
``0**0 = 1``). Then

    alpha_n(s) = sum_k A[n, k] b_k(s)
    gamma(s)   = sum_k D[k]    g_k(s)

where the ``b_k`` run over the characteristic roots and the ``g_k`` over the
roots of ``(y - 1) * char_poly``. The extra factor turns the constant forcing
term of the gamma recursion into one more root, so the resonant case
``sum(a) == 1`` is just a multiplicity bump at ``y = 1``. When not resonant,
the coefficient attached to the simple root ``y = 1`` is the fixed point
``1 / (1 - sum(a))`` and the remaining entries are the usual ``C_l``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from ..core import RecursionSpec, validate_spec
from ..errors import SingularSystem
from .roots import (DEFAULT_CLUSTER, RootSet, augmented_roots,
                    characteristic_roots)

DEFAULT_MAX_CONDITION = 1e12


@dataclass(frozen=True)
class SpectralSolution:
    order: int
    exponents: Tuple[int, ...]
    root_set: RootSet
    alpha_coeffs: np.ndarray
    gamma_root_set: RootSet
    gamma_coeffs: np.ndarray
    gamma_offset: Optional[float]
    condition: float

    @property
    def alpha_basis(self):
        return _basis(self.root_set)

    @property
    def gamma_basis(self):
        return _basis(self.gamma_root_set)

    @property
    def resonant(self) -> bool:
        return self.gamma_offset is None

    @property
    def confluent(self) -> bool:
        return any(m > 1 for m in self.root_set.multiplicities)

    def offset_coeffs(self) -> Optional[np.ndarray]:
        """The ``C_l`` of ``gamma(s) = offset + sum C_l b_l(s)`` (non-resonant only).

        They are the gamma coefficients with the ``y = 1`` entry removed,
        listed in the order of :attr:`alpha_basis`.
        """
        if self.resonant:
            return None
        out = []
        gb = self.gamma_basis
        for y, j in self.alpha_basis:
            k = gb.index((y, j))
            out.append(self.gamma_coeffs[k])
        return np.array(out)


@dataclass(frozen=True)
class SpectralExponents:
    """Floating exponents from the closed form at one step."""

    step: int
    gamma: complex
    alphas: Tuple[complex, ...]
    max_imag: float
    overflow: bool


def _basis(root_set: RootSet):
    return [(y, j) for y, m in root_set for j in range(m)]


def basis_value(y: complex, j: int, s: int) -> complex:
    """``C(s, j) * y**(s - j)`` with ``0**0 = 1``; floating infinities on overflow."""
    if s < j:
        return 0j
    try:
        binom = float(math.comb(s, j))
    except OverflowError:
        binom = math.inf
    n = s - j
    if y == 0:
        return complex(binom) if n == 0 else 0j
    try:
        if y.imag == 0:
            pw = complex(y.real ** n)
        else:
            pw = y ** n
    except OverflowError:
        if y.imag == 0:
            sign = -1.0 if (y.real < 0 and n % 2) else 1.0
            pw = complex(sign * math.inf, 0.0)
        else:
            pw = complex(math.inf, math.inf)
    if pw == 0 or binom == 1.0:
        return pw
    return binom * pw


def _basis_matrix(basis, steps):
    return np.array([[basis_value(y, j, s) for (y, j) in basis] for s in steps],
                    dtype=complex)


def _solve(mat, rhs, max_condition):
    cond = float(np.linalg.cond(mat))
    if not math.isfinite(cond) or cond > max_condition:
        raise SingularSystem(
            f"coefficient system condition number {cond:.3e} exceeds "
            f"{max_condition:.3e}; roots may be clustered but not merged")
    sol = np.linalg.solve(mat, rhs)
    # one step of iterative refinement
    sol = sol + np.linalg.solve(mat, rhs - mat @ sol)
    return sol, cond


def solve_coefficients(spec: RecursionSpec, root_set: RootSet,
                       max_condition: float = DEFAULT_MAX_CONDITION,
                       cluster: float = DEFAULT_CLUSTER) -> SpectralSolution:
    """Solve the (confluent) Vandermonde systems fixed by the initial window.

    Alphas: ``sum_k A[n, k] b_k(s) = [n == s]`` for ``s < p``.
    Gamma: ``sum_k D[k] g_k(s) = (0, ..., 0, 1)`` for ``s <= p``.
    """
    spec = validate_spec(spec)
    p = spec.order
    if root_set.degree != p:
        raise ValueError(f"root set has degree {root_set.degree}, expected {p}")
    basis = _basis(root_set)
    vand = _basis_matrix(basis, range(p))
    at, cond_a = _solve(vand, np.eye(p, dtype=complex), max_condition)
    alpha_coeffs = at.T.copy()

    groots = augmented_roots(spec, root_set, cluster)
    gbasis = _basis(groots)
    gvand = _basis_matrix(gbasis, range(p + 1))
    rhs = np.zeros(p + 1, dtype=complex)
    rhs[p] = 1.0
    gamma_coeffs, cond_g = _solve(gvand, rhs, max_condition)

    total = spec.exponent_sum
    offset = None if total == 1 else float(Fraction(1, 1 - total))
    alpha_coeffs.setflags(write=False)
    gamma_coeffs.setflags(write=False)
    return SpectralSolution(p, spec.exponents, root_set, alpha_coeffs, groots,
                            gamma_coeffs, offset, max(cond_a, cond_g))


def spectral_solution(spec: RecursionSpec, tol: float = 1e-12,
                      cluster: float = DEFAULT_CLUSTER, max_iter: int = 200,
                      max_condition: float = DEFAULT_MAX_CONDITION) -> SpectralSolution:
    """Roots then coefficients in one call."""
    rs = characteristic_roots(spec, tol=tol, cluster=cluster, max_iter=max_iter)
    return solve_coefficients(spec, rs, max_condition=max_condition, cluster=cluster)


def closed_form_exponents(solution: SpectralSolution, s: int) -> SpectralExponents:
    """Evaluate ``alpha_n(s)`` and ``gamma(s)`` from the closed form."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    b = np.array([basis_value(y, j, s) for y, j in solution.alpha_basis])
    g = np.array([basis_value(y, j, s) for y, j in solution.gamma_basis])
    with np.errstate(all="ignore"):
        alphas = solution.alpha_coeffs @ b
        gamma = complex(solution.gamma_coeffs @ g)
    vals = [gamma] + [complex(x) for x in alphas]
    finite = all(np.isfinite(v.real) and np.isfinite(v.imag) for v in vals)
    max_imag = max(abs(v.imag) for v in vals) if finite else math.inf
    return SpectralExponents(s, gamma, tuple(complex(x) for x in alphas),
                             float(max_imag), not finite)
