"""Characteristic roots, closed-form coefficients and reference formulas."""

from .roots import (RootSet, augmented_char_poly, augmented_roots, char_poly,
                    characteristic_roots)
from .solver import (SpectralExponents, SpectralSolution, basis_value,
                     closed_form_exponents, solve_coefficients,
                     spectral_solution)

__all__ = [
    "RootSet", "SpectralExponents", "SpectralSolution", "augmented_char_poly",
    "augmented_roots", "basis_value", "char_poly", "characteristic_roots",
    "closed_form_exponents", "solve_coefficients", "spectral_solution",
]

from .reference import reference_branch, reference_exponents  # noqa: E402

__all__ += ["reference_branch", "reference_exponents"]
