"""Exponent bookkeeping for the simplest multiplicative recursions.

Every term of z(s+p) = c * prod z(s+l)^a_l is c^gamma(s) * prod z(l)^alpha_l(s).
This walk-through prints those exponents for orders 1 and 2, then checks the
floating closed form against the exact integers.
"""

import numpy as np

from multrec import (closed_form_exponents, exponents_at, make_spec,
                     render_solution, spectral_solution)
from multrec.spectral import reference_exponents

# Order 1, z(s+1) = c * z(s)^2: alpha(s) = 2^s and gamma(s) = 2^s - 1.
squaring = make_spec([2], 3)
print("z(s+1) = 3 z(s)^2")
for s in range(6):
    vec = exponents_at(squaring, s)
    print(f"  s={s}: gamma={vec.gamma:3d}  alpha={vec.alphas[0]:3d}")

# Order 2 with unit exponents: the alphas are Fibonacci numbers.
fib = make_spec([1, 1], 1)
print("\nz(s+2) = z(s+1) z(s): exponents of z(0), z(1)")
print("  ", [exponents_at(fib, s).alphas for s in range(10)])

# The explicit order-2 formulas agree with the matrix engine exactly.
assert all(reference_exponents(fib, s) == exponents_at(fib, s) for s in range(60))

# The closed form is a sum over characteristic roots; in floating point it
# tracks the exact integers to roughly machine precision.
solution = spectral_solution(fib)
print("\n" + render_solution(solution, fib))
steps = np.arange(0, 70, 10)
rel = []
for s in steps:
    exact = exponents_at(fib, int(s)).alphas[1]
    approx = closed_form_exponents(solution, int(s)).alphas[1].real
    rel.append(abs(approx - exact) / max(1, exact))
print("\nrelative error of alpha_1 at s =", steps.tolist())
print("  ", np.array2string(np.array(rel), precision=2))
