"""When the characteristic polynomial has repeated roots or a root at 1.

z(s+2) = c * z(s+1)^2 / z(s) has the double root y = 1, so the closed form
needs the confluent basis C(s, j) y^(s-j), and gamma becomes the quadratic
C(s, 2). The exact values come out as z(s) = c^C(s,2) z(0)^(1-s) z(1)^s.
"""

from fractions import Fraction

from multrec import (evaluate_exact, exponents_at, make_spec, render_solution,
                     spectral_solution)

spec = make_spec([-1, 2], Fraction(1, 2), [2, 6])
print(render_solution(spectral_solution(spec), spec))

print("\nexact values:")
for s in range(7):
    vec = exponents_at(spec, s)
    print(f"  z({s}) = {evaluate_exact(spec, s).value}   gamma={vec.gamma} alphas={vec.alphas}")

# Resonance without a repeated root: exponents summing to 1 put y = 1 among
# simple roots, so gamma has a term linear in s instead of a constant offset.
resonant = make_spec([3, -2, 0])
solution = spectral_solution(resonant)
print("\nexponents [3, -2, 0]: resonant =", solution.resonant)
print("\n".join(render_solution(solution, resonant).splitlines()[-4:]))
