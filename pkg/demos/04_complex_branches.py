"""Complex data, logarithms and branch choice.

The floating path computes z(s) as exp(gamma Log c + sum alpha_l Log z(l)).
All exponents are integers, so adding 2 pi i k to any logarithm changes the
sum by whole turns and cannot change z(s). The evaluator keeps the angle in
exact turns, so this holds to the last bit, not just approximately.
"""

import numpy as np

from multrec import GaussianRational, evaluate_exact, evaluate_numeric, make_spec

spec = make_spec([1, -2, 1], GaussianRational(0, 1),
                 [GaussianRational(1, 1), GaussianRational(-2, 1), GaussianRational(0, -1)])

rng = np.random.default_rng(0)
print(" s   exact z(s) (as float)                      max change under random shifts")
for s in range(3, 16, 3):
    exact = complex(evaluate_exact(spec, s).value)
    base = evaluate_numeric(spec, s).value
    changes = [abs(evaluate_numeric(spec, s, rng.integers(-9, 10, size=4).tolist()).value - base)
               for _ in range(20)]
    print(f"{s:2d}   {exact:.10g}".ljust(50), f"{max(changes) / abs(base):.1e}")
    assert abs(base - exact) <= 1e-9 * abs(exact)
