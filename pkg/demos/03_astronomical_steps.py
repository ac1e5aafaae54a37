"""Steps far beyond anything iteration can reach.

The exponents at step s have about s * log2(largest root) bits, so exact
values become impossible quickly. What remains available:

* exact exponents by fast doubling, up to a few hundred thousand steps;
* exponents modulo a prime at any step, in microseconds;
* ln|z(s)| from the spectral closed form, while it fits in a float.
"""

import math
import time

from multrec import (evaluate_log_magnitude, exponents_at, exponents_at_mod,
                     make_spec, spectral_solution)

spec = make_spec([2, -1, 1], 2, [3, 5, 7])
M = 2**61 - 1

for s in (10**3, 10**4, 10**5):
    t0 = time.perf_counter()
    vec = exponents_at(spec, s, bit_budget=None)
    print(f"s={s:>7}: exponents have {vec.max_bits():>6} bits "
          f"({time.perf_counter() - t0:.3f} s)")

for s in (10**9, 10**18, 10**100):
    t0 = time.perf_counter()
    vec = exponents_at_mod(spec, s, M)
    print(f"s=10^{round(math.log10(s))}: gamma mod M = {vec.gamma} "
          f"({(time.perf_counter() - t0) * 1e3:.2f} ms)")

solution = spectral_solution(spec)
for s in (10, 100, 500):
    res = evaluate_log_magnitude(spec, solution, s)
    print(f"ln|z({s})| ~ {res.value:.6e}")
