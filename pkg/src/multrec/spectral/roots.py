"""Roots of the characteristic polynomial ``y**p - sum_l a_l y**l``.

The polynomial has integer coefficients, which is exploited before any
floating point is involved:

1. Yun's square-free decomposition over the rationals separates the factors
   of each multiplicity exactly, so repeated roots never reach the iterative
   solver (where they would converge slowly and to ~sqrt(eps) accuracy).
2. Integer roots of each (monic) factor are found by trying divisors of its
   constant term and deflated exactly.
3. What remains has simple roots: degree <= 2 is done in closed form,
   anything larger by Aberth-Ehrlich simultaneous iteration followed by a
   couple of Newton polishing steps.

Orders 1 and 2 bypass all of that and use the quadratic formula directly.
Roots closer than the clustering threshold are merged afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from ..core import RecursionSpec, validate_spec
from ..errors import RootFindingFailed, ToleranceInvalid

DEFAULT_TOL = 1e-12
DEFAULT_CLUSTER = 1e-8
DEFAULT_MAX_ITER = 200


@dataclass(frozen=True)
class RootSet:
    """Distinct roots with multiplicities.

    ``residual`` is the largest backward error
    ``|P(y)| / sum_k |c_k| |y|**k`` over the returned roots.
    """

    roots: Tuple[complex, ...]
    multiplicities: Tuple[int, ...]
    residual: float

    @property
    def degree(self) -> int:
        return sum(self.multiplicities)

    def __iter__(self):
        return iter(zip(self.roots, self.multiplicities))

    def min_separation(self) -> float:
        r = self.roots
        if len(r) < 2:
            return math.inf
        return min(abs(r[i] - r[j]) for i in range(len(r)) for j in range(i))


# -- integer / rational polynomial helpers (coefficients low -> high) ------

def char_poly(spec: RecursionSpec) -> List[int]:
    """Coefficients of ``y**p - sum a_l y**l``, lowest degree first."""
    return [-a for a in spec.exponents] + [1]


def augmented_char_poly(spec: RecursionSpec) -> List[int]:
    """``(y - 1) * char_poly``: its roots absorb the ``+1`` of the gamma recursion."""
    return _mul(char_poly(spec), [-1, 1])


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _deriv(p):
    return _trim([k * p[k] for k in range(1, len(p))] or [0])


def _divmod(num, den):
    num = [Fraction(x) for x in num]
    den = _trim(den)
    if len(num) < len(den):
        return [Fraction(0)], _trim(num)
    quot = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = Fraction(den[-1])
    for k in range(len(quot) - 1, -1, -1):
        coef = num[k + len(den) - 1] / lead
        quot[k] = coef
        for j, d in enumerate(den):
            num[k + j] -= coef * d
    return _trim(quot), _trim(num[:len(den) - 1] or [Fraction(0)])


def _monic(p):
    p = _trim(p)
    lead = Fraction(p[-1])
    return [Fraction(x) / lead for x in p]


def _is_const(p):
    return len(_trim(p)) == 1


def _gcd(p, q):
    p, q = _trim(p), _trim(q)
    while not (len(q) == 1 and q[0] == 0):
        _, r = _divmod(p, q)
        p, q = q, r
    return _monic(p)


def squarefree_decomposition(poly: Sequence[int]) -> List[Tuple[List[Fraction], int]]:
    """Yun's algorithm: ``[(factor, multiplicity), ...]`` with monic factors."""
    a = _monic(poly)
    if _is_const(a):
        return []
    da = _deriv(a)
    c = _gcd(a, da)
    w, _ = _divmod(a, c)
    y, _ = _divmod(da, c)
    z = [yi - wi for yi, wi in _zip_pad(y, _deriv(w))]
    out = []
    i = 1
    while not _is_const(w):
        g = _gcd(w, z)
        if not _is_const(g):
            out.append((g, i))
        w, _ = _divmod(w, g)
        y, _ = _divmod(z, g)
        z = [yi - wi for yi, wi in _zip_pad(y, _deriv(w))]
        i += 1
    return out


def _zip_pad(p, q):
    n = max(len(p), len(q))
    p = list(p) + [0] * (n - len(p))
    q = list(q) + [0] * (n - len(q))
    return zip(p, q)


def _to_primitive_int(p) -> List[int]:
    den = 1
    for c in p:
        den = math.lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints]


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _eval_int(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _synthetic_div(p, r):
    """Exact division of integer poly ``p`` by ``(y - r)``."""
    n = len(p) - 1
    out = [0] * n
    carry = 0
    for k in range(n, 0, -1):
        carry = p[k] + carry * r
        out[k - 1] = carry
    return out


def integer_roots(poly: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Strip integer roots (each once) off a primitive integer polynomial.

    Returns ``(roots, remaining_poly)``; meant for square-free inputs.
    """
    p = _trim(list(poly))
    found = []
    while len(p) > 1 and p[0] == 0:
        found.append(0)
        p = p[1:]
    if len(p) > 1:
        for d in _divisors(p[0]):
            for r in (d, -d):
                if len(p) > 1 and _eval_int(p, r) == 0:
                    found.append(r)
                    p = _synthetic_div(p, r)
    return found, p


# -- floating point ---------------------------------------------------------

def poly_backward_error(poly: Sequence, y: complex) -> float:
    num = 0j
    scale = 0.0
    for c in reversed(poly):
        num = num * y + complex(c)
    ay = abs(y)
    for c in reversed(poly):
        scale = scale * ay + abs(complex(c))
    return abs(num) / scale if scale else 0.0


def _quadratic(c0, c1, c2) -> List[complex]:
    """Roots of ``c2 y^2 + c1 y + c0`` (exact rational inputs) without cancellation."""
    disc = Fraction(c1) ** 2 - 4 * Fraction(c0) * Fraction(c2)
    if disc < 0:
        d = 1j * math.sqrt(-disc)
        return [(-c1 + d) / (2 * c2), (-c1 - d) / (2 * c2)]
    d = math.sqrt(disc)
    q = -(c1 + d) / 2 if c1 >= 0 else -(c1 - d) / 2
    if q == 0:
        return [0j, 0j]
    return [complex(q / c2), complex(c0 / q)]


def aberth(poly: Sequence, max_iter: int = DEFAULT_MAX_ITER) -> np.ndarray:
    """All roots of ``poly`` (low -> high coefficients) by Aberth-Ehrlich.

    Assumes simple roots. Returns after convergence or ``max_iter`` sweeps;
    callers judge the result by its residual.
    """
    c = np.asarray(poly, dtype=complex)
    n = len(c) - 1
    hi = c[::-1]
    dhi = np.polyder(hi)
    radius = 1.0 + float(np.max(np.abs(c[:-1] / c[-1])))
    k = np.arange(n)
    z = radius * np.exp(1j * (2 * np.pi * k / n + 0.4)) * (1 + 0.01 * k / n)
    eye = np.eye(n, dtype=bool)
    for _ in range(max_iter):
        pv = np.polyval(hi, z)
        dv = np.polyval(dhi, z)
        dv = np.where(dv == 0, 1e-300, dv)
        ratio = pv / dv
        diff = z[:, None] - z[None, :]
        diff[eye] = 1.0
        inv = 1.0 / diff
        inv[eye] = 0.0
        corr = ratio / (1.0 - ratio * inv.sum(axis=1))
        z = z - corr
        if np.all(np.abs(corr) <= 4 * np.finfo(float).eps * (1 + np.abs(z))):
            break
    for _ in range(3):
        dv = np.polyval(dhi, z)
        ok = dv != 0
        z = np.where(ok, z - np.polyval(hi, z) / np.where(ok, dv, 1), z)
    return z


def _simple_roots(poly_int: List[int], max_iter: int) -> List[complex]:
    roots, rest = integer_roots(poly_int)
    out = [complex(r) for r in roots]
    deg = len(rest) - 1
    if deg == 1:
        out.append(complex(Fraction(-rest[0], rest[1])))
    elif deg == 2:
        out.extend(_quadratic(*rest))
    elif deg > 2:
        out.extend(complex(x) for x in aberth(rest, max_iter))
    return out


def _snap_real(y: complex) -> complex:
    if y.imag != 0 and abs(y.imag) <= 1e-14 * (1 + abs(y.real)):
        return complex(y.real, 0.0)
    return y


def _cluster(roots: List[complex], mults: List[int], threshold: float):
    groups: List[List[int]] = []
    for i, y in enumerate(roots):
        for g in groups:
            y0 = roots[g[0]]
            if abs(y - y0) <= threshold * (1 + abs(y0)):
                g.append(i)
                break
        else:
            groups.append([i])
    out_r, out_m = [], []
    for g in groups:
        m = sum(mults[i] for i in g)
        if len(g) == 1:
            out_r.append(roots[g[0]])
        else:
            out_r.append(sum(roots[i] * mults[i] for i in g) / m)
        out_m.append(m)
    return out_r, out_m


def _order(roots, mults):
    pairs = sorted(zip(roots, mults), key=lambda t: (-round(t[0].real, 12),
                                                     -round(t[0].imag, 12)))
    return [r for r, _ in pairs], [m for _, m in pairs]


def _check_params(tol, cluster, max_iter):
    for name, v in (("tol", tol), ("cluster", cluster)):
        if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
            raise ToleranceInvalid(f"{name} must be a positive finite number, got {v!r}")
    if int(max_iter) < 1:
        raise ToleranceInvalid("max_iter must be positive")


def roots_of_integer_poly(poly: Sequence[int], tol: float = DEFAULT_TOL,
                          cluster: float = DEFAULT_CLUSTER,
                          max_iter: int = DEFAULT_MAX_ITER) -> RootSet:
    """Distinct roots and multiplicities of an integer polynomial (low -> high)."""
    _check_params(tol, cluster, max_iter)
    poly = _trim([int(c) for c in poly])
    roots: List[complex] = []
    mults: List[int] = []
    for factor, mult in squarefree_decomposition(poly):
        for y in _simple_roots(_to_primitive_int(factor), max_iter):
            roots.append(_snap_real(y))
            mults.append(mult)
    return _finish(poly, roots, mults, tol, cluster)


def _finish(poly, roots, mults, tol, cluster) -> RootSet:
    roots, mults = _cluster(roots, mults, cluster)
    roots, mults = _order(roots, mults)
    residual = max((poly_backward_error(poly, y) for y in roots), default=0.0)
    if sum(mults) != len(poly) - 1:
        raise RootFindingFailed(
            f"found {sum(mults)} roots for a degree {len(poly) - 1} polynomial")
    if not residual <= tol:
        raise RootFindingFailed(
            f"root residual {residual:.3e} exceeds tolerance {tol:.3e}")
    return RootSet(tuple(roots), tuple(mults), float(residual))


def characteristic_roots(spec: RecursionSpec, tol: float = DEFAULT_TOL,
                         cluster: float = DEFAULT_CLUSTER,
                         max_iter: int = DEFAULT_MAX_ITER) -> RootSet:
    """Roots of ``y**p - sum a_l y**l`` with multiplicities.

    >>> from multrec.core import make_spec
    >>> characteristic_roots(make_spec([-1, 2])).multiplicities
    (2,)
    """
    _check_params(tol, cluster, max_iter)
    spec = validate_spec(spec)
    poly = char_poly(spec)
    if spec.order == 1:
        return _finish(poly, [complex(spec.exponents[0])], [1], tol, cluster)
    if spec.order == 2:
        a0, a1 = spec.exponents
        disc = a1 * a1 + 4 * a0
        if disc == 0:
            return _finish(poly, [complex(a1 / 2)], [2], tol, cluster)
        return _finish(poly, _quadratic(-a0, -a1, 1), [1, 1], tol, cluster)
    return roots_of_integer_poly(poly, tol, cluster, max_iter)


def augmented_roots(spec: RecursionSpec, root_set: RootSet,
                    cluster: float = DEFAULT_CLUSTER) -> RootSet:
    """Root set of ``(y - 1) * char_poly``: ``root_set`` plus one more ``y = 1``."""
    roots = list(root_set.roots)
    mults = list(root_set.multiplicities)
    for i, y in enumerate(roots):
        if abs(y - 1) <= cluster * 2:
            mults[i] += 1
            roots[i] = 1 + 0j
            break
    else:
        roots.append(1 + 0j)
        mults.append(1)
    poly = augmented_char_poly(spec)
    roots, mults = _order(roots, mults)
    residual = max(poly_backward_error(poly, y) for y in roots)
    return RootSet(tuple(roots), tuple(mults), float(residual))
