"""Human-readable and JSON renderings of a spectral solution."""

from __future__ import annotations

import json
import math
from typing import List

from ..core import RecursionSpec
from ..spectral.solver import SpectralSolution
from .dsl import render_recursion


def fmt_real(x: float, snap: bool = True) -> str:
    if not math.isfinite(x):
        return repr(x)
    if snap and abs(x - round(x)) <= 1e-9 * max(1.0, abs(x)):
        return str(int(round(x)))
    return format(x, ".17g")


def fmt_complex(z: complex, snap: bool = True) -> str:
    """Real-looking values print as reals, integers as integers."""
    z = complex(z)
    if z.imag == 0:
        return fmt_real(z.real, snap)
    scale = max(1.0, abs(z))
    if snap and abs(z.imag) <= 1e-12 * scale:
        return fmt_real(z.real, snap)
    if snap and abs(z.real) <= 1e-12 * scale:
        return f"{fmt_real(z.imag, snap)}i"
    sign = "-" if z.imag < 0 else "+"
    return f"({fmt_real(z.real, snap)}{sign}{fmt_real(abs(z.imag), snap)}i)"


def _is_one(z: complex) -> bool:
    return abs(z - 1) <= 1e-12


def _basis_text(y: complex, j: int) -> str:
    if abs(y) <= 1e-300:
        return f"[s={j}]"
    if _is_one(y):
        return {0: "", 1: "s"}.get(j, f"C(s,{j})")
    ys = fmt_complex(y)
    if ys.startswith("-"):
        ys = f"({ys})"
    power = {0: f"{ys}^s", 1: f"{ys}^(s-1)"}.get(j, f"{ys}^(s-{j})")
    return {0: power, 1: f"s*{power}"}.get(j, f"C(s,{j})*{power}")


def format_combination(coeffs, basis) -> str:
    """``sum c_k b_k(s)`` as text, skipping negligible terms, constants last."""
    mags = [abs(complex(c)) for c in coeffs]
    cutoff = 1e-13 * max(mags + [1.0])
    terms = []
    for c, (y, j) in zip(coeffs, basis):
        c = complex(c)
        if abs(c) <= cutoff:
            continue
        b = _basis_text(y, j)
        terms.append((b == "", c, b))
    terms.sort(key=lambda t: t[0])
    if not terms:
        return "0"
    out: List[str] = []
    for k, (_, c, b) in enumerate(terms):
        cs = fmt_complex(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if b and cs == "1":
            piece = b
        elif b:
            piece = f"{cs}*{b}"
        else:
            piece = cs
        if k == 0:
            out.append(f"-{piece}" if neg else piece)
        else:
            out.append(f" - {piece}" if neg else f" + {piece}")
    return "".join(out)


def char_poly_text(exponents) -> str:
    p = len(exponents)
    parts = ["y" if p == 1 else f"y^{p}"]
    for l in range(p - 1, -1, -1):
        a = -exponents[l]
        if a == 0:
            continue
        mono = "" if l == 0 else ("y" if l == 1 else f"y^{l}")
        mag = abs(a)
        coef = str(mag) if (mag != 1 or l == 0) else ""
        body = f"{coef}*{mono}" if coef and mono else (coef or mono)
        parts.append(f"{'-' if a < 0 else '+'} {body}")
    return " ".join(parts)


def _alpha_name(p, n):
    return "alpha" if p == 1 else f"alpha_{n}"


def render_solution(solution: SpectralSolution, spec: RecursionSpec) -> str:
    """Deterministic multi-line text of roots, coefficient tables and formula."""
    p = solution.order
    rs = solution.root_set
    lines = [f"recursion: {render_recursion(spec)}",
             f"characteristic polynomial: {char_poly_text(solution.exponents)}",
             "roots:"]
    for y, m in rs:
        tag = "simple root" if m == 1 else (
            "double root" if m == 2 else f"root of multiplicity {m}")
        lines.append(f"  y = {fmt_complex(y, snap=False)}  ({tag}, multiplicity {m})")
    lines.append(f"root residual: {rs.residual:.3e}")
    if solution.confluent:
        lines.append("confluent basis: b_j(s) = C(s,j)*y^(s-j), j < multiplicity")
    else:
        lines.append("basis: y^s for each root")
    lines.append("alpha coefficients A[n][k]:")
    for n in range(p):
        row = ", ".join(fmt_complex(c, snap=False) for c in solution.alpha_coeffs[n])
        lines.append(f"  n={n}: [{row}]")
    lines.append("gamma roots (char poly times (y - 1)):")
    for y, m in solution.gamma_root_set:
        lines.append(f"  y = {fmt_complex(y, snap=False)}  (multiplicity {m})")
    row = ", ".join(fmt_complex(c, snap=False) for c in solution.gamma_coeffs)
    lines.append(f"gamma coefficients: [{row}]")
    if solution.resonant:
        lines.append("resonant: sum(a) = 1, the constant term is absorbed by the "
                     "repeated root y = 1")
    else:
        lines.append(f"fixed-point offset 1/(1 - sum(a)) = "
                     f"{fmt_complex(solution.gamma_offset, snap=False)}")
    lines.append("closed form:")
    for n in range(p):
        lines.append(f"  {_alpha_name(p, n)}(s) = "
                     + format_combination(solution.alpha_coeffs[n], solution.alpha_basis))
    lines.append("  gamma(s) = "
                 + format_combination(solution.gamma_coeffs, solution.gamma_basis))
    factors = " * ".join(f"z({n})^{_alpha_name(p, n)}(s)" for n in range(p))
    lines.append(f"  z(s) = c^gamma(s) * {factors}")
    return "\n".join(lines)


def _cnum(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def solution_to_dict(solution: SpectralSolution, spec: RecursionSpec) -> dict:
    return {
        "recursion": render_recursion(spec),
        "order": solution.order,
        "exponents": list(solution.exponents),
        "roots": [dict(_cnum(y), multiplicity=m) for y, m in solution.root_set],
        "residual": solution.root_set.residual,
        "confluent": solution.confluent,
        "alpha_basis": [dict(_cnum(y), j=j) for y, j in solution.alpha_basis],
        "alpha_coeffs": [[_cnum(c) for c in row] for row in solution.alpha_coeffs],
        "gamma_roots": [dict(_cnum(y), multiplicity=m)
                        for y, m in solution.gamma_root_set],
        "gamma_basis": [dict(_cnum(y), j=j) for y, j in solution.gamma_basis],
        "gamma_coeffs": [_cnum(c) for c in solution.gamma_coeffs],
        "gamma_offset": solution.gamma_offset,
        "resonant": solution.resonant,
        "condition": solution.condition,
    }


def render_solution_json(solution: SpectralSolution, spec: RecursionSpec) -> str:
    return json.dumps(solution_to_dict(solution, spec), indent=2)
