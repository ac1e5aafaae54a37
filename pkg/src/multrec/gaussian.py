"""Exact complex numbers with rational real and imaginary parts.

:class:`GaussianRational` is the exact value domain for the constant ``c`` and
the initial data ``z(0..p-1)``. Both parts are :class:`fractions.Fraction`, so
they are always stored reduced with a positive denominator.

Integer powers are the hot path (every exact evaluation is a product of a few
large powers), so :meth:`GaussianRational.power` works on a common-denominator
form ``(X + iY) / Q`` with plain integers and only canonicalises once at the
end. It also enforces a bit budget so that geometric exponent growth turns
into an :class:`~multrec.errors.OverflowBudgetExceeded` instead of a hang.
"""

from __future__ import annotations

import math
import numbers
from fractions import Fraction

from .errors import OverflowBudgetExceeded

DEFAULT_BIT_BUDGET = 2**20


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not numeric data")
    if isinstance(x, numbers.Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def int_text(n: int) -> str:
    """Decimal digits of ``n`` without the interpreter's length limit."""
    if n < 0:
        return "-" + int_text(-n)
    if n.bit_length() < 12000:
        return str(n)
    half = int(n.bit_length() * 0.30103) // 2
    hi, lo = divmod(n, 10**half)
    return int_text(hi) + int_text(lo).zfill(half)


def fraction_text(x: Fraction) -> str:
    """``str(x)`` that also works for numerators beyond the digit limit."""
    if x.denominator == 1:
        return int_text(x.numerator)
    return f"{int_text(x.numerator)}/{int_text(x.denominator)}"


def _check_bits(value: int, budget, what: str = "intermediate") -> None:
    if budget is not None:
        bits = value.bit_length()
        if bits > budget:
            raise OverflowBudgetExceeded(
                f"{what} needs {bits} bits, budget is {budget}",
                bits=bits, budget=budget)


class GaussianRational:
    """Immutable ``re + im*i`` with exact rational parts.

    Accepts ints, :class:`~fractions.Fraction` or rational strings such as
    ``"22/7"`` for either part.

    >>> GaussianRational(1, 2) * GaussianRational(1, -2)
    GaussianRational(5)
    >>> GaussianRational(Fraction(3, 2)) ** -2
    GaussianRational(4/9)
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "_re", _as_fraction(re))
        object.__setattr__(self, "_im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        """Convert an int, Fraction or GaussianRational; reject floats."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (numbers.Rational, str)) and not isinstance(value, bool):
            return cls(value)
        raise TypeError(f"{value!r} is not an exact Gaussian rational")

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    # -- predicates / sizes -------------------------------------------------

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def is_real(self) -> bool:
        return self._im == 0

    def bit_size(self) -> int:
        """Largest bit length among the two numerators and two denominators."""
        return max(self._re.numerator.bit_length(), self._re.denominator.bit_length(),
                   self._im.numerator.bit_length(), self._im.denominator.bit_length())

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _wrap(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, numbers.Rational) and not isinstance(other, bool):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        other = GaussianRational._wrap(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational._wrap(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = GaussianRational._wrap(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = GaussianRational._wrap(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        if b == 0 and d == 0:
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational._wrap(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = GaussianRational._wrap(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """Squared modulus ``re**2 + im**2`` (exact)."""
        return self._re * self._re + self._im * self._im

    def inverse(self) -> "GaussianRational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        n = self.norm()
        return GaussianRational(self._re / n, -self._im / n)

    def __pow__(self, k):
        if isinstance(k, bool) or not isinstance(k, numbers.Integral):
            return NotImplemented
        return self.power(int(k), bit_budget=None)

    def power(self, k: int, bit_budget=DEFAULT_BIT_BUDGET) -> "GaussianRational":
        """Exact ``self**k`` for any integer ``k``.

        Intermediate integers are checked against ``bit_budget`` (``None``
        disables the check) and :class:`OverflowBudgetExceeded` is raised as
        soon as one exceeds it.
        """
        k = int(k)
        if k == 0:
            return GaussianRational(1)
        if self.is_zero():
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return self
        if k == 1:
            return self
        if self._im == 0:
            base = self._re if k > 0 else 1 / self._re
            num, den = base.numerator, base.denominator
            e = abs(k)
            if bit_budget is not None:
                # exact sizes are known up front for a real rational
                est = max(abs(num).bit_length() - 1, den.bit_length() - 1) * e + 1
                if est > bit_budget:
                    raise OverflowBudgetExceeded(
                        f"power needs about {est} bits, budget is {bit_budget}",
                        bits=est, budget=bit_budget)
            return GaussianRational(base**e)

        q = math.lcm(self._re.denominator, self._im.denominator)
        x = self._re.numerator * (q // self._re.denominator)
        y = self._im.numerator * (q // self._im.denominator)
        if k < 0:
            # 1/w = conj(w) / |w|^2  ->  (x - iy) q / (x^2 + y^2)
            x, y, q = x * q, -y * q, x * x + y * y
        e = abs(k)
        if bit_budget is not None:
            est = (q.bit_length() - 1) * e + 1
            if est > bit_budget:
                raise OverflowBudgetExceeded(
                    f"denominator needs about {est} bits, budget is {bit_budget}",
                    bits=est, budget=bit_budget)
        rx, ry = 1, 0
        bx, by = x, y
        while True:
            if e & 1:
                rx, ry = rx * bx - ry * by, rx * by + ry * bx
                _check_bits(rx, bit_budget)
                _check_bits(ry, bit_budget)
            e >>= 1
            if not e:
                break
            bx, by = bx * bx - by * by, 2 * bx * by
            _check_bits(bx, bit_budget)
            _check_bits(by, bit_budget)
        qk = q ** abs(k)
        return GaussianRational(Fraction(rx, qk), Fraction(ry, qk))

    # -- comparison / conversion --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, numbers.Rational) and not isinstance(other, bool):
            return self._im == 0 and self._re == other
        if isinstance(other, numbers.Complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self._im == 0:
            return f"GaussianRational({fraction_text(self._re)})"
        return f"GaussianRational({fraction_text(self._re)}, {fraction_text(self._im)})"

    def __str__(self):
        return format_gaussian(self)


def format_gaussian(w: GaussianRational) -> str:
    """Render in the DSL's literal syntax: ``3/2``, ``-1/2i``, ``2+3i``."""
    re, im = w.re, w.im
    if im == 0:
        return fraction_text(re)
    if re == 0:
        return f"{fraction_text(im)}i"
    sign = "+" if im > 0 else "-"
    return f"{fraction_text(re)}{sign}{fraction_text(abs(im))}i"
