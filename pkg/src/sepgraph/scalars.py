"""Exact scalars: rationals and Gaussian rationals Q(i).

Everything in the package is coefficient-type agnostic as long as the
values support ``+ - * /``, ``conjugate()`` and equality.  ``Fraction``
already qualifies; :class:`GaussianRational` adds the imaginary unit.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)):
            return GaussianRational(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        n = self * o.conjugate()
        return GaussianRational(n.re / d, n.im / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)


def format_scalar(x) -> str:
    """Render an exact scalar as a string: ``"3/11"``, ``"1/2+3/4i"``."""
    if isinstance(x, GaussianRational):
        if x.im == 0:
            return str(x.re)
        if x.re == 0:
            return f"{x.im}i"
        sign = "+" if x.im > 0 else "-"
        return f"{x.re}{sign}{abs(x.im)}i"
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    raise TypeError(f"not an exact scalar: {x!r}")


def parse_scalar(text: str):
    """Inverse of :func:`format_scalar`."""
    text = text.strip()
    if not text.endswith("i"):
        return Fraction(text)
    body = text[:-1]
    # split at the last sign that is not leading and not part of an exponent
    cut = max(body.rfind("+", 1), body.rfind("-", 1))
    if cut <= 0:
        return GaussianRational(0, Fraction(body))
    return GaussianRational(Fraction(body[:cut]), Fraction(body[cut:]))


def is_zero(x) -> bool:
    return x == 0


def is_nonnegative_real(x) -> bool:
    if isinstance(x, GaussianRational):
        return x.im == 0 and x.re >= 0
    return x >= 0
