"""Exact Gaussian-rational scalars.

Real scalars stay plain ``int``/``Fraction`` values so that the common case
runs on Python's own rational arithmetic; a :class:`GaussianRational` only
appears when a nonzero imaginary part does.  Every arithmetic result with a
vanishing imaginary part collapses back to a ``Fraction``.

The approximate backend is Python's ``complex``; :func:`is_zero` applies the
tolerance to it.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Complex, Rational

TOLERANCE = 1e-12


class GaussianRational:
    """``re + im*i`` with rational parts; instances always have ``im != 0``
    when produced by :func:`gauss`."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- coercion --------------------------------------------------------

    @staticmethod
    def _floaty(x):
        return isinstance(x, (float, complex))

    @staticmethod
    def _parts(x):
        if isinstance(x, GaussianRational):
            return x.re, x.im
        if isinstance(x, Rational):
            return Fraction(x), Fraction(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return complex(self) + other if self._floaty(other) else NotImplemented
        return gauss(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return complex(self) - other if self._floaty(other) else NotImplemented
        return gauss(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return other - complex(self) if self._floaty(other) else NotImplemented
        return gauss(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return complex(self) * other if self._floaty(other) else NotImplemented
        a, b = self.re, self.im
        c, d = p
        return gauss(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return complex(self) / other if self._floaty(other) else NotImplemented
        return self * _inverse(*p)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return other / complex(self) if self._floaty(other) else NotImplemented
        return _inverse(self.re, self.im) * gauss(*p)

    def __neg__(self):
        return gauss(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return complex(self) ** k
        if k < 0:
            return 1 / (self ** -k)
        result = Fraction(1)
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        return gauss(self.re, -self.im)

    def __abs__(self):
        return abs(complex(self))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            if isinstance(other, Complex):
                return complex(self) == other
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)


Complex.register(GaussianRational)


def gauss(re, im=0):
    """Canonical exact scalar: a Fraction when ``im == 0``."""
    if im == 0:
        return Fraction(re)
    return GaussianRational(re, im)


def _inverse(c, d):
    den = c * c + d * d
    if den == 0:
        raise ZeroDivisionError("division by zero Gaussian rational")
    return gauss(c / den, -d / den)


I = GaussianRational(0, 1)


def to_exact(x):
    """Coerce ints, Fractions, decimal strings and Gaussian rationals."""
    if isinstance(x, GaussianRational):
        return gauss(x.re, x.im)
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, float):
        return Fraction(x)
    raise TypeError(f"cannot make an exact scalar from {x!r}")


def is_zero(c) -> bool:
    if isinstance(c, (complex, float)):
        return abs(c) < TOLERANCE
    return c == 0


def is_exact(c) -> bool:
    return isinstance(c, (Rational, GaussianRational))


def real_part(c):
    return c.real


def imag_part(c):
    return c.imag


def _fmt_fraction(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(c) -> str:
    """``p/q``, ``r/s i`` or ``p/q+r/s i`` (no space before ``i``)."""
    if isinstance(c, complex):
        return repr(c)
    if isinstance(c, float):
        return repr(c)
    re_, im_ = Fraction(c.real), Fraction(c.imag)
    if im_ == 0:
        return _fmt_fraction(re_)
    im_s = "i" if im_ == 1 else "-i" if im_ == -1 else _fmt_fraction(im_) + "i"
    if re_ == 0:
        return im_s
    if not im_s.startswith("-"):
        im_s = "+" + im_s
    return _fmt_fraction(re_) + im_s


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RAT})(?P<im>[+-](?:\d+(?:/\d+)?)?i)?|(?P<pure>[+-]?(?:\d+(?:/\d+)?)?i))\s*$"
)


def _imag_coeff(s: str) -> Fraction:
    body = s[:-1]
    if body in ("", "+"):
        return Fraction(1)
    if body == "-":
        return Fraction(-1)
    return Fraction(body)


def parse_scalar(text: str):
    """Inverse of :func:`format_scalar` for exact scalars."""
    m = _SCALAR_RE.match(text)
    if not m:
        raise ValueError(f"not an exact scalar: {text!r}")
    if m.group("pure") is not None:
        return gauss(0, _imag_coeff(m.group("pure")))
    re_ = Fraction(m.group("re"))
    im_ = _imag_coeff(m.group("im")) if m.group("im") else 0
    return gauss(re_, im_)
