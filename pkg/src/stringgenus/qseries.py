"""
Truncated power series in one variable q with exact rational coefficients.

A :class:`QSeries` of precision ``N`` stores the coefficients of
``q**0 .. q**(N-1)``; everything from ``q**N`` on is unknown, not zero.
Binary operations therefore return the smaller of the two precisions and
never extend a series.

    >>> g2 = eisenstein_G(2, 4)
    >>> g2
    QSeries(['-1/24', '1', '3', '4'])
    >>> (g2 * 24 + 1).is_integral
    True
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import InvalidWeight, NotAUnit

Scalar = Union[int, Fraction]

__all__ = [
    "QSeries",
    "add",
    "mul",
    "scale",
    "invert",
    "bernoulli",
    "divisor_power_sum",
    "divisor_power_sums",
    "eisenstein_G",
    "format_rational",
    "parse_rational",
]


def format_rational(r: Scalar) -> str:
    """Canonical text form ``"num/den"``, or ``"num"`` for integers."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return "%d/%d" % (r.numerator, r.denominator)


_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?")


def parse_rational(text) -> Fraction:
    """Read an int, a Fraction or a string ``"a"`` / ``"a/b"``; decimals are rejected."""
    if isinstance(text, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, str):
        if not _RATIONAL_RE.fullmatch(text.strip()):
            raise ValueError("not an exact rational of the form a/b: %r" % text)
        return Fraction(text.strip())
    raise TypeError("cannot read %r as an exact rational" % (text,))


class QSeries:
    """Immutable truncated series ``c0 + c1 q + ... + c_{N-1} q^(N-1) + O(q^N)``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar], prec: int | None = None):
        c = [Fraction(x) for x in coeffs]
        if prec is not None:
            if prec < 0:
                raise ValueError("negative precision")
            if len(c) < prec:
                c.extend([Fraction(0)] * (prec - len(c)))
            del c[prec:]
        self._c = tuple(c)

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, prec: int) -> QSeries:
        return cls((), prec)

    @classmethod
    def constant(cls, value: Scalar, prec: int) -> QSeries:
        if prec == 0:
            return cls(())
        return cls((value,), prec)

    @classmethod
    def one(cls, prec: int) -> QSeries:
        return cls.constant(1, prec)

    @classmethod
    def monomial(cls, exponent: int, prec: int, coeff: Scalar = 1) -> QSeries:
        c = [0] * prec
        if exponent < prec:
            c[exponent] = coeff
        return cls(c)

    # -- access ------------------------------------------------------------

    @property
    def prec(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, n):
        return self._c[n]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def is_zero(self) -> bool:
        return not any(self._c)

    @property
    def denominator(self) -> int:
        """Least common denominator of the stored coefficients."""
        return lcm(1, *(c.denominator for c in self._c))

    def truncate(self, prec: int) -> QSeries:
        if prec > self.prec:
            raise ValueError("cannot raise precision from %d to %d" % (self.prec, prec))
        return QSeries(self._c[:prec])

    def valuation(self) -> int | None:
        for i, c in enumerate(self._c):
            if c:
                return i
        return None

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> QSeries | None:
        if isinstance(other, QSeries):
            return other
        if isinstance(other, Rational):
            return QSeries.constant(other, self.prec)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.prec, other.prec)
        return QSeries(a + b for a, b in zip(self._c[:n], other._c[:n]))

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries(-a for a in self._c)

    def __pos__(self) -> QSeries:
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational):
            r = Fraction(other)
            return QSeries(r * a for a in self._c)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.prec, other.prec)
        a, b = self._c, other._c
        if self.is_integral and other.is_integral:
            ai = [int(x) for x in a[:n]]
            bi = [int(x) for x in b[:n]]
            return QSeries(
                sum(ai[i] * bi[k - i] for i in range(k + 1) if ai[i]) for k in range(n)
            )
        out = []
        for k in range(n):
            s = Fraction(0)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    s += a[i] * b[k - i]
            out.append(s)
        return QSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, QSeries):
            return self * other.invert()
        return NotImplemented

    def __pow__(self, n: int) -> QSeries:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        result = QSeries.one(self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def invert(self) -> QSeries:
        """The series ``b`` with ``self * b == 1 + O(q^prec)``."""
        a = self._c
        if not a or a[0] == 0:
            raise NotAUnit("series with zero constant term has no inverse")
        inv0 = 1 / a[0]
        b = [inv0]
        for k in range(1, len(a)):
            s = sum((a[i] * b[k - i] for i in range(1, k + 1) if a[i]), Fraction(0))
            b.append(-s * inv0)
        return QSeries(b)

    # -- comparison and display --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return "QSeries([%s])" % ", ".join(repr(format_rational(c)) for c in self._c)

    def __str__(self):
        terms = []
        for i, c in enumerate(self._c):
            if not c:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else "q^%d" % i)
            if i and c == 1:
                body = mono
            elif i and c == -1:
                body = "-" + mono
            else:
                body = format_rational(c) + ("*" + mono if mono else "")
            terms.append(body)
        text = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return "%s + O(q^%d)" % (text, self.prec)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self._c]

    @classmethod
    def from_json(cls, data: Sequence) -> QSeries:
        if not isinstance(data, (list, tuple)):
            raise TypeError("a series is a JSON array of rational strings")
        return cls(parse_rational(x) for x in data)


def add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def scale(r: Scalar, a: QSeries) -> QSeries:
    return a * Fraction(r)


def invert(a: QSeries) -> QSeries:
    return a.invert()


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # sum_{j<=m} C(m+1, j) B_j = 0 for m >= 1, B_0 = 1
    b = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum((comb(m + 1, j) * b[j] for j in range(m)), Fraction(0))
        b.append(-s / (m + 1))
    return tuple(b)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` for even ``n >= 2`` (``B_2 = 1/6``)."""
    if n < 2 or n % 2:
        raise ValueError("bernoulli() takes an even index >= 2, got %r" % (n,))
    return _bernoulli_table(n)[n]


def divisor_power_sum(e: int, n: int) -> int:
    """``sigma_e(n)``, the sum of ``d**e`` over the positive divisors ``d`` of ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**e
            other = n // d
            if other != d:
                total += other**e
        d += 1
    return total


def divisor_power_sums(e: int, upto: int) -> list[int]:
    """``[sigma_e(0) := 0, sigma_e(1), ..., sigma_e(upto - 1)]`` by sieving."""
    out = [0] * max(upto, 0)
    for d in range(1, upto):
        p = d**e
        for m in range(d, upto, d):
            out[m] += p
    return out


def eisenstein_G(weight: int, prec: int) -> QSeries:
    """``G_{2k} = -B_{2k}/4k + sum_{n>=1} sigma_{2k-1}(n) q^n`` with ``weight = 2k``."""
    if weight < 2 or weight % 2:
        raise InvalidWeight("Eisenstein series need an even weight >= 2, got %r" % (weight,))
    c = divisor_power_sums(weight - 1, prec)
    if prec:
        c[0] = -bernoulli(weight) / (2 * weight)
    return QSeries(c)
