"""
The groups ``T_2m = R[[q]] / (Z[[q]] + M_2m)`` on rational representatives.

With the echelon basis ``f_0..f_{k-1}`` of weight ``2m`` forms, a series
``f`` is sent to the fractional parts of the coefficients ``k, k+1, ...``
of ``f - sum_{i<k} f[i] * f_i``. This is an isomorphism onto a product of
circles, so a :class:`TClass` stores exactly that tail, for the indices a
finite precision can see.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm
from typing import NamedTuple

from .errors import InconsistentBound, InsufficientPrecision, WeightMismatch
from .modforms import ModularBasis, dim_modular, miller_basis
from .qseries import QSeries, format_rational

__all__ = [
    "TClass",
    "OrderResult",
    "reduce",
    "localize",
    "order",
    "add",
    "negate",
    "frac",
    "is_prime",
    "p_part",
]


def frac(x: Fraction) -> Fraction:
    """Representative of ``x mod 1`` in ``[0, 1)``."""
    return x - floor(x)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _split(n: int, p: int) -> tuple[int, int]:
    """``n = p**e * rest`` with ``rest`` prime to ``p``; returns ``(p**e, rest)``."""
    pe = 1
    while n % p == 0:
        n //= p
        pe *= p
    return pe, n


def p_part(n: int, p: int) -> int:
    return _split(n, p)[0]


@dataclass(frozen=True)
class TClass:
    """Element of ``T_weight`` given by the tail ``tail[j]`` at index ``k + j``.

    ``prime`` is set on the p-local part of a class (see :func:`localize`).
    """

    weight: int
    k: int
    prec: int
    tail: tuple[Fraction, ...]
    prime: int | None = None

    def __post_init__(self):
        if len(self.tail) != self.prec - self.k:
            raise ValueError("tail length %d does not cover indices %d..%d"
                             % (len(self.tail), self.k, self.prec - 1))
        for t in self.tail:
            if not 0 <= t < 1:
                raise ValueError("tail entries live in [0, 1), got %s" % t)
            if self.prime is not None and _split(t.denominator, self.prime)[1] != 1:
                raise ValueError("entry %s is not %d-primary" % (t, self.prime))

    def is_zero(self) -> bool:
        return not any(self.tail)

    def entry(self, index: int) -> Fraction:
        """Coordinate at q-exponent ``index`` (``k <= index < prec``)."""
        if not self.k <= index < self.prec:
            raise IndexError("index %d outside the window %d..%d" % (index, self.k, self.prec - 1))
        return self.tail[index - self.k]

    def _check_compatible(self, other: TClass) -> None:
        if self.weight != other.weight:
            raise WeightMismatch("cannot combine classes of weight %d and %d"
                                 % (self.weight, other.weight))
        if self.prime != other.prime:
            raise WeightMismatch("cannot combine classes localized at %s and %s"
                                 % (self.prime, other.prime))

    def __add__(self, other):
        if not isinstance(other, TClass):
            return NotImplemented
        self._check_compatible(other)
        n = min(self.prec, other.prec)
        tail = tuple(frac(a + b) for a, b in zip(self.tail, other.tail))
        return TClass(self.weight, self.k, n, tail, self.prime)

    def __neg__(self) -> TClass:
        return TClass(self.weight, self.k, self.prec, tuple(frac(-t) for t in self.tail), self.prime)

    def __sub__(self, other):
        if not isinstance(other, TClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return TClass(self.weight, self.k, self.prec, tuple(frac(n * t) for t in self.tail), self.prime)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "k": self.k,
            "prec": self.prec,
            "prime": self.prime,
            "tail": [format_rational(t) for t in self.tail],
        }

    def __str__(self):
        body = ", ".join(format_rational(t) for t in self.tail[:8])
        more = ", ..." if len(self.tail) > 8 else ""
        loc = "" if self.prime is None else " localized at %d" % self.prime
        return "[%s%s] in T_%d from q^%d%s" % (body, more, self.weight, self.k, loc)


class OrderResult(NamedTuple):
    order: int
    certified: bool


def reduce(f: QSeries, weight: int, basis: ModularBasis | None = None) -> TClass:
    """Normal form of the class of ``f`` in ``T_weight``."""
    k = dim_modular(weight)
    if f.prec < k:
        raise InsufficientPrecision("need at least %d coefficients for weight %d, have %d"
                                    % (k, weight, f.prec))
    if basis is None:
        basis = miller_basis(weight, f.prec)
    elif basis.weight != weight:
        raise WeightMismatch("basis of weight %d used for weight %d" % (basis.weight, weight))
    elif basis.prec < f.prec:
        raise InsufficientPrecision("basis precision %d below series precision %d"
                                    % (basis.prec, f.prec))
    g = f - basis.head_projection(f)
    return TClass(weight, k, f.prec, tuple(frac(g[nu]) for nu in range(k, f.prec)))


def localize(c: TClass, p: int) -> TClass:
    """The ``p``-primary component of ``c``.

    An entry ``u / (p^e d)`` with ``d`` prime to ``p`` goes to
    ``u d' / p^e`` where ``d d' = 1 mod p^e``.
    """
    if c.prime is not None:
        raise ValueError("class is already localized at %d" % c.prime)
    if not is_prime(p):
        raise ValueError("%r is not a prime" % (p,))
    tail = []
    for t in c.tail:
        pe, d = _split(t.denominator, p)
        if pe == 1:
            tail.append(Fraction(0))
        else:
            tail.append(Fraction(t.numerator * pow(d, -1, pe) % pe, pe))
    return TClass(c.weight, c.k, c.prec, tuple(tail), p)


def order(c: TClass, denominator_bound: int) -> OrderResult:
    """Order of ``c``, read off the visible window.

    ``denominator_bound`` is a caller-supplied ``L`` with ``L * f`` integral
    for the representative ``f``; since the basis is integral, the order
    divides ``L`` (its ``p``-part for a localized class). The window lcm is
    always a lower bound and is certified exact when it reaches that bound.
    """
    if denominator_bound < 1:
        raise ValueError("denominator bound must be positive")
    bound = denominator_bound if c.prime is None else p_part(denominator_bound, c.prime)
    n = 1
    for t in c.tail:
        if bound % t.denominator:
            raise InconsistentBound("entry %s has denominator not dividing %d" % (t, bound))
        n = lcm(n, t.denominator)
    return OrderResult(n, n == bound)


def add(c1: TClass, c2: TClass) -> TClass:
    return c1 + c2


def negate(c: TClass) -> TClass:
    return -c
