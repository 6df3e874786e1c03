"""
Multiplicative sequences in the Pontrjagin classes.

Polynomials in ``p_1, p_2, ...`` are stored as maps from partitions to
q-series: the partition ``(2, 1, 1)`` is the monomial ``p_2 p_1^2`` and its
weight (sum of parts) is the cohomological degree divided by four.
The same container is reused for polynomials in the power sums
``N_2, N_4, ...``, where the part ``i`` stands for ``N_{2i}``.

The Witten genus series follow

    Phi         = exp(sum_{k>=2} 2/(2k)! G_2k N_2k) * exp(G_2 p_1)
    Theta       = exp(sum_{k>=2} 2/(2k)! G_2k N_2k)
    Phi_tilde   = Theta * sum_{j>=1} G_2^j p_1^(j-1) / j!

so that ``Phi - Theta == Phi_tilde * p_1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import InvalidSeries
from .qseries import QSeries, eisenstein_G, format_rational

Partition = tuple[int, ...]
Coeff = Union[int, Fraction, QSeries]

DEFAULT_MAX_WEIGHT = 6

__all__ = [
    "Partition",
    "GradedPPoly",
    "make_partition",
    "partitions",
    "newton_polynomial",
    "to_powersum_basis",
    "from_powersum_basis",
    "multiplicative_sequence",
    "phi_witten",
    "theta_witten",
    "phi_tilde",
    "ahat_coefficients",
    "l_coefficients",
    "monomial_label",
    "newton_monomial_in_p",
    "p_monomial_in_newton",
]


def make_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p < 1 for p in parts):
        raise ValueError("partition parts must be positive, got %r" % (parts,))
    return parts


def partitions(n: int, min_part: int = 1) -> Iterator[Partition]:
    """Partitions of ``n`` into parts ``>= min_part``, largest part first."""

    def rec(rest, largest):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, largest), min_part - 1, -1):
            for tail in rec(rest - part, part):
                yield (part,) + tail

    if n < 0:
        return iter(())
    return rec(n, n)


def monomial_label(lam: Partition, var: str = "p") -> str:
    """``(2, 1, 1)`` -> ``"p2*p1^2"``; with ``var="N"`` parts are doubled: ``"N4*N2^2"``."""
    if not lam:
        return "1"
    out = []
    for part in sorted(set(lam), reverse=True):
        e = lam.count(part)
        idx = 2 * part if var == "N" else part
        out.append("%s%d" % (var, idx) + ("^%d" % e if e > 1 else ""))
    return "*".join(out)


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


class GradedPPoly:
    """Polynomial in graded variables with q-series coefficients, truncated above ``max_weight``."""

    __slots__ = ("max_weight", "qprec", "_terms")

    def __init__(self, terms: Mapping[Iterable[int], Coeff], max_weight: int, qprec: int):
        if max_weight < 0 or qprec < 1:
            raise ValueError("need max_weight >= 0 and qprec >= 1")
        self.max_weight = max_weight
        self.qprec = qprec
        t: dict[Partition, QSeries] = {}
        for key, c in terms.items():
            lam = make_partition(key)
            if sum(lam) > max_weight:
                continue
            c = _lift(c, qprec)
            if lam in t:
                c = t[lam] + c
            if c.is_zero():
                t.pop(lam, None)
            else:
                t[lam] = c
        self._terms = MappingProxyType(t)

    @classmethod
    def constant(cls, value: Coeff, max_weight: int, qprec: int) -> GradedPPoly:
        return cls({(): value}, max_weight, qprec)

    @classmethod
    def variable(cls, i: int, max_weight: int, qprec: int = 1) -> GradedPPoly:
        return cls({(i,): 1}, max_weight, qprec)

    @property
    def terms(self) -> Mapping[Partition, QSeries]:
        return self._terms

    def __getitem__(self, lam) -> QSeries:
        return self._terms.get(make_partition(lam), QSeries.zero(self.qprec))

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def component(self, w: int) -> GradedPPoly:
        """The homogeneous part of weight ``w``."""
        return GradedPPoly({k: v for k, v in self._terms.items() if sum(k) == w},
                           self.max_weight, self.qprec)

    def is_zero(self) -> bool:
        return not self._terms

    def at_q0(self) -> dict[Partition, Fraction]:
        """Constant q-coefficients, dropping monomials whose constant term vanishes."""
        return {k: v[0] for k, v in self._terms.items() if v[0]}

    def q_coefficient(self, n: int) -> GradedPPoly:
        """The rational polynomial formed by the ``q^n`` coefficients."""
        return GradedPPoly({k: v[n] for k, v in self._terms.items()}, self.max_weight, 1)

    def truncate(self, max_weight: int | None = None, qprec: int | None = None) -> GradedPPoly:
        mw = self.max_weight if max_weight is None else max_weight
        qp = self.qprec if qprec is None else qprec
        return GradedPPoly(self._terms, mw, qp)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (Rational, QSeries)):
            other = GradedPPoly.constant(other, self.max_weight, self.qprec)
        if not isinstance(other, GradedPPoly):
            return NotImplemented
        mw = min(self.max_weight, other.max_weight)
        qp = min(self.qprec, other.qprec)
        t = {k: v.truncate(qp) for k, v in self._terms.items()}
        for k, v in other._terms.items():
            v = v.truncate(qp)
            t[k] = t[k] + v if k in t else v
        return GradedPPoly(t, mw, qp)

    __radd__ = __add__

    def __neg__(self):
        return GradedPPoly({k: -v for k, v in self._terms.items()}, self.max_weight, self.qprec)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            r = Fraction(other)
            return GradedPPoly({k: v * r for k, v in self._terms.items()}, self.max_weight, self.qprec)
        if isinstance(other, QSeries):
            qp = min(self.qprec, other.prec)
            return GradedPPoly({k: v.truncate(qp) * other for k, v in self._terms.items()},
                               self.max_weight, qp)
        if not isinstance(other, GradedPPoly):
            return NotImplemented
        mw = min(self.max_weight, other.max_weight)
        qp = min(self.qprec, other.qprec)
        t: dict[Partition, QSeries] = {}
        for a, x in self._terms.items():
            wa = sum(a)
            for b, y in other._terms.items():
                if wa + sum(b) > mw:
                    continue
                key = _merge(a, b)
                xy = x.truncate(qp) * y.truncate(qp)
                t[key] = t[key] + xy if key in t else xy
        return GradedPPoly(t, mw, qp)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = GradedPPoly.constant(1, self.max_weight, self.qprec)
        for _ in range(n):
            out = out * self
        return out

    def exp(self) -> GradedPPoly:
        """``exp`` of a polynomial without weight-0 part; finite by nilpotence."""
        if () in self._terms:
            raise InvalidSeries("exp() needs a vanishing weight-0 component")
        out = GradedPPoly.constant(1, self.max_weight, self.qprec)
        term = out
        for n in range(1, self.max_weight + 1):
            term = term * self * Fraction(1, n)
            if term.is_zero():
                break
            out = out + term
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedPPoly):
            return NotImplemented
        return (self.max_weight, self.qprec, dict(self._terms)) == (
            other.max_weight, other.qprec, dict(other._terms))

    def __hash__(self):
        return hash((self.max_weight, self.qprec, frozenset(self._terms.items())))

    def __repr__(self):
        return "GradedPPoly(%d terms, max_weight=%d, qprec=%d)" % (
            len(self._terms), self.max_weight, self.qprec)

    def format(self, var: str = "p") -> str:
        """Readable rendering; q-series coefficients are shown by their constant term
        unless they carry higher q-terms."""
        parts = []
        for lam in sorted(self._terms, key=lambda k: (sum(k), k)):
            c = self._terms[lam]
            if c.prec == 1 or not any(c[1:]):
                coef = format_rational(c[0])
            else:
                coef = "(%s)" % c
            parts.append(coef if not lam else "%s*%s" % (coef, monomial_label(lam, var)))
        return " + ".join(parts) if parts else "0"


def _lift(c: Coeff, qprec: int) -> QSeries:
    if isinstance(c, QSeries):
        if c.prec < qprec:
            raise ValueError("coefficient precision %d below qprec %d" % (c.prec, qprec))
        return c.truncate(qprec)
    if isinstance(c, Rational):
        return QSeries.constant(c, qprec)
    raise TypeError("unsupported coefficient %r" % (c,))


# -- Newton polynomials and the power-sum basis ------------------------------


@lru_cache(maxsize=None)
def _newton_rational(k: int) -> GradedPPoly:
    # N_2k = p1 N_{2k-2} - p2 N_{2k-4} + ... + (-1)^(k-1) k p_k
    acc = GradedPPoly({(k,): (-1) ** (k - 1) * k}, k, 1)
    for i in range(1, k):
        acc = acc + GradedPPoly.variable(i, k) * _newton_rational(k - i).truncate(k) * ((-1) ** (i - 1))
    return acc


def newton_polynomial(k: int, max_weight: int | None = None, qprec: int = 1) -> GradedPPoly:
    """``N_2k = sum_j x_j^(2k)`` as a polynomial in ``p_1, p_2, ...``."""
    if k < 1:
        raise ValueError("Newton polynomials are indexed by k >= 1")
    mw = k if max_weight is None else max_weight
    return GradedPPoly({lam: c[0] for lam, c in _newton_rational(k).terms.items()}, mw, qprec)


@lru_cache(maxsize=None)
def _p_in_newton(k: int) -> GradedPPoly:
    """``p_k`` written in the power sums; parts ``i`` stand for ``N_2i``."""
    # invert the Newton identity for p_k
    acc = GradedPPoly.variable(k, k)
    for i in range(1, k):
        acc = acc - _p_in_newton(i).truncate(k) * GradedPPoly.variable(k - i, k) * ((-1) ** (i - 1))
    return acc * Fraction((-1) ** (k - 1), k)


@lru_cache(maxsize=None)
def p_monomial_in_newton(lam: Partition) -> dict[Partition, Fraction]:
    """The monomial ``p_lam`` in the power-sum basis."""
    w = sum(lam)
    out = GradedPPoly.constant(1, w, 1)
    for part in lam:
        out = out * _p_in_newton(part).truncate(w)
    return {k: v[0] for k, v in out.terms.items()}


@lru_cache(maxsize=None)
def newton_monomial_in_p(lam: Partition) -> dict[Partition, Fraction]:
    """The monomial ``N_2l1 * N_2l2 * ...`` in the ``p``-basis."""
    w = sum(lam)
    out = GradedPPoly.constant(1, w, 1)
    for part in lam:
        out = out * _newton_rational(part).truncate(w)
    return {k: v[0] for k, v in out.terms.items()}


def to_powersum_basis(P: GradedPPoly) -> dict[Partition, QSeries]:
    """Rewrite ``P`` in the monomials ``N_2l1 * N_2l2 * ...``; key ``(l1, l2, ...)``."""
    out: dict[Partition, QSeries] = {}
    for lam, c in P.terms.items():
        for mu, r in p_monomial_in_newton(lam).items():
            term = c * r
            out[mu] = out[mu] + term if mu in out else term
    return {k: v for k, v in out.items() if not v.is_zero()}


def from_powersum_basis(coeffs: Mapping[Iterable[int], Coeff], max_weight: int, qprec: int = 1) -> GradedPPoly:
    """Inverse of :func:`to_powersum_basis`: substitute the Newton polynomials."""
    t: dict[Partition, QSeries] = {}
    for key, c in coeffs.items():
        mu = make_partition(key)
        if sum(mu) > max_weight:
            continue
        c = _lift(c, qprec)
        for lam, r in newton_monomial_in_p(mu).items():
            term = c * r
            t[lam] = t[lam] + term if lam in t else term
    return GradedPPoly(t, max_weight, qprec)


# -- multiplicative sequences -------------------------------------------------


def _series_log(coeffs: Sequence[QSeries], degree: int) -> list[QSeries]:
    """Coefficients of ``log(phi)`` in ``y = x^2`` up to ``y^degree``; ``phi[0] == 1``."""
    qprec = coeffs[0].prec
    zero = QSeries.zero(qprec)
    u = [zero] + [coeffs[i] if i < len(coeffs) else zero for i in range(1, degree + 1)]
    log = [zero] * (degree + 1)
    power = [QSeries.one(qprec)] + [zero] * degree
    for n in range(1, degree + 1):
        power = [sum((power[i] * u[d - i] for i in range(d) if not u[d - i].is_zero()), zero)
                 for d in range(degree + 1)]
        sign = Fraction((-1) ** (n + 1), n)
        log = [a + b * sign for a, b in zip(log, power)]
    return log


def multiplicative_sequence(phi_coeffs: Sequence[Coeff], max_weight: int = DEFAULT_MAX_WEIGHT,
                            qprec: int | None = None) -> GradedPPoly:
    """``K_phi`` for ``phi(x) = sum_k phi_coeffs[k] x^(2k)`` with ``phi_coeffs[0] == 1``.

    Uses ``K_phi = exp(sum_k c_k N_2k)`` where ``sum_k c_k x^(2k) = log phi``.
    Missing high coefficients are taken to be zero.
    """
    if not phi_coeffs:
        raise InvalidSeries("empty series")
    if qprec is None:
        precs = [c.prec for c in phi_coeffs if isinstance(c, QSeries)]
        qprec = min(precs) if precs else 1
    coeffs = [_lift(c, qprec) for c in phi_coeffs[: max_weight + 1]]
    if coeffs[0] != QSeries.one(qprec):
        raise InvalidSeries("phi must have constant term 1")
    log = _series_log(coeffs, max_weight)
    exponent = GradedPPoly({}, max_weight, qprec)
    for k in range(1, max_weight + 1):
        if not log[k].is_zero():
            exponent = exponent + newton_polynomial(k, max_weight, qprec) * log[k]
    return exponent.exp()


def ahat_coefficients(n: int) -> list[Fraction]:
    """Taylor coefficients of ``(x/2)/sinh(x/2)`` in ``x^2``, up to ``x^(2n)``."""
    # sinh(x/2)/(x/2) = sum (x/2)^(2j) / (2j+1)!
    s = QSeries([Fraction(1, 4**j * factorial(2 * j + 1)) for j in range(n + 1)])
    return list(s.invert().coeffs)


def l_coefficients(n: int) -> list[Fraction]:
    """Taylor coefficients of ``x/tanh(x)`` in ``x^2``, up to ``x^(2n)``."""
    cosh = QSeries([Fraction(1, factorial(2 * j)) for j in range(n + 1)])
    sinh_x = QSeries([Fraction(1, factorial(2 * j + 1)) for j in range(n + 1)])
    return list((cosh * sinh_x.invert()).coeffs)


# -- Witten genus series --------------------------------------------------------


@lru_cache(maxsize=16)
def _theta_exponent(max_weight: int, qprec: int) -> GradedPPoly:
    out = GradedPPoly({}, max_weight, qprec)
    for k in range(2, max_weight + 1):
        g = eisenstein_G(2 * k, qprec) * Fraction(2, factorial(2 * k))
        out = out + newton_polynomial(k, max_weight, qprec) * g
    return out


@lru_cache(maxsize=16)
def theta_witten(max_weight: int = DEFAULT_MAX_WEIGHT, qprec: int = 32) -> GradedPPoly:
    return _theta_exponent(max_weight, qprec).exp()


def _g2_p1_sum(max_weight: int, qprec: int, start: int) -> GradedPPoly:
    # sum_{j >= start} G_2^j p_1^(j - start) / j!
    g2 = eisenstein_G(2, qprec)
    t: dict[Partition, QSeries] = {}
    for j in range(start, max_weight + start + 1):
        t[(1,) * (j - start)] = g2**j * Fraction(1, factorial(j))
    return GradedPPoly(t, max_weight, qprec)


@lru_cache(maxsize=16)
def phi_witten(max_weight: int = DEFAULT_MAX_WEIGHT, qprec: int = 32) -> GradedPPoly:
    """``Phi = K_{phi_W}``, the characteristic series of the Witten genus."""
    return theta_witten(max_weight, qprec) * _g2_p1_sum(max_weight, qprec, 0)


@lru_cache(maxsize=16)
def phi_tilde(max_weight: int = DEFAULT_MAX_WEIGHT, qprec: int = 32) -> GradedPPoly:
    """``Theta * (exp(G_2 p_1) - 1) / p_1``, built from the explicit sum."""
    return theta_witten(max_weight, qprec) * _g2_p1_sum(max_weight, qprec, 1)
