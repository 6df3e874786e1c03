"""
Witten genus values and secondary invariants from characteristic numbers.

A closed ``4m``-manifold enters through its Pontrjagin numbers
``<p_J, [M]>`` (:class:`CharNumbers`). A string ``(4m-1)``-manifold ``M``
with spin zero bordism ``Z`` enters through the relative numbers
``<p1~ u p_J, [Z, M]>`` with ``|J| = m - 1`` (:class:`RelCharNumbers`),
where ``p1~`` is the relative first Pontrjagin class fixed by the string
structure.

The secondary invariant is the class in ``T_2m`` of

    b_hat = -kappa_m * < Phi_tilde(TZ) u p1~, [Z, M] >,

with ``kappa_m = 1`` for even ``m`` and ``1/2`` for odd ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import floor
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple

from .errors import NonIntegral, NonIntegralPairing
from .genera import (
    GradedPPoly,
    Partition,
    make_partition,
    newton_monomial_in_p,
    p_monomial_in_newton,
    partitions,
    phi_tilde,
    phi_witten,
    to_powersum_basis,
)
from .modforms import ModularBasis
from .qseries import QSeries, parse_rational
from .tgroup import TClass, reduce

__all__ = [
    "CharNumbers",
    "RelCharNumbers",
    "kappa",
    "witten_genus",
    "spin_index_dim4",
    "signature_dim4",
    "b_geom_series",
    "b_geom",
    "nu_delta_combination",
    "nu_delta_polynomial",
    "nu_delta_detect",
    "powersum_pairings",
    "rel_from_powersum",
    "mod3_representative",
    "d_invariant",
    "sigma_and_canonical",
    "CanonicalStructure",
]


def kappa(m: int) -> Fraction:
    """``1`` for even ``m``, ``1/2`` for odd ``m``."""
    if m < 1:
        raise ValueError("m must be positive")
    return Fraction(1) if m % 2 == 0 else Fraction(1, 2)


def _normalize_numbers(numbers: Mapping[Iterable[int], object], weight: int) -> Mapping[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for key, value in numbers.items():
        lam = make_partition(key)
        if sum(lam) != weight:
            raise ValueError("partition %r has weight %d, expected %d" % (lam, sum(lam), weight))
        if lam in out:
            raise ValueError("duplicate partition %r" % (lam,))
        out[lam] = parse_rational(value)
    return MappingProxyType(out)


@dataclass(frozen=True)
class CharNumbers:
    """Pontrjagin numbers of a closed ``4m``-manifold; absent partitions are zero."""

    m: int
    numbers: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be positive")
        object.__setattr__(self, "numbers", _normalize_numbers(self.numbers, self.m))

    def get(self, lam: Partition) -> Fraction:
        return self.numbers.get(lam, Fraction(0))


@dataclass(frozen=True)
class RelCharNumbers:
    """Relative numbers ``<p1~ u p_J, [Z, M]>`` for ``|J| = m - 1``; absent partitions are zero."""

    m: int
    numbers: Mapping[Partition, Fraction] = field(default_factory=dict)
    sign_z: int | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be positive")
        object.__setattr__(self, "numbers", _normalize_numbers(self.numbers, self.m - 1))

    def get(self, lam: Partition) -> Fraction:
        return self.numbers.get(lam, Fraction(0))


def _pair(poly: GradedPPoly, weight: int, numbers: Mapping[Partition, Fraction], qprec: int) -> QSeries:
    out = QSeries.zero(qprec)
    for lam, c in poly.component(weight).terms.items():
        v = numbers.get(lam)
        if v:
            out = out + c * v
    return out


def witten_genus(data: CharNumbers, qprec: int) -> QSeries:
    """``R([M]) = kappa_m <Phi(p_1, p_2, ...), [M]>``."""
    phi = phi_witten(data.m, qprec)
    return _pair(phi, data.m, data.numbers, qprec) * kappa(data.m)


def spin_index_dim4(p1_number) -> Fraction:
    """Index of the spin Dirac operator of a closed spin 4-manifold."""
    return -parse_rational(p1_number) / 24


def signature_dim4(p1_number) -> Fraction:
    return parse_rational(p1_number) / 3


def b_geom_series(rel: RelCharNumbers, qprec: int) -> QSeries:
    """The rational series ``-kappa_m <Phi_tilde u p1~, [Z, M]>`` before reduction."""
    pt = phi_tilde(max(rel.m - 1, 0), qprec)
    return _pair(pt, rel.m - 1, rel.numbers, qprec) * (-kappa(rel.m))


def b_geom(rel: RelCharNumbers, qprec: int, basis: ModularBasis | None = None) -> TClass:
    """The invariant ``b^geom`` as an element of ``T_2m``."""
    return reduce(b_geom_series(rel, qprec), 2 * rel.m, basis)


# -- detecting nu*Delta at the prime 3 ------------------------------------------

NU_DELTA_M = 7


def mod3_representative(x: Fraction) -> Fraction:
    """The representative of ``x`` modulo ``3 Z_(3)`` with 3-power denominator in ``[0, 3)``.

    Only the 3-adic part of ``x`` matters: ``x = u / (3^e d)`` with ``d``
    prime to 3 is replaced by ``(u d^-1 mod 3^(e+1)) / 3^e``.
    """
    x = Fraction(x)
    den = x.denominator
    e = 0
    while den % 3 == 0:
        den //= 3
        e += 1
    mod = 3 ** (e + 1)
    return Fraction(x.numerator * pow(den, -1, mod) % mod, 3**e)


@lru_cache(maxsize=1)
def nu_delta_combination() -> dict[Partition, Fraction]:
    """``3 * (Phi_tilde[q^1] - 24 * Phi_tilde[q^0])`` in weight 6, in the power-sum basis.

    Keys are partitions ``(l1, l2, ...)`` standing for ``N_2l1 * N_2l2 * ...``.
    """
    w = NU_DELTA_M - 1
    pt = phi_tilde(w, 2).component(w)
    comb = (pt.q_coefficient(1) - pt.q_coefficient(0) * 24) * 3
    return {lam: c[0] for lam, c in to_powersum_basis(comb).items()}


@lru_cache(maxsize=1)
def nu_delta_polynomial() -> dict[Partition, Fraction]:
    """The mod-3 detector for ``nu * Delta`` in the power-sum basis.

    Each coefficient of :func:`nu_delta_combination` is replaced by its
    canonical representative modulo ``3 Z_(3)``.
    """
    return {lam: mod3_representative(c) for lam, c in nu_delta_combination().items()}


def powersum_pairings(rel: RelCharNumbers) -> dict[Partition, Fraction]:
    """``<p1~ u N_lambda, [Z, M]>`` for every partition ``lambda`` of ``m - 1``."""
    out = {}
    for mu in partitions(rel.m - 1):
        out[mu] = sum((r * rel.get(lam) for lam, r in newton_monomial_in_p(mu).items()),
                      Fraction(0))
    return out


def rel_from_powersum(m: int, values: Mapping[Iterable[int], object]) -> RelCharNumbers:
    """Relative numbers whose power-sum pairings are ``values`` (others zero)."""
    w = m - 1
    targets = {make_partition(k): parse_rational(v) for k, v in values.items()}
    # <p1~ u p_J> = sum_lambda [coefficient of N_lambda in p_J] * <p1~ u N_lambda>
    numbers = {}
    for lam in partitions(w):
        numbers[lam] = sum((r * targets.get(mu, Fraction(0))
                            for mu, r in p_monomial_in_newton(lam).items()), Fraction(0))
    return RelCharNumbers(m, {k: v for k, v in numbers.items() if v})


def nu_delta_detect(rel: RelCharNumbers) -> int:
    """The coefficient ``c`` in ``Z/3`` with ``sigma[M] = c * nu * Delta`` in ``tmf_(3)``."""
    if rel.m != NU_DELTA_M:
        raise ValueError("the nu*Delta detector lives in dimension 27 (m = 7), got m = %d" % rel.m)
    pairs = powersum_pairings(rel)
    value = sum((c * pairs[lam] for lam, c in nu_delta_polynomial().items()), Fraction(0))
    if value.denominator != 1:
        raise NonIntegralPairing("pairing %s is not an integer; the data cannot come from a "
                                 "string manifold" % value)
    return int(-value) % 3


# -- three-manifolds ------------------------------------------------------------


def d_invariant(p1_integral, h_integral) -> int:
    """``d_Z(M, alpha) = 1/2 int_Z p_1 - int_M H_alpha``, which must be an integer."""
    value = parse_rational(p1_integral) / 2 - parse_rational(h_integral)
    if value.denominator != 1:
        raise NonIntegral("d = %s is not an integer" % value)
    return int(value)


class CanonicalStructure(NamedTuple):
    sigma: int
    sigma_mod2: int
    shift: int


def sigma_and_canonical(sign_z: int, d: int) -> CanonicalStructure:
    """``sigma = 3 sign(Z) - 2 d`` and the shift ``x`` with ``sigma + 2x`` in ``{0, 1}``.

    Changing the string structure by ``x`` times the orientation class
    lowers ``d`` by ``x`` and so raises ``sigma`` by ``2x``.
    """
    sigma = 3 * int(sign_z) - 2 * int(d)
    shift = -floor(Fraction(sigma, 2))
    return CanonicalStructure(sigma, sigma % 2, shift)
