"""
Integral modular forms of level one, seen through their q-expansions.

Everything here is determined by the structure theorem
``M_* = Q[E4, E6]`` together with the fact that the monomials
``E4^a E6^e Delta^c`` (``e`` in ``{0, 1}``) of a fixed weight form a
Z-basis of the integral forms ``M^Z_w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InsufficientPrecision, InternalError, InvalidWeight
from .qseries import QSeries, bernoulli, eisenstein_G

__all__ = [
    "ModularBasis",
    "WeierstrassCoefficients",
    "dim_modular",
    "eisenstein_monomials",
    "delta",
    "delta_product",
    "delta_from_eisenstein",
    "eisenstein_normalized",
    "miller_basis",
    "is_modular",
    "tate_curve",
    "weierstrass_invariants",
]


def _check_weight(weight: int) -> None:
    if not isinstance(weight, int) or weight < 0 or weight % 2:
        raise InvalidWeight("level one forms need an even weight >= 0, got %r" % (weight,))


def eisenstein_monomials(weight: int) -> list[tuple[int, int]]:
    """Exponent pairs ``(a, b)`` with ``4a + 6b == weight``."""
    _check_weight(weight)
    return [(a, (weight - 4 * a) // 6) for a in range(weight // 4 + 1) if (weight - 4 * a) % 6 == 0]


def dim_modular(weight: int) -> int:
    """Dimension of the space of level one modular forms of the given weight."""
    return len(eisenstein_monomials(weight))


def eisenstein_normalized(weight: int, prec: int) -> QSeries:
    """``E_w``, the Eisenstein series scaled to constant term 1 (``w >= 4``)."""
    if weight == 2:
        raise InvalidWeight("G_2 is not modular; E_2 is not offered")
    if weight < 4 or weight % 2:
        raise InvalidWeight("normalized Eisenstein series need an even weight >= 4")
    g = eisenstein_G(weight, prec)
    # G_w = -B_w/2w + ..., so rescaling by the constant term is exact
    return g * (1 / (-bernoulli(weight) / (2 * weight)))


def delta_product(prec: int) -> QSeries:
    """``q * prod_{n>=1} (1 - q^n)^24`` truncated at ``q^prec``."""
    if prec < 1:
        return QSeries(())
    # build prod (1-q^n) once, then raise to the 24th power
    eta = [0] * prec
    eta[0] = 1
    for n in range(1, prec):
        for i in range(prec - 1, n - 1, -1):
            eta[i] -= eta[i - n]
    p24 = QSeries(eta) ** 24
    return QSeries([0] + list(p24.coeffs[: prec - 1]))


def delta_from_eisenstein(prec: int) -> QSeries:
    e4 = eisenstein_normalized(4, prec)
    e6 = eisenstein_normalized(6, prec)
    return (e4 * e4 * e4 - e6 * e6) / 1728


@lru_cache(maxsize=32)
def delta(prec: int) -> QSeries:
    """The normalized cusp form ``Delta = q - 24 q^2 + ...``.

    Computed from the product formula and checked against
    ``(E4^3 - E6^2)/1728``; a disagreement is an internal error.
    """
    if prec < 2:
        raise ValueError("delta() needs prec >= 2")
    d = delta_product(prec)
    if d != delta_from_eisenstein(prec):
        raise InternalError("the two constructions of Delta disagree")
    return d


@dataclass(frozen=True)
class ModularBasis:
    """Integral basis ``f_0..f_{k-1}`` of weight ``weight`` forms with
    ``f_j[i] == (i == j)`` for ``i < k``."""

    weight: int
    k: int
    forms: tuple[QSeries, ...]
    prec: int

    def __post_init__(self):
        if len(self.forms) != self.k:
            raise ValueError("basis has %d forms, expected %d" % (len(self.forms), self.k))
        if self.prec < self.k:
            raise InsufficientPrecision("basis precision below its rank")
        for j, f in enumerate(self.forms):
            if f.prec != self.prec or not f.is_integral:
                raise ValueError("basis forms must be integral of precision %d" % self.prec)
            for i in range(self.k):
                if f[i] != (1 if i == j else 0):
                    raise ValueError("basis is not in echelon form at (%d, %d)" % (i, j))

    def head_projection(self, f: QSeries) -> QSeries:
        """``sum_{i<k} p_i(f) f_i``: the modular form matching ``f`` on the first k coefficients."""
        out = QSeries.zero(min(self.prec, f.prec))
        for i, fi in enumerate(self.forms):
            if f[i]:
                out = out + fi * f[i]
        return out


def _integral_generators(weight: int, prec: int) -> list[QSeries]:
    """``E4^a E6^e Delta^c`` for ``c = 0..k-1``; ``E6`` appears iff ``weight - 12c = 2 mod 4``."""
    e4 = eisenstein_normalized(4, prec)
    e6 = eisenstein_normalized(6, prec)
    d = delta_product(prec)
    gens = []
    c = 0
    while weight - 12 * c >= 0:
        rest = weight - 12 * c
        if rest != 2:
            e = 0 if rest % 4 == 0 else 1
            a = (rest - 6 * e) // 4
            gens.append(e4**a * e6**e * d**c)
        c += 1
    return gens


def _hermite_rows(rows: list[list[int]], k: int) -> list[list[int]]:
    """Unimodular row reduction so that column ``i`` of row ``j`` is ``delta_ij`` for ``i, j < k``."""
    rows = [list(r) for r in rows]
    for col in range(k):
        # Euclid on the entries of this column among the remaining rows
        while True:
            live = [r for r in range(col, len(rows)) if rows[r][col]]
            if not live:
                raise InternalError("rank deficiency in column %d" % col)
            piv = min(live, key=lambda r: abs(rows[r][col]))
            rows[col], rows[piv] = rows[piv], rows[col]
            done = True
            for r in range(col + 1, len(rows)):
                if rows[r][col]:
                    t = rows[r][col] // rows[col][col]
                    rows[r] = [x - t * y for x, y in zip(rows[r], rows[col])]
                    if rows[r][col]:
                        done = False
            if done:
                break
        if abs(rows[col][col]) != 1:
            raise InternalError(
                "pivot %d in column %d is not a unit; no integral echelon basis exists"
                % (rows[col][col], col)
            )
        if rows[col][col] < 0:
            rows[col] = [-x for x in rows[col]]
        for r in range(len(rows)):
            if r != col and rows[r][col]:
                t = rows[r][col]
                rows[r] = [x - t * y for x, y in zip(rows[r], rows[col])]
    return rows[:k]


@lru_cache(maxsize=128)
def miller_basis(weight: int, prec: int) -> ModularBasis:
    """The echelon Z-basis of ``M^Z_weight`` to ``prec`` coefficients."""
    _check_weight(weight)
    k = dim_modular(weight)
    if prec < k:
        raise InsufficientPrecision("prec %d below dimension %d" % (prec, k))
    gens = _integral_generators(weight, prec)
    if len(gens) != k:
        raise InternalError("generator count %d differs from dimension %d" % (len(gens), k))
    rows = []
    for g in gens:
        if not g.is_integral:
            raise InternalError("non-integral generator in weight %d" % weight)
        rows.append([int(c) for c in g])
    reduced = _hermite_rows(rows, k) if k else []
    return ModularBasis(weight, k, tuple(QSeries(r) for r in reduced), prec)


def is_modular(f: QSeries, weight: int) -> bool:
    """Whether ``f`` agrees with a weight ``weight`` modular form at every stored coefficient."""
    k = dim_modular(weight)
    if f.prec < k:
        raise InsufficientPrecision("need at least %d coefficients, have %d" % (k, f.prec))
    basis = miller_basis(weight, f.prec)
    return (f - basis.head_projection(f)).is_zero()


@dataclass(frozen=True)
class WeierstrassCoefficients:
    a1: QSeries
    a2: QSeries
    a3: QSeries
    a4: QSeries
    a6: QSeries

    def __post_init__(self):
        precs = {s.prec for s in (self.a1, self.a2, self.a3, self.a4, self.a6)}
        if len(precs) != 1:
            raise ValueError("Weierstrass coefficients must share one precision")

    @property
    def prec(self) -> int:
        return self.a1.prec


def tate_curve(prec: int) -> WeierstrassCoefficients:
    """Coefficients ``(1, 0, 0, B, C)`` of the Tate curve over ``Z[[q]]``.

    ``B = -5 sum n^3 q^n/(1-q^n)`` and
    ``C = -(1/12) sum (7n^5 + 5n^3) q^n/(1-q^n)``; expanding the geometric
    series turns both into divisor sums.
    """
    if prec < 1:
        raise ValueError("tate_curve() needs prec >= 1")
    b = [Fraction(0)] * prec
    c = [Fraction(0)] * prec
    for n in range(1, prec):
        for m in range(n, prec, n):
            b[m] += -5 * n**3
            c[m] += Fraction(-(7 * n**5 + 5 * n**3), 12)
    zero = QSeries.zero(prec)
    return WeierstrassCoefficients(QSeries.one(prec), zero, zero, QSeries(b), QSeries(c))


def weierstrass_invariants(w: WeierstrassCoefficients) -> tuple[QSeries, QSeries, QSeries]:
    """``(c4, c6, discriminant)`` of a Weierstrass equation, by the classical formulas."""
    b2 = w.a1 * w.a1 + w.a2 * 4
    b4 = w.a4 * 2 + w.a1 * w.a3
    b6 = w.a3 * w.a3 + w.a6 * 4
    c4 = b2 * b2 - b4 * 24
    c6 = -(b2 * b2 * b2) + b2 * b4 * 36 - b6 * 216
    disc = (c4 * c4 * c4 - c6 * c6) / 1728
    return c4, c6, disc
