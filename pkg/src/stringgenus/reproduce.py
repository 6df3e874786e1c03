"""
End-to-end reproduction checks, one per published value or identity.

Each check returns a :class:`CheckResult`; :func:`run_all` runs them in a
fixed order. Randomized checks draw from ``random.Random`` with pinned seeds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import genera, invariants, modforms, qseries, spinbordism, tgroup
from .genera import GradedPPoly, partitions
from .qseries import QSeries

PROPERTY_CASES = 200


@dataclass(frozen=True)
class CheckResult:
    number: int
    title: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return "%s criterion %2d: %s%s" % (
            "PASS" if self.ok else "FAIL", self.number, self.title,
            "" if not self.detail else " (%s)" % self.detail)


def _brute_sigma(e: int, n: int) -> int:
    return sum(d**e for d in range(1, n + 1) if n % d == 0)


def check_eisenstein() -> tuple[bool, str]:
    g2 = qseries.eisenstein_G(2, 50)
    ok = g2[0] == Fraction(-1, 24)
    ok &= all(g2[n] == _brute_sigma(1, n) for n in range(1, 50))
    ok &= all(c.denominator == 1 for c in g2[1:])
    return ok, "G2 = %s ..." % ", ".join(qseries.format_rational(c) for c in g2[:6])


def _naive_delta(prec: int) -> list[int]:
    poly = [0] * prec
    poly[1] = 1
    for n in range(1, prec):
        for _ in range(24):
            poly = [poly[i] - (poly[i - n] if i >= n else 0) for i in range(prec)]
    return poly


def check_delta() -> tuple[bool, str]:
    a = modforms.delta_product(50)
    b = modforms.delta_from_eisenstein(50)
    naive = _naive_delta(50)
    ok = a == b and list(a.coeffs) == naive
    ok &= list(a[:6]) == [0, 1, -24, 252, -1472, 4830]
    return ok, "Delta = %s" % modforms.delta(6)


def _tate_oracle(prec: int) -> tuple[list[Fraction], list[Fraction]]:
    # sum_n f(n) q^n/(1-q^n) = sum_n f(n) (q^n + q^2n + ...)
    b = [Fraction(0)] * prec
    c = [Fraction(0)] * prec
    for n in range(1, prec):
        for j in range(1, prec):
            if n * j >= prec:
                break
            b[n * j] -= 5 * n**3
            c[n * j] -= Fraction(7 * n**5 + 5 * n**3, 12)
    return b, c


def check_tate() -> tuple[bool, str]:
    w = modforms.tate_curve(30)
    c4, c6, disc = modforms.weierstrass_invariants(w)
    ok = c4 == modforms.eisenstein_normalized(4, 30)
    ok &= c6 == -modforms.eisenstein_normalized(6, 30)
    ok &= disc == modforms.delta(30)
    w50 = modforms.tate_curve(50)
    b, c = _tate_oracle(50)
    ok &= list(w50.a4.coeffs) == b and list(w50.a6.coeffs) == c
    ok &= w50.a4.is_integral and w50.a6.is_integral
    return ok, "c4 = E4, c6 = -E6, disc = Delta to q^30"


def check_miller() -> tuple[bool, str]:
    ok = True
    for w in range(0, 50, 2):
        k = modforms.dim_modular(w)
        basis = modforms.miller_basis(w, k + 4)
        for j, f in enumerate(basis.forms):
            ok &= f.is_integral
            ok &= all(f[i] == (1 if i == j else 0) for i in range(k))
    return ok, "weights 0..48"


def check_delta_power_orders() -> tuple[bool, str]:
    ok = True
    for k in range(5):
        weight = 12 * k + 2
        prec = k + 4
        dk = modforms.delta(prec) ** k if k else QSeries.one(prec)
        for a in range(2, 25):
            c = tgroup.reduce(dk * Fraction(1, a), weight)
            ok &= tgroup.order(c, a) == (a, True)
    return ok, "k = 0..4, a = 2..24"


def check_generator() -> tuple[bool, str]:
    rel = invariants.RelCharNumbers(1, {(): 2})
    c = invariants.b_geom(rel, 12)
    ok = c.tail == (Fraction(1, 24),) + (Fraction(0),) * 11
    ok &= c == tgroup.reduce(-qseries.eisenstein_G(2, 12), 2)
    ok &= tgroup.order(c, 24) == (24, True)
    return ok, str(c)


def check_localization_2() -> tuple[bool, str]:
    one24 = tgroup.reduce(QSeries.constant(Fraction(1, 24), 8), 2)
    loc = tgroup.localize(one24, 2)
    ok = loc.tail[0] == Fraction(3, 8) and tgroup.order(loc, 24) == (8, True)
    d = modforms.delta(10)
    for c in (1, 3):
        x = tgroup.localize(tgroup.reduce(d * Fraction(c, 4), 14), 2)
        ok &= tgroup.order(x, 4) == (4, True)
    for c in (1, 5):
        x = tgroup.localize(tgroup.reduce(d * d * Fraction(c, 8), 26), 2)
        ok &= tgroup.order(x, 8) == (8, True)
    return ok, "[1/24] = [3/8] at 2"


def check_localization_3() -> tuple[bool, str]:
    two3 = tgroup.localize(tgroup.reduce(QSeries.constant(Fraction(2, 3), 8), 2), 3)
    ok = tgroup.order(two3, 3) == (3, True)
    one24 = tgroup.localize(tgroup.reduce(QSeries.constant(Fraction(1, 24), 8), 2), 3)
    ok &= one24 == two3
    x = tgroup.localize(tgroup.reduce(modforms.delta(10) * Fraction(2, 3), 14), 3)
    ok &= tgroup.order(x, 3) == (3, True)
    return ok, "[2/3] and [2/3 Delta] of order 3"


NU_DELTA_EXPECTED = {
    (2, 2, 2): Fraction(1967, 729),
    (4, 1, 1): Fraction(356, 243),
    (3, 1, 1, 1): Fraction(2575, 2187),
    (4, 2): Fraction(152, 81),
    (3, 2, 1): Fraction(941, 729),
    (1, 1, 1, 1, 1, 1): Fraction(6232, 2187),
    (2, 1, 1, 1, 1): Fraction(898, 729),
    (5, 1): Fraction(541, 243),
    (2, 2, 1, 1): Fraction(623, 729),
    (6,): Fraction(457, 729),
    (3, 3): Fraction(2398, 2187),
}


def check_nu_delta() -> tuple[bool, str]:
    got = invariants.nu_delta_polynomial()
    bad = [genera.monomial_label(k, "N") for k in NU_DELTA_EXPECTED if got.get(k) != NU_DELTA_EXPECTED[k]]
    ok = not bad and set(got) == set(NU_DELTA_EXPECTED)
    return ok, "11/11 coefficients" if ok else "mismatch at " + ", ".join(bad)


def check_ahat() -> tuple[bool, str]:
    phi0 = genera.phi_witten(4, 1)
    ahat = genera.multiplicative_sequence(genera.ahat_coefficients(4), 4)
    ok = phi0 == ahat
    ok &= ahat.component(2).at_q0() == {(1, 1): Fraction(7, 5760), (2,): Fraction(-4, 5760)}
    ok &= ahat.component(1).at_q0() == {(1,): invariants.spin_index_dim4(1)}
    lgen = genera.multiplicative_sequence(genera.l_coefficients(1), 1)
    ok &= lgen.component(1).at_q0() == {(1,): invariants.signature_dim4(1)}
    return ok, "through weight 4"


def check_three_manifolds() -> tuple[bool, str]:
    d_so3 = invariants.d_invariant(-2, 0)
    s_so3 = invariants.sigma_and_canonical(1, d_so3)
    d_t3 = invariants.d_invariant(0, 0)
    s_t3 = invariants.sigma_and_canonical(0, d_t3)
    ok = d_so3 == -1 and (s_so3.sigma, s_so3.shift) == (5, -2)
    ok &= d_t3 == 0 and (s_t3.sigma, s_t3.shift) == (0, 0)
    return ok, "SO(3): d=%d sigma=%d shift=%d" % (d_so3, s_so3.sigma, s_so3.shift)


def check_mspin() -> tuple[bool, str]:
    rows = spinbordism.load_table()
    ok = len(rows) == 128 and not spinbordism.validate_table(rows)
    by_i = {r.i: r for r in rows}
    ok &= by_i[24].rank == 11 and by_i[100].rank == 1958
    ok &= all(r.torsion == spinbordism.ko_cover_torsion(r.i) + r.dim_z for r in rows)
    ok &= all(spinbordism.abp_integral_rank(i) == spinbordism.mspin_rational_rank(i) for i in range(128))
    return ok, "%d rows" % len(rows)


def _random_series(rng: random.Random, prec: int, den: int = 6, size: int = 9) -> QSeries:
    return QSeries([Fraction(rng.randint(-size, size), rng.randint(1, den)) for _ in range(prec)])


def _random_rel(rng: random.Random, m: int) -> invariants.RelCharNumbers:
    return invariants.RelCharNumbers(m, {lam: rng.randint(-50, 50) for lam in partitions(m - 1)})


def check_properties(cases: int = PROPERTY_CASES) -> tuple[bool, str]:
    rng = random.Random(20261015)
    failures = []

    for _ in range(cases):
        n = rng.randint(1, 8)
        a, b, c = (_random_series(rng, n) for _ in range(3))
        if not ((a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c and a + b == b + a):
            failures.append("ring axioms")
            break

    for _ in range(cases):
        weight = rng.choice(range(0, 40, 2))
        k = modforms.dim_modular(weight)
        prec = k + rng.randint(1, 6)
        f, g = _random_series(rng, prec), _random_series(rng, prec)
        basis = modforms.miller_basis(weight, prec)
        h = QSeries([rng.randint(-20, 20) for _ in range(prec)])
        for fi in basis.forms:
            h = h + fi * rng.randint(-5, 5)
        if (tgroup.reduce(f + g, weight) != tgroup.reduce(f, weight) + tgroup.reduce(g, weight)
                or tgroup.reduce(f + h, weight) != tgroup.reduce(f, weight)):
            failures.append("reduce homomorphism / invariance")
            break

    for _ in range(cases):
        m = rng.randint(1, 5)
        x, y = _random_rel(rng, m), _random_rel(rng, m)
        s = rng.randint(-3, 3)
        combo = invariants.RelCharNumbers(m, {lam: x.get(lam) + s * y.get(lam) for lam in partitions(m - 1)})
        lhs = invariants.b_geom_series(combo, 6)
        rhs = invariants.b_geom_series(x, 6) + invariants.b_geom_series(y, 6) * s
        if lhs != rhs:
            failures.append("b_geom linearity")
            break

    for _ in range(cases):
        w = rng.randint(1, 6)
        P = GradedPPoly({lam: Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                         for lam in partitions(w) if rng.random() < 0.6}, w, 1)
        back = genera.from_powersum_basis(genera.to_powersum_basis(P), w, 1)
        if back != P:
            failures.append("Newton round trip")
            break

    for _ in range(cases):
        phi = [Fraction(1)] + [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)]
        psi = [Fraction(1)] + [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)]
        prod = (QSeries(phi) * QSeries(psi)).coeffs
        K = genera.multiplicative_sequence
        if K(prod, 4) != K(phi, 4) * K(psi, 4):
            failures.append("multiplicativity")
            break

    return not failures, "%d cases per suite" % cases if not failures else "failed: " + ", ".join(failures)


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "Eisenstein series G2", check_eisenstein),
    (2, "Delta cross-construction", check_delta),
    (3, "Tate curve identities", check_tate),
    (4, "integral echelon basis", check_miller),
    (5, "order of [Delta^k / a]", check_delta_power_orders),
    (6, "generator class b_geom(g) = [1/24]", check_generator),
    (7, "localization at 2", check_localization_2),
    (8, "localization at 3", check_localization_3),
    (9, "nu*Delta detector coefficients", check_nu_delta),
    (10, "A-hat specialization at q = 0", check_ahat),
    (11, "three-manifold examples", check_three_manifolds),
    (12, "MSpin table", check_mspin),
    (13, "property suites", check_properties),
]


def run_all() -> list[CheckResult]:
    results = []
    for number, title, fn in CRITERIA:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed criterion, not a crashed run
            ok, detail = False, "%s: %s" % (type(exc).__name__, exc)
        results.append(CheckResult(number, title, bool(ok), detail))
    return results
