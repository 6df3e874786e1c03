from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from stringgenus.errors import InsufficientPrecision, InvalidWeight
from stringgenus.modforms import (
    WeierstrassCoefficients,
    delta,
    delta_from_eisenstein,
    delta_product,
    dim_modular,
    eisenstein_normalized,
    is_modular,
    miller_basis,
    tate_curve,
    weierstrass_invariants,
)
from stringgenus.qseries import QSeries


def _pentagonal_delta(prec):
    # prod (1 - q^n) by Euler's pentagonal number theorem, then q * (that)^24
    eta = [0] * prec
    for k in range(-prec, prec + 1):
        e = k * (3 * k - 1) // 2
        if 0 <= e < prec:
            eta[e] += (-1) ** (k % 2)
    out = [1] + [0] * (prec - 1)
    for _ in range(24):
        out = [sum(out[i] * eta[n - i] for i in range(n + 1)) for n in range(prec)]
    return [0] + out[: prec - 1]


def test_dim_modular_values():
    assert [dim_modular(w) for w in range(0, 28, 2)] == [1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2]
    with pytest.raises(InvalidWeight):
        dim_modular(7)


@pytest.mark.parametrize("w", range(0, 100, 2))
def test_dim_modular_classical_formula(w):
    k = w // 2
    expected = 0 if k == 1 else (k // 6 if k % 6 == 1 else k // 6 + 1)
    assert dim_modular(w) == expected


def test_delta_small():
    assert delta(2) == QSeries([0, 1])
    assert delta(3) == QSeries([0, 1, -24])
    assert delta(5) == QSeries([0, 1, -24, 252, -1472])
    with pytest.raises(ValueError):
        delta(1)


def test_delta_against_pentagonal_expansion():
    assert list(delta_product(50).coeffs) == _pentagonal_delta(50)
    assert delta_product(40) == delta_from_eisenstein(40)


def test_eisenstein_normalized():
    assert eisenstein_normalized(4, 2) == QSeries([1, 240])
    assert eisenstein_normalized(6, 2) == QSeries([1, -504])
    assert eisenstein_normalized(14, 2) == QSeries([1, -24])
    with pytest.raises(InvalidWeight):
        eisenstein_normalized(2, 3)


def test_known_bases():
    assert miller_basis(0, 3).forms == (QSeries([1, 0, 0]),)
    assert miller_basis(2, 5).forms == ()
    b12 = miller_basis(12, 4)
    assert b12.forms[0][:2] == (1, 0) and b12.forms[1] == delta(4)
    # weight 12: E4^3 - 720 Delta, the theta series of the Leech lattice
    assert b12.forms[0] == eisenstein_normalized(4, 4) ** 3 - delta(4) * 720
    assert b12.forms[0] == QSeries([1, 0, 196560, 16773120])


@pytest.mark.parametrize("w", range(0, 52, 2))
def test_basis_is_integral_echelon(w):
    b = miller_basis(w, dim_modular(w) + 6)
    assert b.k == len(b.forms) == dim_modular(w)
    for j, f in enumerate(b.forms):
        assert f.is_integral
        assert [f[i] for i in range(b.k)] == [int(i == j) for i in range(b.k)]
        assert is_modular(f, w)


def test_basis_precision_check():
    with pytest.raises(InsufficientPrecision):
        miller_basis(24, 2)


@given(st.integers(0, 20).map(lambda n: 2 * n), st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_is_modular_spans(w, cs):
    b = miller_basis(w, dim_modular(w) + 5)
    f = QSeries.zero(b.prec)
    for c, g in zip(cs, b.forms):
        f = f + g * c
    assert is_modular(f, w)
    assert not is_modular(f + QSeries.monomial(b.prec - 1, b.prec), w)


def test_tate_identities():
    w = tate_curve(30)
    c4, c6, disc = weierstrass_invariants(w)
    assert c4 == eisenstein_normalized(4, 30)
    assert c6 == -eisenstein_normalized(6, 30)
    assert disc == delta(30)
    assert (w.a1, w.a2, w.a3) == (QSeries.one(30), QSeries.zero(30), QSeries.zero(30))


def test_tate_coefficients_direct():
    w = tate_curve(12)
    for n in range(1, 12):
        divs = [d for d in range(1, n + 1) if n % d == 0]
        assert w.a4[n] == -5 * sum(d**3 for d in divs)
        assert w.a6[n] == -Fraction(sum(7 * d**5 + 5 * d**3 for d in divs), 12)
    assert w.a4.is_integral and w.a6.is_integral


def test_weierstrass_requires_shared_precision():
    with pytest.raises(ValueError):
        WeierstrassCoefficients(QSeries.one(3), QSeries.zero(3), QSeries.zero(3), QSeries.zero(2), QSeries.zero(3))
