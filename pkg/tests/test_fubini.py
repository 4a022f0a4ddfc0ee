import random
from fractions import Fraction

import pytest

from fubinipoly.combinat import harmonic, sf
from fubinipoly.exactpoly import Polynomial
from fubinipoly.fubini import (
    fubini_direct,
    fubini_rec,
    hfubini_direct,
    hfubini_rec,
    lambda_poly,
    power_sum_gn,
    power_sum_poly,
    psi_poly,
    remainder_R,
)

MINUS_HALF = Fraction(-1, 2)


# --- the plain family -------------------------------------------------------

def test_fubini_direct_small():
    assert fubini_direct(1) == Polynomial([0, 1])
    assert fubini_direct(2) == Polynomial([0, 1, 2])
    assert fubini_direct(3) == Polynomial([0, 1, 6, 6])


def test_fubini_rec_small():
    assert fubini_rec(2) == Polynomial([0, 1, 2])


def test_fubini_rec_equals_direct():
    for n in range(1, 65):
        assert fubini_rec(n) == fubini_direct(n)


def test_fubini_value_at_minus_one():
    for n in range(1, 40):
        assert fubini_direct(n)(-1) == (-1) ** n


def test_fubini_rejects_zero():
    with pytest.raises(ValueError):
        fubini_direct(0)
    with pytest.raises(ValueError):
        fubini_rec(0)


# --- the harmonic-weighted family --------------------------------------------

def test_hfubini_direct_small():
    assert hfubini_direct(1) == Polynomial([0, 1])
    assert hfubini_direct(2) == Polynomial([0, 1, 3])


def test_hfubini_rec_small():
    assert hfubini_rec(2) == Polynomial([0, 1, 3])


def test_hfubini_rec_equals_direct():
    for n in range(1, 65):
        assert hfubini_rec(n) == hfubini_direct(n)


def test_hfubini_value_at_minus_one():
    for n in range(1, 40):
        assert hfubini_direct(n)(-1) == (-1) ** n * n


def test_hfubini_4_matches_reexpanded_connection_row():
    # Fhat_4 = F_4 + 3x F_3 + 3(x^2+x) F_2 + (2x^3+3x^2+x) F_1, expanded by hand
    expected = (fubini_direct(4)
                + Polynomial([0, 3]) * fubini_direct(3)
                + Polynomial([0, 3, 3]) * fubini_direct(2)
                + Polynomial([0, 1, 3, 2]) * fubini_direct(1))
    assert hfubini_rec(4) == expected
    assert expected == Polynomial([0, 1, 21, 66, 50])


def test_hfubini_rejects_zero():
    with pytest.raises(ValueError):
        hfubini_direct(0)
    with pytest.raises(ValueError):
        hfubini_rec(0)


# --- connection polynomials ----------------------------------------------------

GOLDEN_ROWS = {
    1: [(1,)],
    2: [(0, 1), (1,)],
    3: [(0, 1, 1), (0, 2), (1,)],
    4: [(0, 1, 3, 2), (0, 3, 3), (0, 3), (1,)],
}


def test_lambda_golden_rows():
    for n, rows in GOLDEN_ROWS.items():
        for nu, coeffs in enumerate(rows, start=1):
            assert lambda_poly(n, nu) == Polynomial(coeffs)


def test_lambda_top_entries():
    for n in range(1, 31):
        assert lambda_poly(n, n) == Polynomial.one()
        if n >= 2:
            assert lambda_poly(n, n - 1) == Polynomial([0, n - 1])


def test_lambda_degree_and_coefficients():
    for n in range(1, 31):
        for nu in range(1, n + 1):
            lam = lambda_poly(n, nu)
            assert lam.degree == n - nu
            assert lam.has_nonneg_int_coeffs()


def test_lambda_out_of_range_is_zero():
    assert lambda_poly(3, 0).is_zero()
    assert lambda_poly(3, 4).is_zero()
    with pytest.raises(ValueError):
        lambda_poly(0, 1)


def test_lambda_expansion_reconstructs_hfubini():
    for n in range(1, 33):
        total = Polynomial.zero()
        for nu in range(1, n + 1):
            total = total + lambda_poly(n, nu) * fubini_direct(nu)
        assert total == hfubini_direct(n)


def test_lambda_reflection_membership():
    for n in range(3, 25):
        for nu in range(1, n - 1):
            assert lambda_poly(n, nu).in_reflection_class(MINUS_HALF)


# --- psi ------------------------------------------------------------------------

def test_psi_small():
    assert psi_poly(1).is_zero()
    # recompute psi_2 straight from the definition
    expected = Polynomial([0] + [sf(2, v) * ((v - 1) * harmonic(v) + 1) for v in (1, 2)])
    assert psi_poly(2) == expected
    assert expected == Polynomial([0, 1, 5])
    assert psi_poly(2)(MINUS_HALF) == Fraction(3, 4)


def test_psi_vanishes_at_center_for_odd_n():
    for n in range(1, 40, 2):
        assert psi_poly(n)(MINUS_HALF) == 0


def test_psi_rejects_zero():
    with pytest.raises(ValueError):
        psi_poly(0)


# --- remainder ---------------------------------------------------------------------

def test_remainder_base_and_unrolled():
    assert remainder_R(2).is_zero()
    expected = lambda_poly(4, 1) * fubini_direct(1) + lambda_poly(4, 2) * fubini_direct(2)
    assert remainder_R(4) == expected


def test_remainder_vanishes_at_center_for_even_n():
    for n in range(2, 33, 2):
        assert remainder_R(n)(MINUS_HALF) == 0


def test_remainder_rejects_small_n():
    with pytest.raises(ValueError):
        remainder_R(1)


# --- power sums -----------------------------------------------------------------------

def test_power_sum_poly_small():
    assert power_sum_poly(0) == Polynomial([0, 1])
    assert power_sum_poly(1) == Polynomial([0, Fraction(-1, 2), Fraction(1, 2)])


def test_power_sum_poly_shape():
    for n in range(0, 13):
        p = power_sum_poly(n)
        assert p.degree == n + 1
        assert p.coefficient(0) == 0


def test_power_sum_poly_against_brute_force():
    for n in range(0, 9):
        p = power_sum_poly(n)
        for m in range(0, 11):
            assert p(m) == sum(v ** n for v in range(m)), (n, m)


def test_power_sum_gn_values():
    for n in range(0, 9):
        assert power_sum_gn(n, 0) == 0
    assert power_sum_gn(2, 4) == 14  # 0 + 1 + 4 + 9


def test_power_sum_routes_agree_at_random_rationals():
    rng = random.Random(23)
    for n in range(0, 13):
        p = power_sum_poly(n)
        for _ in range(20):
            x = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
            assert p(x) == power_sum_gn(n, x)
