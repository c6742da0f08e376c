"""Exact integer sequences and the squared-binomial polynomial."""

from fractions import Fraction
from math import comb

from congforge.padic import res_from_int
from congforge.sequences import (
    catalan,
    central_binom_exact,
    franel,
    g_poly,
    g_seq,
    h_seq,
    poly_eval_mod,
)


def test_initial_values():
    assert [central_binom_exact(n) for n in range(6)] == [1, 2, 6, 20, 70, 252]
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [franel(n) for n in range(5)] == [1, 2, 10, 56, 346]
    assert [g_seq(n) for n in range(5)] == [1, 3, 15, 93, 639]
    assert [h_seq(n) for n in range(5)] == [1, 2, 7, 33, 183]


def test_definitions_to_n_100():
    for n in range(101):
        cb = comb(2 * n, n)
        assert central_binom_exact(n) == cb
        assert catalan(n) * (n + 1) == cb  # integrality of C_n
        assert g_seq(n) == sum(comb(n, k) ** 2 * comb(2 * k, k) for k in range(n + 1))
        assert h_seq(n) == sum(
            comb(n, k) ** 2 * comb(2 * k, k) // (k + 1) for k in range(n + 1)
        )


def test_g_poly_interpolates_sequences():
    for n in range(40):
        poly = g_poly(n)
        assert poly.degree == n
        assert poly.eval_exact(1) == g_seq(n)
        assert poly.eval_exact(0) == 1
        # alternating evaluation stays an integer
        assert isinstance(poly.eval_exact(-1), int)


def test_poly_eval_mod_matches_exact():
    p, m = 13, 3
    for n in range(20):
        poly = g_poly(n)
        for x in (0, 1, 2, 5, p**m - 1):
            r = poly_eval_mod(poly, res_from_int(p, m, x))
            assert r.value == poly.eval_exact(x) % p**m


def test_integral_01():
    assert g_poly(0).integral_01() == 1
    assert g_poly(1).integral_01() == Fraction(1) + Fraction(2, 2)
    for n in range(10):
        want = sum(
            Fraction(comb(n, k) ** 2 * comb(2 * k, k), k + 1) for k in range(n + 1)
        )
        assert g_poly(n).integral_01() == want
