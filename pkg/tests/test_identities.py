"""Exact combinatorial identity checkers."""

from fractions import Fraction
from math import comb

import pytest

from congforge.identities import (
    check_alternating,
    check_chu_vandermonde,
    check_hockey,
    check_weighted_binomial,
    check_harmonic_rearrangement,
    check_square_identity,
    check_squared_harmonic,
    gbinom,
)


def test_gbinom_negative_upper():
    assert gbinom(-1, 3) == -1
    assert gbinom(-2, 2) == 3
    assert gbinom(-3, 0) == 1
    assert gbinom(5, 2) == comb(5, 2)
    assert gbinom(5, -1) == 0
    # Pascal's rule holds for every integer upper argument
    for z in range(-10, 11):
        for k in range(0, 8):
            assert gbinom(z, k) + gbinom(z, k + 1) == gbinom(z + 1, k + 1)


@pytest.mark.parametrize("n", range(0, 26))
def test_chu_vandermonde(n):
    for x, y in [(0, 0), (3, 4), (-2, 7), (-5, -6), (25, -25), (-50, 50)]:
        assert check_chu_vandermonde(n, x, y).ok


@pytest.mark.parametrize("n", range(0, 30))
def test_squared_harmonic(n):
    assert check_squared_harmonic(n).ok


@pytest.mark.parametrize("n", range(0, 30))
def test_alternating(n):
    assert check_alternating(n).ok


def test_hockey():
    for n in range(0, 20):
        for m in range(0, 5):
            for x in (-7, -1, 0, 2, 13):
                assert check_hockey(n, m, x).ok


@pytest.mark.parametrize("n", range(0, 12))
def test_square_identity_over_degree_many_points(n):
    # degree 2n in x, so 2n+1 agreeing points certify the identity
    for x in range(-n, n + 1):
        assert check_square_identity(n, x).ok


@pytest.mark.parametrize("n", range(0, 12))
def test_weighted_binomial_over_degree_many_points(n):
    # degree 2n+1 in x, so 2n+2 agreeing points certify the identity;
    # the checker also certifies G(x+1) - G(x) = binom(x,n)^2 at each point
    for x in range(-n - 1, n + 1):
        assert check_weighted_binomial(n, x).ok


@pytest.mark.parametrize("N", range(2, 25))
def test_rearrangement(N):
    assert check_harmonic_rearrangement(N).ok


def test_rearrangement_rejects_tiny_range():
    with pytest.raises(ValueError):
        check_harmonic_rearrangement(1)


def test_result_payload():
    r = check_squared_harmonic(3)
    assert r.identity == "squared_harmonic" and r.params == (3,)
    assert r.lhs == r.rhs == Fraction(comb(6, 3)) * (
        2 * Fraction(11, 6) - Fraction(49, 20)
    )
