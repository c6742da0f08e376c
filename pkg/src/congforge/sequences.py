"""Exact big-integer sequences: central binomials, Catalan, Franel, and the
squared-binomial transforms g_n, h_n together with the polynomial g_n(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .padic import Residue


def central_binom_exact(n: int) -> int:
    return comb(2 * n, n)


def catalan(n: int) -> int:
    c = comb(2 * n, n) // (n + 1)
    assert c == comb(2 * n, n) - comb(2 * n, n + 1)
    return c


def franel(n: int) -> int:
    return sum(comb(n, k) ** 3 for k in range(n + 1))


def g_seq(n: int) -> int:
    return sum(comb(n, k) ** 2 * comb(2 * k, k) for k in range(n + 1))


def h_seq(n: int) -> int:
    return sum(comb(n, k) ** 2 * catalan(k) for k in range(n + 1))


@dataclass(frozen=True)
class SeqPoly:
    """Integer polynomial sum_k binom(n,k)^2 binom(2k,k) x^k."""

    degree: int
    coeffs: tuple  # c_0 .. c_n

    def eval_exact(self, x) -> "Fraction | int":
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def integral_01(self) -> Fraction:
        """Integral over [0, 1]: sum c_k / (k+1)."""
        return sum(Fraction(c, k + 1) for k, c in enumerate(self.coeffs))


def g_poly(n: int) -> SeqPoly:
    return SeqPoly(n, tuple(comb(n, k) ** 2 * comb(2 * k, k) for k in range(n + 1)))


def poly_eval_mod(poly: SeqPoly, x: Residue) -> Residue:
    """Horner evaluation of the polynomial at a residue point."""
    mod = x.modulus
    acc = 0
    for c in reversed(poly.coeffs):
        acc = (acc * x.value + c) % mod
    return Residue(x.p, x.m, acc)
