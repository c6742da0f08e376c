"""Exact big-integer/rational oracle for every registry entry.

Everything here is computed with `fractions.Fraction` and `math.comb`,
with no modular arithmetic, so it is independent of the p-adic evaluation
path it is used to check.  A size guard keeps it to desk-scale primes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import OracleSizeError
from .sequences import g_poly, g_seq, h_seq
from .special import legendre_m1, legendre_p3

MAX_ORACLE_PRIME = 100


def _guard(p: int) -> None:
    if p > MAX_ORACLE_PRIME:
        raise OracleSizeError(f"oracle limited to primes <= {MAX_ORACLE_PRIME}, got {p}")


@lru_cache(maxsize=None)
def exact_bernoulli(nmax: int) -> tuple:
    """B_0..B_nmax as exact fractions, by the classical recurrence."""
    b = [Fraction(1)]
    for n in range(1, nmax + 1):
        s = sum(comb(n + 1, j) * b[j] for j in range(n))
        b.append(Fraction(-s, n + 1))
    return tuple(b)


@lru_cache(maxsize=None)
def exact_euler(m: int) -> tuple:
    """E_0, E_2, ..., E_{2m} as exact integers."""
    e = [1]
    for k in range(1, m + 1):
        e.append(-sum(comb(2 * k, 2 * j) * e[j] for j in range(k)))
    return tuple(e)


@lru_cache(maxsize=None)
def exact_bernoulli_poly_third(p: int) -> Fraction:
    """B_{p-2}(1/3) as an exact fraction."""
    n = p - 2
    b = exact_bernoulli(n)
    x = Fraction(1, 3)
    return sum(comb(n, i) * b[i] * x ** (n - i) for i in range(n + 1))


@lru_cache(maxsize=None)
def _H(p: int) -> tuple:
    h = [Fraction(0)]
    for k in range(1, 2 * p):
        h.append(h[-1] + Fraction(1, k))
    return tuple(h)


@lru_cache(maxsize=None)
def _H2(p: int) -> tuple:
    h = [Fraction(0)]
    for k in range(1, 2 * p):
        h.append(h[-1] + Fraction(1, k * k))
    return tuple(h)


def _cb(k: int) -> int:
    return comb(2 * k, k)


def exact_sides(p: int, entry_id: str):
    """Exact (lhs, rhs) fractions for a scalar registry entry."""
    _guard(p)
    H, H2 = _H(p), _H2(p)
    chi3, chi4 = legendre_p3(p), legendre_m1(p)
    half = (p - 1) // 2
    B = exact_bernoulli(p - 2)
    B3 = exact_bernoulli_poly_third(p)

    def S(f, upper=p - 1):
        return sum((f(k) for k in range(1, upper + 1)), Fraction(0))

    if entry_id == "W.HARM1":
        return H[p - 1], Fraction(0)
    if entry_id == "W.HARM2":
        return H2[p - 1], Fraction(0)
    if entry_id == "W.CBC":
        return Fraction(comb(2 * p - 1, p - 1)), Fraction(1)
    if entry_id == "ST10":
        return S(lambda k: Fraction(_cb(k), k)), Fraction(8, 9) * p * p * B[p - 3]
    if entry_id == "S11B.HALF":
        e = exact_euler((p - 3) // 2)[-1]
        return S(lambda k: Fraction(_cb(k), k), half), Fraction(-chi4 * 8, 3) * p * e
    if entry_id == "T1.1":
        return S(lambda k: Fraction(_cb(k), k) * H[k]), Fraction(chi3, 3) * B3
    if entry_id == "T1.2":
        return S(lambda k: Fraction(_cb(k), k) * H[2 * k]), Fraction(7 * chi3, 12) * B3
    if entry_id == "COR1.3":
        lhs = S(lambda k: Fraction(_cb(k), k) * (4 * H[2 * k] - 7 * H[k]))
        return lhs, Fraction(0)
    if entry_id == "CONJ1":
        lhs = S(lambda k: Fraction(_cb(k), k) * (4 * H[2 * k] - 7 * H[k]))
        rhs = Fraction(-14) * H[p - 1] / p + Fraction(278, 15) * p**3 * B[p - 5]
        return lhs, rhs
    if entry_id == "P2.E":
        return p * H[2 * p - 1], 1 - 2 * p * p * H2[p - 1]
    if entry_id == "C2.5":
        lhs = S(lambda k: Fraction(_cb(k), k) * H[2 * k])
        rhs = Fraction(5, 2) * S(lambda k: Fraction(_cb(k), k) * H[k]) - Fraction(
            1, 2
        ) * S(lambda k: Fraction(_cb(k), k * k))
        return lhs, rhs
    if entry_id == "C2.6":
        lhs = (
            -p * S(lambda k: Fraction(_cb(k), k) * (1 - p * H[k] + Fraction(p, k)))
            - comb(2 * p, p)
            + 1
        )
        rhs = -1 + p * S(
            lambda k: Fraction(1 - p * (H[2 * k] - Fraction(1, 2 * k)), 2 * k) * _cb(k),
            half,
        )
        return lhs, rhs
    if entry_id == "C2.7":
        return S(lambda k: Fraction(_cb(k), k)), Fraction(0)
    if entry_id == "C2.8":
        lhs = S(lambda k: Fraction(_cb(k), k) * H[k])
        rhs = (
            Fraction(1, 2 * p) * S(lambda k: Fraction(_cb(k), k), half)
            - Fraction(1, 2) * S(lambda k: Fraction(_cb(k), k) * H[2 * k], half)
            + Fraction(5, 4) * S(lambda k: Fraction(_cb(k), k * k), half)
        )
        return lhs, rhs
    if entry_id == "C2.9":
        lhs = S(lambda k: Fraction(_cb(k), k) * H[k])
        rhs = Fraction(5, 4) * S(lambda k: Fraction(_cb(k), k * k)) - Fraction(
            1, 2
        ) * S(lambda k: Fraction(_cb(k), k) * H[2 * k])
        return lhs, rhs
    if entry_id == "C2.10":
        return S(lambda k: Fraction(_cb(k), k * k)), Fraction(chi3, 2) * B3
    if entry_id == "C2.HALFEQ":
        return (
            S(lambda k: Fraction(_cb(k), k * k)),
            S(lambda k: Fraction(_cb(k), k * k), half),
        )
    if entry_id == "R2.1a":
        lhs = Fraction(-1, p) * S(lambda k: Fraction(_cb(k), k), half)
        rhs = S(lambda k: Fraction(2, k * k * _cb(k)), half)
        return lhs, rhs
    if entry_id == "R2.1b":
        e = exact_euler((p - 3) // 2)[-1]
        lhs = S(lambda k: Fraction(2, k * k * _cb(k)), half)
        return lhs, Fraction(chi4 * 8, 3) * e
    if entry_id == "T1.6a":
        return S(lambda k: Fraction(g_seq(k))) / p**2, Fraction(5 * chi3, 8) * B3
    if entry_id == "T1.6b":
        return S(lambda k: g_seq(k) * H2[k]), Fraction(5 * chi3, 8) * B3
    if entry_id == "T1.7a":
        return S(lambda k: Fraction(h_seq(k))), Fraction(3 * chi3, 4) * p * p * B3
    if entry_id == "T1.7b":
        return S(lambda k: h_seq(k) * H2[k]), Fraction(3 * chi3, 4) * B3
    if entry_id == "C3.7":
        lhs = S(lambda k: Fraction(g_seq(k)))
        rhs = p * p * S(lambda k: g_seq(k) * H2[k]) + Fraction(7, 6) * p**3 * B[p - 3]
        return lhs, rhs
    if entry_id == "C3.H":
        lhs = sum((h_seq(k) * (1 - p * p * H2[k]) for k in range(p)), Fraction(0))
        return lhs, Fraction(1)
    raise KeyError(f"no scalar oracle for entry {entry_id!r}")


def exact_sides_indexed(p: int, entry_id: str):
    """Exact (index, lhs, rhs) triples for a quantified registry entry."""
    _guard(p)
    H, H2 = _H(p), _H2(p)
    if entry_id == "P2.A":
        return [
            (
                k,
                Fraction(comb(p, k)),
                Fraction((-1) ** (k - 1) * p, k) * (1 - p * H[k - 1]),
            )
            for k in range(1, p)
        ]
    if entry_id == "P2.B":
        return [
            (
                j,
                Fraction(
                    sum(comb(k, j) * comb(k - 1, j - 1) for k in range(j, p))
                ),
                Fraction(comb(2 * p - 2 * j - 1, p - 1 - j)),
            )
            for j in range(1, p)
        ]
    if entry_id == "P2.C":
        return [
            (j, Fraction(j * _cb(j) * _cb(p - j)), Fraction(2 * p))
            for j in range((p + 1) // 2, p)
        ]
    if entry_id == "P2.D":
        return [(k, H[p - k], H[k] - Fraction(1, k)) for k in range(1, p)]
    if entry_id == "P3.F":
        return [
            (j, Fraction(comb(p - 1, j - 1) ** 2), 1 - 2 * p * H[j - 1])
            for j in range(1, p)
        ]
    if entry_id == "C3.8":
        out = []
        polys = [g_poly(k) for k in range(p)]
        for x in (0, 1, 2):
            lhs = sum(
                (polys[k].eval_exact(x) * (1 - p * p * H2[k]) for k in range(p)),
                Fraction(0),
            )
            rhs = sum(
                (
                    Fraction(p, 2 * k + 1) * (1 - 2 * p * p * H2[k]) * x**k
                    for k in range(p)
                ),
                Fraction(0),
            )
            out.append((x, lhs, rhs))
        return out
    raise KeyError(f"no indexed oracle for entry {entry_id!r}")


def brute_force_oracle(p: int, expression: str) -> Fraction:
    """Exact rational value of a named sum, e.g. ``"T1.1 LHS"`` or ``"sum g"``."""
    _guard(p)
    if expression == "sum g":
        return sum((Fraction(g_seq(k)) for k in range(1, p)), Fraction(0))
    if expression == "sum h":
        return sum((Fraction(h_seq(k)) for k in range(1, p)), Fraction(0))
    entry_id, _, side = expression.rpartition(" ")
    if side not in ("LHS", "RHS") or not entry_id:
        raise KeyError(f"unknown oracle expression {expression!r}")
    lhs, rhs = exact_sides(p, entry_id)
    return lhs if side == "LHS" else rhs


def reduce_fraction(fr: Fraction, p: int, m: int) -> int:
    """Canonical residue of a p-integral fraction modulo p**m."""
    mod = p**m
    num, den = fr.numerator, fr.denominator
    v = 0
    while num and num % p == 0:
        num //= p
        v += 1
    if v >= m or num == 0:
        return 0
    return num * p**v % mod * pow(den, -1, mod) % mod
