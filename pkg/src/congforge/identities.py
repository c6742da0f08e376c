"""Exact-arithmetic checkers for the combinatorial identity lemmas.

These are true equalities (not congruences), verified over exact rationals
with generalized binomial coefficients binom(z, k) for integer z of either
sign.  The two polynomial identities are certified by sampling strictly
more integer points than their degree bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


def gbinom(z: int, k: int) -> int:
    """binom(z, k) for any integer z, via the falling-factorial definition."""
    if k < 0:
        return 0
    if z >= 0:
        return comb(z, k)
    return (-1) ** k * comb(k - z - 1, k)


def _harmonic(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


@dataclass(frozen=True)
class IdentityResult:
    identity: str
    params: tuple
    lhs: Fraction
    rhs: Fraction
    ok: bool


def _result(identity, params, lhs, rhs) -> IdentityResult:
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    return IdentityResult(identity, params, lhs, rhs, lhs == rhs)


def check_chu_vandermonde(n: int, x: int, y: int) -> IdentityResult:
    """sum_k binom(x,k) binom(y,n-k) = binom(x+y,n)."""
    lhs = sum(gbinom(x, k) * gbinom(y, n - k) for k in range(n + 1))
    return _result("chu_vandermonde", (n, x, y), lhs, gbinom(x + y, n))


def check_squared_harmonic(n: int) -> IdentityResult:
    """sum_k binom(n,k)^2 H_k = binom(2n,n) (2H_n - H_{2n})."""
    H = [_harmonic(k) for k in range(2 * n + 1)]
    lhs = sum(comb(n, k) ** 2 * H[k] for k in range(n + 1))
    rhs = comb(2 * n, n) * (2 * H[n] - H[2 * n])
    return _result("squared_harmonic", (n,), lhs, rhs)


def check_alternating(n: int) -> IdentityResult:
    """sum_k (-1)^k binom(n,k) binom(2k,k) = (-1)^n sum_k binom(n,2k) binom(2k,k)."""
    lhs = sum((-1) ** k * comb(n, k) * comb(2 * k, k) for k in range(n + 1))
    rhs = (-1) ** n * sum(comb(n, 2 * k) * comb(2 * k, k) for k in range(n // 2 + 1))
    return _result("alternating", (n,), lhs, rhs)


def check_hockey(n: int, m: int, x: int) -> IdentityResult:
    """sum_{k=0}^n binom(x+k,m) = binom(n+x+1,m+1) - binom(x,m+1)."""
    lhs = sum(gbinom(x + k, m) for k in range(n + 1))
    rhs = gbinom(n + x + 1, m + 1) - gbinom(x, m + 1)
    return _result("hockey", (n, m, x), lhs, rhs)


def check_square_identity(n: int, x: int) -> IdentityResult:
    """sum_k binom(n,k)^2 binom(x+k,2n) = binom(x,n)^2 at one sample point."""
    lhs = sum(comb(n, k) ** 2 * gbinom(x + k, 2 * n) for k in range(n + 1))
    return _result("square_identity", (n, x), lhs, gbinom(x, n) ** 2)


def _weighted_binomial_rhs(n: int, x: int) -> Fraction:
    s = sum((2 * x - 3 * k) * gbinom(x, k) ** 2 * comb(2 * k, k) for k in range(n + 1))
    return Fraction(s, (4 * n + 2) * comb(2 * n, n))


def check_weighted_binomial(n: int, x: int) -> IdentityResult:
    """Weighted binomial-sum identity at one sample point, plus its
    forward-difference relation G(x+1) - G(x) = binom(x,n)^2."""
    lhs = sum(comb(n, k) ** 2 * gbinom(x + k, 2 * n + 1) for k in range(n + 1))
    rhs = _weighted_binomial_rhs(n, x)
    res = _result("weighted_binomial", (n, x), lhs, rhs)
    diff_ok = _weighted_binomial_rhs(n, x + 1) - rhs == gbinom(x, n) ** 2
    if not diff_ok:
        return IdentityResult("weighted_binomial", (n, x), res.lhs, res.rhs, False)
    return res


def check_harmonic_rearrangement(N: int) -> IdentityResult:
    """Three-term harmonic rearrangement over the range 1..N-1:
    sum binom(2k,k) H_{2k}/k = 2 sum binom(2k,k) H_k/k
                               - sum_k (1/k) sum_j binom(k,j)^2 H_j."""
    if N < 2:
        raise ValueError("N must be at least 2")
    H = [_harmonic(i) for i in range(2 * N)]
    lhs = sum(Fraction(comb(2 * k, k), k) * H[2 * k] for k in range(1, N))
    inner = sum(
        Fraction(1, k) * sum(comb(k, j) ** 2 * H[j] for j in range(1, k + 1))
        for k in range(1, N)
    )
    rhs = 2 * sum(Fraction(comb(2 * k, k), k) * H[k] for k in range(1, N)) - inner
    return _result("harmonic_rearrangement", (N,), lhs, rhs)
