"""Special values modulo p: Bernoulli numbers, B_{p-2}(1/3), Euler numbers,
and the quadratic characters (p/3) and (-1/p).

Bernoulli numbers are recovered from power sums accumulated modulo p^2,
which avoids factorials and series inversion.  B_{p-2}(1/3) is evaluated
through the second-order harmonic shortcut -2 H^(2)_{t-1} with t = 3^{-1}
mod p; a direct binomial-expansion evaluator is kept alongside as a
cross-check for small primes.  E_{p-3} uses the classical O(p^2)
recurrence and is therefore optional for large sweeps.
"""

from __future__ import annotations

from .errors import UnsupportedIndex
from .padic import Residue


def legendre_p3(p: int) -> int:
    """(p/3): +1 when p = 1 (mod 3), -1 when p = 2 (mod 3)."""
    return 1 if p % 3 == 1 else -1


def legendre_m1(p: int) -> int:
    """(-1/p): +1 when p = 1 (mod 4), -1 when p = 3 (mod 4)."""
    return 1 if p % 4 == 1 else -1


def bernoulli_mod_p(p: int, n: int) -> Residue:
    """B_n mod p for n = 0 or even n with 2 <= n <= p-3.

    Uses S_n(p) = sum_{j=1}^{p-1} j^n = p*B_n (mod p^2) for even n in range,
    so a single pass of modular powers suffices.
    """
    if n == 0:
        return Residue(p, 1, 1)
    if n % 2 != 0 or not 2 <= n <= p - 3:
        raise UnsupportedIndex(f"B_{n} mod {p} unsupported (need even n <= p-3)")
    p2 = p * p
    s = 0
    for j in range(1, p):
        s += pow(j, n, p2)
    s %= p2
    assert s % p == 0, "power sum must be divisible by p for even n <= p-3"
    return Residue(p, 1, s // p % p)


def bernoulli_third(p: int) -> Residue:
    """B_{p-2}(1/3) mod p via -2 * H^(2)_{t-1} with t = 3^{-1} mod p."""
    t = pow(3, -1, p)
    s = 0
    for j in range(1, t):
        s += pow(j, p - 3, p)  # j^(p-3) = j^(-2) mod p
    return Residue(p, 1, (-2 * s) % p)


def bernoulli_third_direct(p: int) -> Residue:
    """B_{p-2}(1/3) mod p by expanding the Bernoulli polynomial at 3^{-1}.

    O(p^2 log p); exists as an independent cross-check of
    :func:`bernoulli_third` on desk-scale primes.
    """
    t = pow(3, -1, p)
    n = p - 2
    # binomial row binom(n, i) mod p, built incrementally
    binom = 1
    acc = 0
    for i in range(0, n + 1):
        if i == 1:
            b_i = (-pow(2, -1, p)) % p  # B_1 = -1/2
        elif i % 2 == 1 or i > p - 3:
            b_i = 0  # odd-index Bernoulli numbers vanish; B_{p-2} (odd) too
        else:
            b_i = bernoulli_mod_p(p, i).value
        if b_i:
            acc = (acc + binom * b_i % p * pow(t, n - i, p)) % p
        binom = binom * (n - i) % p * pow(i + 1, -1, p) % p
    return Residue(p, 1, acc)


def euler_mod_p(p: int) -> Residue:
    """E_{p-3} mod p via sum_{j<=k} binom(2k, 2j) E_{2j} = 0."""
    m = (p - 3) // 2  # E_{2m} wanted
    inv = [0, 1] + [0] * (p - 2)
    for i in range(2, p):
        inv[i] = (p - p // i) * inv[p % i] % p
    e = [1] + [0] * m
    for k in range(1, m + 1):
        # binom(2k, 2j) mod p for j = 0..k, built from the full row
        acc = 0
        b = 1  # binom(2k, 0)
        for i in range(0, 2 * k):
            if i % 2 == 0:
                acc += b * e[i // 2]
            b = b * (2 * k - i) % p * inv[i + 1] % p
        e[k] = (-acc) % p
    return Residue(p, 1, e[m])


class SpecialValues:
    """Bundle of the special values needed by the congruence registry."""

    __slots__ = ("p", "chi3", "chi4", "bern_third", "euler_pm3", "_bern")

    def __init__(self, p: int, with_euler: bool = True):
        self.p = p
        self.chi3 = legendre_p3(p)
        self.chi4 = legendre_m1(p)
        self.bern_third = bernoulli_third(p)
        self.euler_pm3 = euler_mod_p(p) if with_euler else None
        self._bern: dict[int, Residue] = {}

    def bern(self, n: int) -> Residue:
        if n not in self._bern:
            self._bern[n] = bernoulli_mod_p(self.p, n)
        return self._bern[n]


def build_specials(p: int, with_euler: bool = True) -> SpecialValues:
    return SpecialValues(p, with_euler=with_euler)
