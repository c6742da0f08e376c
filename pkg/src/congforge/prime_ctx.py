"""Prime enumeration and per-prime precomputed tables.

A :class:`PrimeCtx` carries, for one prime p at a chosen working precision,
the inverse table for 1..2p, harmonic numbers H_n and H_n^(2) up to index
2p-2, and the central binomial / Catalan columns up to index p-1.  Harmonic
values are p-adic rationals because H_{2k} picks up a 1/p term once 2k
exceeds p; the central binomials are built incrementally so the single
factor of p entering at k = (p+1)/2 is tracked as an exact valuation.
"""

from __future__ import annotations

from .errors import ConfigurationError, InsufficientPrecision
from .padic import MAX_MODULUS, PadicRat, Residue, padic_from_ratio, padic_shift


def sieve_primes(lo: int, hi: int) -> list[int]:
    """Primes q with max(lo, 4) < q <= hi, ascending."""
    if hi < lo or lo < 0:
        raise ValueError(f"invalid range ({lo}, {hi}]")
    if hi < 5:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, int(hi**0.5) + 1):
        if sieve[q]:
            sieve[q * q :: q] = b"\x00" * len(sieve[q * q :: q])
    start = max(lo, 4) + 1
    return [q for q in range(start, hi + 1) if sieve[q]]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeCtx:
    """Immutable per-prime tables; safe to share read-only between workers."""

    __slots__ = ("p", "work", "inv", "H1", "H2", "cbc", "cat", "_cache")

    def __init__(self, p, work, inv, H1, H2, cbc, cat):
        self.p = p
        self.work = work
        self.inv = inv  # list of ints mod p**work; None at multiples of p
        self.H1 = H1
        self.H2 = H2
        self.cbc = cbc
        self.cat = cat
        self._cache = {}

    def inverse(self, i: int) -> Residue:
        """Inverse of i modulo p**work, for 1 <= i <= 2p coprime to p."""
        u = self.inv[i]
        if u is None:
            raise ValueError(f"{i} is divisible by {self.p}")
        return Residue(self.p, self.work, u)

    def one(self) -> PadicRat:
        return padic_from_ratio(self.p, self.work, 1, 1)


def build_ctx(p: int, work: int = 5) -> PrimeCtx:
    """Fill every table for the prime p at the given working precision."""
    if p <= 3 or not is_prime(p):
        raise ConfigurationError(f"{p} is not a prime > 3")
    if not 1 <= work <= 8:
        raise ConfigurationError(f"working precision must lie in 1..8, got {work}")
    P = p**work
    if P >= MAX_MODULUS:
        raise ConfigurationError(f"{p}**{work} exceeds the supported modulus width")

    inv: list = [None] * (2 * p + 1)
    inv[1] = 1
    for i in range(2, 2 * p + 1):
        if i % p == 0:
            continue
        # i = (P // i) * i + P % i  =>  inv[i] = -(P // i) * inv[P % i], but
        # P % i may share a factor with p; a direct pow is simple and cheap.
        inv[i] = pow(i, -1, P)

    H1 = [PadicRat.exact_zero(p)]
    H2 = [PadicRat.exact_zero(p)]
    for n in range(1, 2 * p - 1):
        H1.append(H1[-1] + padic_from_ratio(p, work, 1, n))
        H2.append(H2[-1] + padic_from_ratio(p, work, 1, n * n))

    cbc = [padic_from_ratio(p, work, 1, 1)]
    for k in range(p - 1):
        # binom(2k+2, k+1) = binom(2k, k) * 2(2k+1)/(k+1); the factor 2k+1
        # contributes valuation exactly 1 at k = (p-1)/2.
        cbc.append(cbc[-1] * padic_from_ratio(p, work, 2 * (2 * k + 1), k + 1))
    cat = [cbc[k] * padic_from_ratio(p, work, 1, k + 1) for k in range(p)]

    return PrimeCtx(p, work, inv, H1, H2, cbc, cat)


def harmonic(ctx: PrimeCtx, n: int, order: int = 1) -> PadicRat:
    """Table lookup for H_n (order 1) or H_n^(2) (order 2), 0 <= n <= 2p-2."""
    if not 0 <= n <= 2 * ctx.p - 2:
        raise IndexError(f"harmonic index {n} outside 0..{2 * ctx.p - 2}")
    if order == 1:
        return ctx.H1[n]
    if order == 2:
        return ctx.H2[n]
    raise ValueError(f"order must be 1 or 2, got {order}")


def fermat_style_quotient(ctx: PrimeCtx) -> PadicRat:
    """H_{p-1}/p; p-integral with valuation >= 1 by Wolstenholme's theorem."""
    if ctx.work < 2:
        raise InsufficientPrecision("quotient needs at least two working digits")
    return padic_shift(ctx.H1[ctx.p - 1], -1)
