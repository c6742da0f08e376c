"""Residue and finite-precision p-adic rational arithmetic.

A :class:`PadicRat` stores a nonzero value as ``u * p**v + O(p**(v + n))``
where ``u`` is a unit modulo ``p**n``; ``v + n`` is its absolute precision.
Two zero flavours are distinguished: an exact zero, and a value merely known
to vanish modulo ``p**a`` because every tracked digit cancelled in a sum.
Absolute precision never increases along a computation, and valuations add
exactly under multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConfigurationError,
    DivisionByZero,
    InsufficientPrecision,
    NotAUnit,
    NotPIntegral,
)

NUM = "num"
ZERO = "zero"  # known only to be 0 modulo p**a (a stored in `v`)
EXACT_ZERO = "exact-zero"

MAX_MODULUS = 1 << 127


def val_p(z: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if z == 0:
        raise ValueError("valuation of zero is undefined")
    v = 0
    while z % p == 0:
        z //= p
        v += 1
    return v


@dataclass(frozen=True)
class Residue:
    """An integer reduced modulo p**m."""

    p: int
    m: int
    value: int

    @property
    def modulus(self) -> int:
        return self.p**self.m

    def _coerce(self, other: "Residue") -> None:
        if (self.p, self.m) != (other.p, other.m):
            raise ValueError(f"residue ring mismatch: {(self.p, self.m)} vs {(other.p, other.m)}")

    def __add__(self, other: "Residue") -> "Residue":
        self._coerce(other)
        return Residue(self.p, self.m, (self.value + other.value) % self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._coerce(other)
        return Residue(self.p, self.m, (self.value - other.value) % self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._coerce(other)
        return Residue(self.p, self.m, (self.value * other.value) % self.modulus)

    def __neg__(self) -> "Residue":
        return Residue(self.p, self.m, (-self.value) % self.modulus)

    def inv(self) -> "Residue":
        return res_inv(self)

    def __int__(self) -> int:
        return self.value


def res_from_int(p: int, m: int, z: int) -> Residue:
    """Canonical residue of a signed integer modulo p**m."""
    if p <= 3:
        raise ConfigurationError(f"prime must exceed 3, got {p}")
    if not 1 <= m <= 5:
        raise ConfigurationError(f"modulus exponent must lie in 1..5, got {m}")
    mod = p**m
    if mod >= MAX_MODULUS:
        raise ConfigurationError(f"modulus p**m = {p}**{m} exceeds the supported width")
    return Residue(p, m, z % mod)


def res_inv(x: Residue) -> Residue:
    if x.value % x.p == 0:
        raise NotAUnit(f"{x.value} is divisible by {x.p}")
    return Residue(x.p, x.m, pow(x.value, -1, x.modulus))


@dataclass(frozen=True)
class PadicRat:
    """Finite-precision p-adic rational.

    For ``kind == NUM`` the value is ``u * p**v + O(p**(v + n))`` with
    ``1 <= n`` and ``u`` a unit modulo ``p**n``.  For ``kind == ZERO`` the
    value is only known to be ``O(p**v)`` (``u = n = 0``).  For
    ``kind == EXACT_ZERO`` the value is zero on the nose.
    """

    p: int
    v: int
    u: int
    n: int
    kind: str = NUM

    # -- constructors -------------------------------------------------

    @staticmethod
    def exact_zero(p: int) -> "PadicRat":
        return PadicRat(p, 0, 0, 0, EXACT_ZERO)

    @staticmethod
    def zero_to_precision(p: int, a: int) -> "PadicRat":
        return PadicRat(p, a, 0, 0, ZERO)

    # -- structure ----------------------------------------------------

    @property
    def abs_precision(self):
        """Absolute precision bound, or None for an exact zero."""
        if self.kind == EXACT_ZERO:
            return None
        if self.kind == ZERO:
            return self.v
        return self.v + self.n

    def is_zeroish(self) -> bool:
        return self.kind != NUM

    def _coerce(self, other: "PadicRat") -> None:
        if self.p != other.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "PadicRat") -> "PadicRat":
        return padic_add(self, other)

    def __sub__(self, other: "PadicRat") -> "PadicRat":
        return padic_add(self, -other)

    def __neg__(self) -> "PadicRat":
        if self.kind != NUM:
            return self
        return PadicRat(self.p, self.v, (-self.u) % self.p**self.n, self.n)

    def __mul__(self, other: "PadicRat") -> "PadicRat":
        return padic_mul(self, other)

    def inv(self) -> "PadicRat":
        if self.kind == EXACT_ZERO:
            raise DivisionByZero("inverse of exact zero")
        if self.kind == ZERO:
            raise NotAUnit(f"inverse of a value only known to be 0 mod p**{self.v}")
        return PadicRat(self.p, -self.v, pow(self.u, -1, self.p**self.n), self.n)

    def shift(self, k: int) -> "PadicRat":
        return padic_shift(self, k)

    def reduce(self, m: int) -> Residue:
        return padic_reduce(self, m)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        if self.kind == EXACT_ZERO:
            return f"PadicRat({self.p}, 0 exactly)"
        if self.kind == ZERO:
            return f"PadicRat({self.p}, O({self.p}^{self.v}))"
        return f"PadicRat({self.p}, {self.u}*{self.p}^{self.v} + O({self.p}^{self.v + self.n}))"


def padic_from_ratio(p: int, work: int, a: int, b: int) -> PadicRat:
    """The ratio a/b with `work` known digits of the unit part.

    Valuations of numerator and denominator are removed exactly, so the
    result's valuation is correct even when p divides a or b.
    """
    if b == 0:
        raise DivisionByZero("denominator is zero")
    if a == 0:
        return PadicRat.exact_zero(p)
    va = val_p(a, p)
    vb = val_p(b, p)
    pn = p**work
    u = (a // p**va) * pow(b // p**vb, -1, pn) % pn
    return PadicRat(p, va - vb, u, work)


def padic_from_int(p: int, work: int, z: int) -> PadicRat:
    return padic_from_ratio(p, work, z, 1)


def padic_from_residue(p: int, r: int, m: int) -> PadicRat:
    """A value known to be congruent to r modulo p**m (and nothing more)."""
    r %= p**m
    if r == 0:
        return PadicRat.zero_to_precision(p, m)
    v = val_p(r, p)
    return PadicRat(p, v, r // p**v, m - v)


def padic_add(x: PadicRat, y: PadicRat) -> PadicRat:
    x._coerce(y)
    p = x.p
    if x.kind == EXACT_ZERO:
        return y
    if y.kind == EXACT_ZERO:
        return x
    if x.kind == ZERO and y.kind == ZERO:
        return PadicRat.zero_to_precision(p, min(x.v, y.v))
    if x.kind == ZERO or y.kind == ZERO:
        z, w = (x, y) if x.kind == ZERO else (y, x)
        a = min(z.v, w.v + w.n)
        if w.v >= a:
            return PadicRat.zero_to_precision(p, a)
        return PadicRat(p, w.v, w.u % p ** (a - w.v), a - w.v)
    a = min(x.v + x.n, y.v + y.n)
    base = min(x.v, y.v)
    k = a - base
    if k <= 0:
        return PadicRat.zero_to_precision(p, a)
    s = (x.u * p ** (x.v - base) + y.u * p ** (y.v - base)) % p**k
    if s == 0:
        return PadicRat.zero_to_precision(p, a)
    t = val_p(s, p)
    v = base + t
    n = a - v
    return PadicRat(p, v, (s // p**t) % p**n, n)


def padic_mul(x: PadicRat, y: PadicRat) -> PadicRat:
    x._coerce(y)
    p = x.p
    if x.kind == EXACT_ZERO or y.kind == EXACT_ZERO:
        return PadicRat.exact_zero(p)
    if x.kind == ZERO or y.kind == ZERO:
        # O(p^a) * (unit * p^w + ...) = O(p^(a+w)); O(p^a) * O(p^b) = O(p^(a+b))
        return PadicRat.zero_to_precision(p, x.v + y.v)
    n = min(x.n, y.n)
    return PadicRat(p, x.v + y.v, x.u * y.u % p**n, n)


def padic_shift(x: PadicRat, k: int) -> PadicRat:
    """Multiply by p**k exactly (k may be negative); digits are unchanged."""
    if x.kind == EXACT_ZERO:
        return x
    if x.kind == ZERO:
        return PadicRat.zero_to_precision(x.p, x.v + k)
    return PadicRat(x.p, x.v + k, x.u, x.n)


def padic_inv(x: PadicRat) -> PadicRat:
    return x.inv()


def padic_reduce(x: PadicRat, m: int) -> Residue:
    """Canonical residue of a p-integral value modulo p**m."""
    p = x.p
    if x.kind == EXACT_ZERO:
        return Residue(p, m, 0)
    if x.kind == ZERO:
        if x.v >= m:
            return Residue(p, m, 0)
        raise InsufficientPrecision(
            f"value known to be 0 mod {p}**{x.v} cannot be reduced mod {p}**{m}"
        )
    if x.v < 0:
        raise NotPIntegral(f"valuation {x.v} < 0")
    if x.v + x.n < m:
        raise InsufficientPrecision(
            f"absolute precision {x.v + x.n} < requested exponent {m}"
        )
    return Residue(p, m, x.u * p**x.v % p**m)
