"""The congruence registry: every displayed congruence as an executable
check returning a structured verdict.

Scalar entries accumulate both sides as finite-precision p-adic rationals
and reduce them modulo p**mod_exp.  Quantified entries run over their full
index range and report the first failing index as a witness.  A handful of
heavy double sums share one O(p^2) kernel computing, for every column j,

    T4[j] = sum_{k=j}^{p-1} binom(k,j)^2            (mod p^4)
    U2[j] = sum_{k=j}^{p-1} binom(k,j)^2 H_k^(2)    (mod p^2)

which turns each of the downstream checks into an O(p) column sum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .errors import InsufficientPrecision
from .oracle import brute_force_oracle  # noqa: F401  (re-exported)
from .padic import (
    EXACT_ZERO,
    ZERO,
    PadicRat,
    padic_from_ratio,
    padic_from_residue,
    padic_reduce,
)
from .prime_ctx import PrimeCtx, fermat_style_quotient
from .special import SpecialValues

# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class Verdict:
    """Outcome of one congruence check at one prime."""

    id: str
    p: int
    mod_exp: int
    lhs: int
    rhs: int
    passed: bool
    diff_bound: object  # int lower bound on val_p(lhs - rhs), or None (exact 0)
    diff_exact: bool  # True when diff_bound is the exact valuation
    witness_index: object = None

    @property
    def diff_valuation(self) -> str:
        if self.diff_bound is None:
            return "exact-zero"
        if self.diff_exact:
            return str(self.diff_bound)
        return f">={self.diff_bound}"

    def to_dict(self) -> dict:
        d = {
            "id": self.id,
            "p": self.p,
            "mod_exp": self.mod_exp,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "pass": self.passed,
            "diff_valuation": self.diff_valuation,
        }
        if self.witness_index is not None:
            d["witness_index"] = self.witness_index
        return d


@dataclass(frozen=True)
class CongruenceSpec:
    id: str
    mod_exp: int
    description: str
    required_precision: int
    evaluator: object = field(repr=False)
    euler_dependent: bool = False
    quantified: bool = False


# ---------------------------------------------------------------------------
# shared per-prime derived data (cached on the ctx, computed lazily)


class _Sums:
    __slots__ = ("S1", "S1h", "S2", "S2h", "SH", "SH2", "SH2h", "SR")


def _F(ctx: PrimeCtx, a: int, b: int = 1) -> PadicRat:
    return padic_from_ratio(ctx.p, ctx.work, a, b)


def _inv_pr(ctx: PrimeCtx, i: int) -> PadicRat:
    return PadicRat(ctx.p, 0, ctx.inv[i], ctx.work)


def _basic_sums(ctx: PrimeCtx) -> _Sums:
    if "sums" in ctx._cache:
        return ctx._cache["sums"]
    p = ctx.p
    half = (p - 1) // 2
    z = PadicRat.exact_zero(p)
    s = _Sums()
    s.S1 = s.S1h = s.S2 = s.S2h = s.SH = s.SH2 = s.SH2h = s.SR = z
    two = _F(ctx, 2)
    for k in range(1, p):
        c = ctx.cbc[k]
        ik = _inv_pr(ctx, k)
        ck = c * ik
        s.S1 = s.S1 + ck
        s.S2 = s.S2 + ck * ik
        s.SH = s.SH + ck * ctx.H1[k]
        s.SH2 = s.SH2 + ck * ctx.H1[2 * k]
        if k <= half:
            s.S1h = s.S1h + ck
            s.S2h = s.S2h + ck * ik
            s.SH2h = s.SH2h + ck * ctx.H1[2 * k]
            s.SR = s.SR + two * ik * ik * c.inv()
    ctx._cache["sums"] = s
    return s


def _central_2p1(ctx: PrimeCtx) -> int:
    """binom(2p-1, p-1) modulo p**work, as an integer."""
    if "c2p1" in ctx._cache:
        return ctx._cache["c2p1"]
    p, P = ctx.p, ctx.p**ctx.work
    r = 1
    for j in range(1, p):
        r = r * (p + j) % P * ctx.inv[j] % P
    ctx._cache["c2p1"] = r
    return r


_SPLIT = 21  # limb width for int64 modular products below 2**42


def _mulmod_vec(a, b, mod):
    bh = b >> _SPLIT
    bl = b & ((1 << _SPLIT) - 1)
    return ((a * bh % mod << _SPLIT) % mod + a * bl % mod) % mod


def _kernel(ctx: PrimeCtx) -> dict:
    if "kernel" in ctx._cache:
        return ctx._cache["kernel"]
    if ctx.work < 4:
        raise InsufficientPrecision("column kernel needs working precision >= 4")
    p = ctx.p
    p2, p4 = p * p, p**4
    h2 = [padic_reduce(ctx.H2[k], 2).value for k in range(p)]
    cbint4 = [padic_reduce(ctx.cbc[k], 4).value for k in range(p)]
    catint4 = [padic_reduce(ctx.cat[k], 4).value for k in range(p)]

    fact = [1] * p
    for k in range(1, p):
        fact[k] = fact[k - 1] * k % p4
    invfact = [1] * p
    invfact[p - 1] = pow(fact[p - 1], -1, p4)
    for k in range(p - 1, 0, -1):
        invfact[k - 1] = invfact[k] * k % p4

    T4 = [0] * p
    U2 = [0] * p
    if p4 < 1 << 42:
        fa = np.array(fact, dtype=np.int64)
        ifa = np.array(invfact, dtype=np.int64)
        h2a = np.array(h2, dtype=np.int64) % p2
        for j in range(p):
            b = _mulmod_vec(_mulmod_vec(fa[j:], ifa[: p - j], p4), invfact[j], p4)
            sq = _mulmod_vec(b, b, p4)
            T4[j] = int(sq.sum() % p4)
            b2 = b % p2
            U2[j] = int((b2 * b2 % p2 * h2a[j:] % p2).sum() % p2)
    else:  # big primes: plain-int fallback, O(p^2) but exact
        for j in range(p):
            t = u = 0
            for k in range(j, p):
                b = fact[k] * invfact[j] % p4 * invfact[k - j] % p4
                sq = b * b % p4
                t = (t + sq) % p4
                u = (u + sq * h2[k]) % p2
            T4[j], U2[j] = t, u

    ker = {"T4": T4, "U2": U2, "cbint4": cbint4, "catint4": catint4, "h2": h2}
    ctx._cache["kernel"] = ker
    return ker


def _b3_pr(ctx: PrimeCtx, sp: SpecialValues) -> PadicRat:
    # B_{p-2}(1/3) is only known modulo p: one honest digit of precision.
    return padic_from_residue(ctx.p, sp.bern_third.value, 1)


def _bern_pr(ctx: PrimeCtx, sp: SpecialValues, n: int) -> PadicRat:
    return padic_from_residue(ctx.p, sp.bern(n).value, 1)


# ---------------------------------------------------------------------------
# entry evaluators: each returns [(index_or_None, lhs, rhs), ...]


def _ev_w_harm1(ctx, sp):
    return [(None, ctx.H1[ctx.p - 1], PadicRat.exact_zero(ctx.p))]


def _ev_w_harm2(ctx, sp):
    return [(None, ctx.H2[ctx.p - 1], PadicRat.exact_zero(ctx.p))]


def _ev_w_cbc(ctx, sp):
    lhs = padic_from_residue(ctx.p, _central_2p1(ctx), ctx.work)
    return [(None, lhs, _F(ctx, 1))]


def _ev_st10(ctx, sp):
    p = ctx.p
    rhs = _F(ctx, 8 * p * p, 9) * _bern_pr(ctx, sp, p - 3)
    return [(None, _basic_sums(ctx).S1, rhs)]


def _ev_s11b_half(ctx, sp):
    p = ctx.p
    e = padic_from_residue(p, sp.euler_pm3.value, 1)
    rhs = _F(ctx, -8 * sp.chi4 * p, 3) * e
    return [(None, _basic_sums(ctx).S1h, rhs)]


def _ev_t11(ctx, sp):
    rhs = _F(ctx, sp.chi3, 3) * _b3_pr(ctx, sp)
    return [(None, _basic_sums(ctx).SH, rhs)]


def _ev_t12(ctx, sp):
    rhs = _F(ctx, 7 * sp.chi3, 12) * _b3_pr(ctx, sp)
    return [(None, _basic_sums(ctx).SH2, rhs)]


def _combined_lhs(ctx):
    s = _basic_sums(ctx)
    return _F(ctx, 4) * s.SH2 + _F(ctx, -7) * s.SH


def _ev_cor13(ctx, sp):
    return [(None, _combined_lhs(ctx), PadicRat.exact_zero(ctx.p))]


def _ev_conj1(ctx, sp):
    p = ctx.p
    rhs = _F(ctx, -14) * fermat_style_quotient(ctx)
    if p == 5:
        # B_{p-5} = B_0 = 1 exactly; fold p^3 into the numerator so the
        # pole of 278/15 at 5 is cancelled exactly.
        rhs = rhs + _F(ctx, 278 * p**3, 15)
    else:
        rhs = rhs + _F(ctx, 278 * p**3, 15) * _bern_pr(ctx, sp, p - 5)
    return [(None, _combined_lhs(ctx), rhs)]


def _ev_p2a(ctx, sp):
    p = ctx.p
    one = _F(ctx, 1)
    out = []
    b = _F(ctx, p)  # binom(p, 1)
    for k in range(1, p):
        if k > 1:
            b = b * _F(ctx, p - k + 1, k)
        sign = 1 if k % 2 == 1 else -1
        rhs = _F(ctx, sign * p, k) * (one - ctx.H1[k - 1].shift(1))
        out.append((k, b, rhs))
    return out


def _ev_p2b(ctx, sp):
    p = ctx.p
    fact = [1] * p
    for k in range(1, p):
        fact[k] = fact[k - 1] * k % p
    invfact = [1] * p
    invfact[p - 1] = pow(fact[p - 1], -1, p)
    for k in range(p - 1, 0, -1):
        invfact[k - 1] = invfact[k] * k % p
    fa = np.array(fact, dtype=np.int64)
    ifa = np.array(invfact, dtype=np.int64)
    out = []
    for j in range(1, p):
        b1 = fa[j:] * ifa[: p - j] % p * invfact[j] % p  # binom(k, j)
        b2 = fa[j - 1 : p - 1] * ifa[: p - j] % p * invfact[j - 1] % p  # binom(k-1, j-1)
        lhs = int((b1 * b2 % p).sum() % p)
        # binom(2p-2j-1, p-1-j) mod p by Lucas: for 2j+1 <= p the top index
        # is p + (p-2j-1) and the low digit comparison forces a zero.
        if 2 * j + 1 > p:
            n = 2 * p - 2 * j - 1
            rhs = fact[n] * invfact[p - 1 - j] % p * invfact[p - j] % p
        else:
            rhs = 0
        out.append((j, padic_from_residue(p, lhs, 1), padic_from_residue(p, rhs, 1)))
    return out


def _ev_p2c(ctx, sp):
    p = ctx.p
    rhs = _F(ctx, 2 * p)
    return [
        (j, _F(ctx, j) * ctx.cbc[j] * ctx.cbc[p - j], rhs)
        for j in range((p + 1) // 2, p)
    ]


def _ev_p2d(ctx, sp):
    p = ctx.p
    return [
        (k, ctx.H1[p - k], ctx.H1[k] - _inv_pr(ctx, k))
        for k in range(1, p)
    ]


def _ev_p2e(ctx, sp):
    p = ctx.p
    h2p1 = ctx.H1[2 * p - 2] + _F(ctx, 1, 2 * p - 1)
    rhs = _F(ctx, 1) + _F(ctx, -2 * p * p) * ctx.H2[p - 1]
    return [(None, h2p1.shift(1), rhs)]


def _ev_c25(ctx, sp):
    s = _basic_sums(ctx)
    rhs = _F(ctx, 5, 2) * s.SH + _F(ctx, -1, 2) * s.S2
    return [(None, s.SH2, rhs)]


def _ev_c26(ctx, sp):
    p = ctx.p
    one = _F(ctx, 1)
    acc = PadicRat.exact_zero(p)
    for k in range(1, p):
        ck = ctx.cbc[k] * _inv_pr(ctx, k)
        acc = acc + ck * (one - ctx.H1[k].shift(1) + _F(ctx, p, k))
    c2p = padic_from_residue(p, 2 * _central_2p1(ctx), ctx.work)
    lhs = acc * _F(ctx, -p) - c2p + one
    acc = PadicRat.exact_zero(p)
    for k in range(1, (p - 1) // 2 + 1):
        inner = one - (ctx.H1[2 * k] - _F(ctx, 1, 2 * k)).shift(1)
        acc = acc + _F(ctx, 1, 2 * k) * inner * ctx.cbc[k]
    rhs = _F(ctx, -1) + acc.shift(1)
    return [(None, lhs, rhs)]


def _ev_c27(ctx, sp):
    return [(None, _basic_sums(ctx).S1, PadicRat.exact_zero(ctx.p))]


def _ev_c28(ctx, sp):
    s = _basic_sums(ctx)
    rhs = (
        _F(ctx, 1, 2) * s.S1h.shift(-1)
        + _F(ctx, -1, 2) * s.SH2h
        + _F(ctx, 5, 4) * s.S2h
    )
    return [(None, s.SH, rhs)]


def _ev_c29(ctx, sp):
    s = _basic_sums(ctx)
    rhs = _F(ctx, 5, 4) * s.S2 + _F(ctx, -1, 2) * s.SH2
    return [(None, s.SH, rhs)]


def _ev_c210(ctx, sp):
    rhs = _F(ctx, sp.chi3, 2) * _b3_pr(ctx, sp)
    return [(None, _basic_sums(ctx).S2, rhs)]


def _ev_halfeq(ctx, sp):
    s = _basic_sums(ctx)
    return [(None, s.S2, s.S2h)]


def _ev_r21a(ctx, sp):
    s = _basic_sums(ctx)
    return [(None, _F(ctx, -1) * s.S1h.shift(-1), s.SR)]


def _ev_r21b(ctx, sp):
    e = padic_from_residue(ctx.p, sp.euler_pm3.value, 1)
    rhs = _F(ctx, 8 * sp.chi4, 3) * e
    return [(None, _basic_sums(ctx).SR, rhs)]


def _ev_p3f(ctx, sp):
    p = ctx.p
    one = _F(ctx, 1)
    out = []
    b = one  # binom(p-1, 0)
    for j in range(1, p):
        if j > 1:
            b = b * _F(ctx, p - j + 1, j - 1)
        rhs = one - _F(ctx, 2) * ctx.H1[j - 1].shift(1)
        out.append((j, b * b, rhs))
    return out


def _sum_g_mod_p4(ctx) -> int:
    """sum_{k=1}^{p-1} g_k modulo p^4."""
    ker = _kernel(ctx)
    p4 = ctx.p**4
    s = sum(c * t % p4 for c, t in zip(ker["cbint4"], ker["T4"])) % p4
    return (s - 1) % p4  # drop the k = 0 term


def _sum_h_mod_p4(ctx) -> int:
    ker = _kernel(ctx)
    p4 = ctx.p**4
    s = sum(c * t % p4 for c, t in zip(ker["catint4"], ker["T4"])) % p4
    return (s - 1) % p4


def _sum_g_h2_mod_p2(ctx) -> int:
    """sum_{k=1}^{p-1} g_k H_k^(2) modulo p^2 (the k = 0 term vanishes)."""
    ker = _kernel(ctx)
    p2 = ctx.p * ctx.p
    return sum(c * u % p2 for c, u in zip(ker["cbint4"], ker["U2"])) % p2


def _sum_h_h2_mod_p2(ctx) -> int:
    ker = _kernel(ctx)
    p2 = ctx.p * ctx.p
    return sum(c * u % p2 for c, u in zip(ker["catint4"], ker["U2"])) % p2


def _ev_t16a(ctx, sp):
    lhs = padic_from_residue(ctx.p, _sum_g_mod_p4(ctx), 4).shift(-2)
    rhs = _F(ctx, 5 * sp.chi3, 8) * _b3_pr(ctx, sp)
    return [(None, lhs, rhs)]


def _ev_t16b(ctx, sp):
    lhs = padic_from_residue(ctx.p, _sum_g_h2_mod_p2(ctx), 2)
    rhs = _F(ctx, 5 * sp.chi3, 8) * _b3_pr(ctx, sp)
    return [(None, lhs, rhs)]


def _ev_t17a(ctx, sp):
    p = ctx.p
    lhs = padic_from_residue(p, _sum_h_mod_p4(ctx), 4)
    rhs = _F(ctx, 3 * sp.chi3 * p * p, 4) * _b3_pr(ctx, sp)
    return [(None, lhs, rhs)]


def _ev_t17b(ctx, sp):
    lhs = padic_from_residue(ctx.p, _sum_h_h2_mod_p2(ctx), 2)
    rhs = _F(ctx, 3 * sp.chi3, 4) * _b3_pr(ctx, sp)
    return [(None, lhs, rhs)]


def _ev_c37(ctx, sp):
    p = ctx.p
    lhs = padic_from_residue(p, _sum_g_mod_p4(ctx), 4)
    rhs = padic_from_residue(p, _sum_g_h2_mod_p2(ctx), 2).shift(2) + _F(
        ctx, 7 * p**3, 6
    ) * _bern_pr(ctx, sp, p - 3)
    return [(None, lhs, rhs)]


def _ev_c3h(ctx, sp):
    ker = _kernel(ctx)
    p = ctx.p
    p2, p4 = p * p, p**4
    s = 0
    for c, t, u in zip(ker["catint4"], ker["T4"], ker["U2"]):
        s = (s + c * ((t - p2 * u) % p4)) % p4
    return [(None, padic_from_residue(p, s, 4), _F(ctx, 1))]


def c38_sample_points(seed: int, p: int, extra: int = 2) -> list[int]:
    """Deterministic evaluation points: {0, 1, 2} plus seeded draws mod p^4."""
    rng = random.Random(f"{seed}:{p}")
    return [0, 1, 2] + [rng.randrange(p**4) for _ in range(extra)]


def _c38_pairs(ctx, sp, xs):
    ker = _kernel(ctx)
    p = ctx.p
    p2, p4 = p * p, p**4
    T4, U2, cbint4, h2 = ker["T4"], ker["U2"], ker["cbint4"], ker["h2"]
    w = [(t - p2 * u) % p4 for t, u in zip(T4, U2)]
    cw = [c * v % p4 for c, v in zip(cbint4, w)]
    coef = []
    for k in range(p):
        t = (1 - 2 * p2 * h2[k]) % p4
        if 2 * k + 1 == p:
            coef.append(t)  # p/(2k+1) = 1 by exact cancellation, never an inverse
        else:
            coef.append(p * (ctx.inv[2 * k + 1] % p4) % p4 * t % p4)
    out = []
    for x in xs:
        x %= p4
        lhs = rhs = 0
        xj = 1
        for j in range(p):
            lhs = (lhs + cw[j] * xj) % p4
            rhs = (rhs + coef[j] * xj) % p4
            xj = xj * x % p4
        out.append((x, padic_from_residue(p, lhs, 4), padic_from_residue(p, rhs, 4)))
    return out


# ---------------------------------------------------------------------------
# registry and evaluation


def registry(seed: int = 0) -> list[CongruenceSpec]:
    """All congruence checks, in display order."""

    def c38_evaluator(ctx, sp):
        return _c38_pairs(ctx, sp, c38_sample_points(seed, ctx.p))

    E = CongruenceSpec
    return [
        E("W.HARM1", 2, "H_{p-1} = 0 (mod p^2)", 2, _ev_w_harm1),
        E("W.HARM2", 1, "H^(2)_{p-1} = 0 (mod p)", 1, _ev_w_harm2),
        E("W.CBC", 3, "binom(2p-1,p-1) = 1 (mod p^3)", 3, _ev_w_cbc),
        E("ST10", 3, "sum binom(2k,k)/k = (8/9) p^2 B_{p-3} (mod p^3)", 3, _ev_st10),
        E("S11B.HALF", 2, "half-range sum binom(2k,k)/k vs p E_{p-3} (mod p^2)", 2,
          _ev_s11b_half, euler_dependent=True),
        E("T1.1", 1, "sum binom(2k,k) H_k / k (mod p)", 1, _ev_t11),
        E("T1.2", 1, "sum binom(2k,k) H_{2k} / k (mod p)", 1, _ev_t12),
        E("COR1.3", 1, "sum binom(2k,k)(4H_{2k}-7H_k)/k = 0 (mod p)", 1, _ev_cor13),
        E("CONJ1", 4, "same sum vs -14 H_{p-1}/p + (278/15) p^3 B_{p-5} (mod p^4)", 5,
          _ev_conj1),
        E("P2.A", 3, "binom(p,k) = (-1)^(k-1) (p/k)(1-p H_{k-1}) (mod p^3)", 3,
          _ev_p2a, quantified=True),
        E("P2.B", 1, "sum_k binom(k,j) binom(k-1,j-1) vs binom(2p-2j-1,p-1-j) (mod p)",
          1, _ev_p2b, quantified=True),
        E("P2.C", 2, "j binom(2j,j) binom(2(p-j),p-j) = 2p (mod p^2)", 2,
          _ev_p2c, quantified=True),
        E("P2.D", 1, "H_{p-k} = H_k - 1/k (mod p)", 1, _ev_p2d, quantified=True),
        E("P2.E", 3, "p H_{2p-1} = 1 - 2 p^2 H^(2)_{p-1} (mod p^3)", 3, _ev_p2e),
        E("C2.5", 1, "H_{2k} sum vs (5/2) H_k sum - (1/2) 1/k^2 sum (mod p)", 1,
          _ev_c25),
        E("C2.6", 3, "signed binom(p,k) binom(2k,k) rearrangement (mod p^3)", 3,
          _ev_c26),
        E("C2.7", 2, "sum binom(2k,k)/k = 0 (mod p^2)", 2, _ev_c27),
        E("C2.8", 1, "full H_k sum vs half-range combination (mod p)", 1, _ev_c28,
          ),
        E("C2.9", 1, "H_k sum vs (5/4) 1/k^2 sum - (1/2) H_{2k} sum (mod p)", 1,
          _ev_c29),
        E("C2.10", 1, "sum binom(2k,k)/k^2 = (1/2)(p/3) B_{p-2}(1/3) (mod p)", 1,
          _ev_c210),
        E("C2.HALFEQ", 1, "full vs half-range sum binom(2k,k)/k^2 (mod p)", 1,
          _ev_halfeq),
        E("R2.1a", 1, "-(1/p) half sum binom(2k,k)/k vs sum 2/(k^2 binom(2k,k))", 2,
          _ev_r21a),
        E("R2.1b", 1, "sum 2/(k^2 binom(2k,k)) vs (-1/p)(8/3) E_{p-3} (mod p)", 1,
          _ev_r21b, euler_dependent=True),
        E("P3.F", 2, "binom(p-1,j-1)^2 = 1 - 2p H_{j-1} (mod p^2)", 2, _ev_p3f,
          quantified=True),
        E("T1.6a", 1, "(1/p^2) sum g_k (mod p)", 4, _ev_t16a),
        E("T1.6b", 1, "sum g_k H^(2)_k (mod p)", 4, _ev_t16b),
        E("T1.7a", 3, "sum h_k = (3/4) p^2 (p/3) B_{p-2}(1/3) (mod p^3)", 4, _ev_t17a),
        E("T1.7b", 1, "sum h_k H^(2)_k (mod p)", 4, _ev_t17b),
        E("C3.7", 4, "sum g_k vs p^2 sum g_k H^(2)_k + (7/6) p^3 B_{p-3} (mod p^4)",
          4, _ev_c37),
        E("C3.8", 4, "polynomial congruence at sampled points (mod p^4)", 5,
          c38_evaluator, quantified=True),
        E("C3.H", 3, "sum h_k (1 - p^2 H^(2)_k) = 1 (mod p^3)", 4, _ev_c3h),
    ]


def registry_ids(seed: int = 0) -> list[str]:
    return [s.id for s in registry(seed)]


def _diff_info(diff: PadicRat):
    """(lower bound on val_p, bound-is-exact) for a difference."""
    if diff.kind == EXACT_ZERO:
        return None, False
    if diff.kind == ZERO:
        return diff.v, False
    return diff.v, True


def evaluate(ctx: PrimeCtx, specials: SpecialValues, spec: CongruenceSpec) -> Verdict:
    """Run one registry entry at one prime."""
    if ctx.work < spec.required_precision:
        raise InsufficientPrecision(
            f"{spec.id} requires working precision >= {spec.required_precision}, "
            f"ctx has {ctx.work}"
        )
    m = spec.mod_exp
    best = None  # (bound_key, idx, lres, rres, bound, exact)
    witness = None
    all_pass = True
    for idx, lhs, rhs in spec.evaluator(ctx, specials):
        bound, exact = _diff_info(lhs - rhs)
        lres = padic_reduce(lhs, m).value
        rres = padic_reduce(rhs, m).value
        ok = bound is None or bound >= m
        if not ok:
            all_pass = False
            if witness is None:
                witness = (idx, lres, rres, bound, exact)
        key = float("inf") if bound is None else bound
        if best is None or key < best[0]:
            best = (key, idx, lres, rres, bound, exact)
    rep = witness if witness is not None else best[1:]
    idx, lres, rres, bound, exact = rep
    return Verdict(
        id=spec.id,
        p=ctx.p,
        mod_exp=m,
        lhs=lres,
        rhs=rres,
        passed=all_pass,
        diff_bound=bound,
        diff_exact=exact,
        witness_index=idx,
    )


def evaluate_c38(ctx: PrimeCtx, specials: SpecialValues, x_samples) -> list[Verdict]:
    """One verdict per sample point of the polynomial congruence."""
    if ctx.work < 5:
        raise InsufficientPrecision("C3.8 requires working precision >= 5")
    out = []
    for x, lhs, rhs in _c38_pairs(ctx, specials, x_samples):
        bound, exact = _diff_info(lhs - rhs)
        out.append(
            Verdict(
                id="C3.8",
                p=ctx.p,
                mod_exp=4,
                lhs=padic_reduce(lhs, 4).value,
                rhs=padic_reduce(rhs, 4).value,
                passed=bound is None or bound >= 4,
                diff_bound=bound,
                diff_exact=exact,
                witness_index=x,
            )
        )
    return out
