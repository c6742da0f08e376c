"""Acceptance suite: one criterion per test, one printed verdict line each."""

import random
import time
from fractions import Fraction

from congforge import build_ctx, build_specials
from congforge.congruences import evaluate, registry
from congforge.identities import (
    check_alternating,
    check_chu_vandermonde,
    check_hockey,
    check_weighted_binomial,
    check_harmonic_rearrangement,
    check_square_identity,
    check_squared_harmonic,
)
from congforge.oracle import (
    brute_force_oracle,
    exact_bernoulli,
    exact_euler,
    exact_sides,
    exact_sides_indexed,
    reduce_fraction,
)
from congforge.padic import padic_from_ratio, padic_reduce, val_p
from congforge.prime_ctx import sieve_primes
from congforge.runner import report_to_json, run_batch
from congforge.special import (
    bernoulli_mod_p,
    bernoulli_third,
    bernoulli_third_direct,
    euler_mod_p,
)


def _verdict(label, fn):
    try:
        fn()
    except BaseException:
        print(f"[acceptance] {label}: FAIL")
        raise
    print(f"[acceptance] {label}: PASS")


def _spec(eid, seed=0):
    return {s.id: s for s in registry(seed)}[eid]


def _frac_val5(fr):
    return val_p(fr.numerator, 5) - val_p(fr.denominator, 5)


def test_criterion_1_hand_checked_p5_residues():
    def body():
        t0 = time.perf_counter()
        ctx = build_ctx(5, 5)
        sp = build_specials(5)

        assert brute_force_oracle(5, "T1.1 LHS") == Fraction(3973, 72)
        v = evaluate(ctx, sp, _spec("T1.1"))
        assert v.passed and v.lhs == 4 == v.rhs

        assert brute_force_oracle(5, "T1.2 LHS") == Fraction(3511, 48)
        v = evaluate(ctx, sp, _spec("T1.2"))
        assert v.passed and v.lhs == 2 == v.rhs

        assert brute_force_oracle(5, "C2.10 LHS") == Fraction(727, 72)
        v = evaluate(ctx, sp, _spec("C2.10"))
        assert v.passed and v.lhs == 1

        c27 = brute_force_oracle(5, "C2.7 LHS")
        assert c27 == Fraction(175, 6) and _frac_val5(c27) == 2
        v = evaluate(ctx, sp, _spec("C2.7"))
        assert v.passed and v.lhs == 0  # 175/6 = 0 (mod 25)

        v = evaluate(ctx, sp, _spec("ST10"))
        assert v.passed and v.lhs == 50 == v.rhs  # both sides mod 125

        assert brute_force_oracle(5, "sum g") == 750
        assert brute_force_oracle(5, "sum h") == 225
        v = evaluate(ctx, sp, _spec("T1.7a"))
        assert v.passed and v.lhs == 100 == v.rhs  # 4 * 5^2 (mod 5^3)

        assert time.perf_counter() - t0 < 1.0

    _verdict("criterion 1 (hand-checked p=5 residues)", body)


def test_criterion_2_conjecture_exact_valuation_at_p5():
    def body():
        lhs, rhs = exact_sides(5, "CONJ1")
        diff = lhs - rhs
        assert diff == Fraction(-173125, 72) and _frac_val5(diff) == 4
        # one extra working digit makes the valuation bound exact
        ctx = build_ctx(5, 6)
        v = evaluate(ctx, build_specials(5), _spec("CONJ1"))
        assert v.passed and v.diff_valuation == "4"

    _verdict("criterion 2 (CONJ1 p=5 valuation exactly 4)", body)


def test_criterion_3_full_sweep_and_parallel_determinism():
    def body():
        t0 = time.perf_counter()
        report = run_batch(5, 1000, work=5, jobs=1)
        elapsed = time.perf_counter() - t0
        assert report.ok and report.summary["fail"] == 0
        assert len(report.meta["ids"]) == 31
        n_primes = len(sieve_primes(4, 1000))
        assert report.summary["pass"] == 31 * n_primes
        assert elapsed <= 60.0, f"single-threaded sweep took {elapsed:.1f}s"
        parallel = run_batch(5, 1000, work=5, jobs=2)
        assert report_to_json(parallel) == report_to_json(report)

    _verdict("criterion 3 (full sweep 5..1000 in budget, parallel identical)", body)


def test_criterion_4_conjecture_scan_to_2000():
    def body():
        report = run_batch(5, 2000, ids=["CONJ1"], work=5, jobs=1)
        assert report.ok
        assert report.summary["pass"] == len(sieve_primes(4, 2000))
        for v in report.results:
            assert v.passed, (v.p, v.to_dict())

    _verdict("criterion 4 (CONJ1 holds for all primes 5..2000)", body)


def test_criterion_5_special_value_cross_validation():
    def body():
        for p in sieve_primes(4, 200):
            assert bernoulli_third(p).value == bernoulli_third_direct(p).value
        for p in sieve_primes(4, 50):
            B = exact_bernoulli(p - 3)
            for n in range(0, p - 2, 2):
                assert bernoulli_mod_p(p, n).value == reduce_fraction(B[n], p, 1)
        assert exact_euler(4) == (1, -1, 5, -61, 1385)
        for p, idx in ((5, 1), (7, 2), (11, 4)):
            assert euler_mod_p(p).value == exact_euler(4)[idx] % p

    _verdict("criterion 5 (special-value cross-validation)", body)


def test_criterion_6_identity_envelope():
    def body():
        xs = [-50, -17, -7, -2, -1, 0, 1, 2, 3, 25, 50]
        for n in range(51):
            assert check_squared_harmonic(n).ok
            assert check_alternating(n).ok
            for x in xs:
                for y in xs:
                    assert check_chu_vandermonde(n, x, y).ok
                for m in range(5):
                    assert check_hockey(n, m, x).ok
        for n in range(51):
            for x in range(-n, n + 1):  # 2n+1 points > degree 2n
                assert check_square_identity(n, x).ok
            for x in range(-n - 1, n + 1):  # 2n+2 points > degree 2n+1,
                assert check_weighted_binomial(n, x).ok  # difference relation included
        for N in range(2, 30):
            assert check_harmonic_rearrangement(N).ok

    _verdict("criterion 6 (exact identity envelope)", body)


def test_criterion_7_oracle_equivalence():
    def body():
        specs = registry()
        for p in sieve_primes(4, 100):
            ctx = build_ctx(p, 5)
            sp = build_specials(p)
            for spec in specs:
                m = spec.mod_exp
                pairs = spec.evaluator(ctx, sp)
                if spec.id == "C3.8":
                    exact = dict(
                        (i, (l, r)) for i, l, r in exact_sides_indexed(p, "C3.8")
                    )
                    for x, lhs, rhs in pairs:
                        if x in exact:
                            el, er = exact[x]
                            assert lhs.reduce(m).value == reduce_fraction(
                                Fraction(el), p, m
                            )
                            assert rhs.reduce(m).value == reduce_fraction(
                                Fraction(er), p, m
                            )
                elif spec.quantified:
                    exact = dict(
                        (i, (l, r)) for i, l, r in exact_sides_indexed(p, spec.id)
                    )
                    for idx, lhs, rhs in pairs:
                        el, er = exact[idx]
                        assert lhs.reduce(m).value == reduce_fraction(el, p, m)
                        assert rhs.reduce(m).value == reduce_fraction(er, p, m)
                else:
                    el, er = exact_sides(p, spec.id)
                    ((_, lhs, rhs),) = pairs
                    assert lhs.reduce(m).value == reduce_fraction(el, p, m), (
                        p,
                        spec.id,
                    )
                    assert rhs.reduce(m).value == reduce_fraction(er, p, m), (
                        p,
                        spec.id,
                    )

    _verdict("criterion 7 (modular evaluation equals exact oracle, p <= 100)", body)


def test_criterion_8_padic_property_suite():
    def body():
        cases = 10_000
        for p in (5, 7, 13, 10007):
            for m in range(1, 6):
                rng = random.Random(f"acc8:{p}:{m}")
                for _ in range(cases):
                    a = rng.randrange(-(10**9), 10**9) or 1
                    b = rng.randrange(1, 10**9)
                    c = rng.randrange(-(10**9), 10**9) or 1
                    d = rng.randrange(1, 10**9)
                    x = padic_from_ratio(p, m, a, b)
                    y = padic_from_ratio(p, m, c, d)
                    fx, fy = Fraction(a, b), Fraction(c, d)

                    # from_ratio round trip through reduction
                    shift = max(0, -x.v)
                    assert padic_reduce(x.shift(shift), m).value == reduce_fraction(
                        fx * p**shift, p, m
                    )

                    # valuation additivity
                    prod = x * y
                    assert prod.v == x.v + y.v == _val(fx, p) + _val(fy, p)

                    # ring laws (commutativity; add consistency to precision)
                    s1, s2 = x + y, y + x
                    assert (s1.kind, s1.v, s1.u, s1.n) == (s2.kind, s2.v, s2.u, s2.n)
                    p1, p2 = x * y, y * x
                    assert (p1.v, p1.u, p1.n) == (p2.v, p2.u, p2.n)

                    # precision never increases
                    if not s1.is_zeroish():
                        assert s1.abs_precision <= min(
                            x.abs_precision, y.abs_precision
                        )
                    assert prod.n <= min(x.n, y.n)

                    # multiplicative inverse round trip
                    assert padic_reduce(x * x.inv(), m).value == 1

    _verdict("criterion 8 (p-adic arithmetic property suite)", body)


def _val(fr, p):
    return val_p(fr.numerator, p) - val_p(fr.denominator, p)
