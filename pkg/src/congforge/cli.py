"""Command-line driver.

Subcommands:
  verify      run a prime sweep over (a subset of) the registry
  conjecture  shorthand for `verify --ids CONJ1`
  value       print a single special value for one prime
  identities  run the exact identity checkers over their envelope

Exit status: 0 when every verdict passes (skips are fine), 1 on any
failing verdict or identity, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .errors import CongforgeError
from .identities import (
    check_alternating,
    check_chu_vandermonde,
    check_hockey,
    check_weighted_binomial,
    check_harmonic_rearrangement,
    check_square_identity,
    check_squared_harmonic,
)
from .runner import DEFAULT_EULER_BOUND, emit_report, run_batch
from .special import bernoulli_mod_p, bernoulli_third, euler_mod_p, legendre_p3


def _parse_primes(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")


def _default_jobs() -> int:
    env = os.environ.get("CONGFORGE_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _add_sweep_args(sub, with_ids=True):
    sub.add_argument("--primes", type=_parse_primes, default=(5, 1000),
                     metavar="LO:HI", help="inclusive prime range (default 5:1000)")
    if with_ids:
        sub.add_argument("--ids", default="all",
                         help="comma-separated registry ids, or 'all'")
    sub.add_argument("--work", type=int, default=5,
                     help="working precision in p-adic digits (default 5)")
    sub.add_argument("--jobs", type=int, default=_default_jobs(),
                     help="parallel workers (default $CONGFORGE_JOBS or 1)")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for sampled evaluation points (default 0)")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out", default=None, help="report path (default: stdout)")
    sub.add_argument("--euler-bound", type=int, default=DEFAULT_EULER_BOUND,
                     help="skip Euler-number entries for primes above this bound")


def _run_sweep(args, ids) -> int:
    report = run_batch(
        args.primes[0],
        args.primes[1],
        ids=ids,
        work=args.work,
        jobs=args.jobs,
        seed=args.seed,
        euler_bound=args.euler_bound,
    )
    text = emit_report(report, format=args.format, path=args.out)
    if args.out is None:
        sys.stdout.write(text)
    else:
        s = report.summary
        print(f"{s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped "
              f"-> {args.out}")
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    ids = "all" if args.ids == "all" else [i.strip() for i in args.ids.split(",") if i.strip()]
    return _run_sweep(args, ids)


def _cmd_conjecture(args) -> int:
    return _run_sweep(args, ["CONJ1"])


def _cmd_value(args) -> int:
    p = args.p
    what = args.what
    if what == "legendre3":
        print(str(legendre_p3(p)))
        return 0
    if what == "bernoulli-third":
        r = bernoulli_third(p)
    elif what == "euler":
        r = euler_mod_p(p)
    elif what.startswith("bernoulli:"):
        r = bernoulli_mod_p(p, int(what.split(":", 1)[1]))
    else:
        raise CongforgeError(f"unknown selector {what!r}")
    print(f"{r.value} (mod {p})")
    return 0


def _cmd_identities(args) -> int:
    n_max = args.max_n
    failures = 0
    checks = 0

    def run(res):
        nonlocal failures, checks
        checks += 1
        if not res.ok:
            failures += 1
            print(f"FAIL {res.identity} {res.params}: {res.lhs} != {res.rhs}")

    xs = sorted({0, 1, 2, -1, -2, 3, -7, 17, -n_max, n_max})
    for n in range(n_max + 1):
        run(check_squared_harmonic(n))
        run(check_alternating(n))
        for x in xs:
            for y in xs:
                run(check_chu_vandermonde(n, x, y))
            for m in range(0, 6):
                run(check_hockey(n, m, x))
        for x in range(-n - 1, n + 2):  # 2n+3 points > degree 2n
            run(check_square_identity(n, x))
            run(check_weighted_binomial(n, x))
    for N in range(2, max(3, n_max + 1)):
        run(check_harmonic_rearrangement(N))
    print(f"identities: {checks - failures}/{checks} ok")
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="congforge", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="run a registry sweep")
    _add_sweep_args(s)
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("conjecture", help="sweep only the mod-p^4 conjecture")
    _add_sweep_args(s, with_ids=False)
    s.set_defaults(func=_cmd_conjecture)

    s = sub.add_parser("value", help="print one special value")
    s.add_argument("p", type=int)
    s.add_argument("what",
                   help="bernoulli-third | bernoulli:N | euler | legendre3")
    s.set_defaults(func=_cmd_value)

    s = sub.add_parser("identities", help="run the exact identity envelope")
    s.add_argument("--max-n", type=int, default=12)
    s.set_defaults(func=_cmd_identities)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CongforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
