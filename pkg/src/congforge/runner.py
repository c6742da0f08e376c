"""Batch driver: prime sweeps, parallel execution, report emission.

Reports are fully deterministic: results are sorted by (p, id), sample
points depend only on (seed, p), and the metadata carries no timestamps,
so runs with identical flags are byte-identical regardless of the worker
count.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .congruences import CongruenceSpec, Verdict, evaluate, registry
from .errors import ConfigurationError, InsufficientPrecision
from .prime_ctx import build_ctx, sieve_primes
from .special import build_specials

DEFAULT_EULER_BOUND = 20000


@dataclass
class Report:
    meta: dict
    results: list  # Verdict, sorted by (p, id)
    skipped: list  # {"id", "p", "reason"}
    summary: dict = field(default_factory=dict)

    def finalize(self) -> "Report":
        per_id: dict = {}
        failures = []
        for v in self.results:
            slot = per_id.setdefault(v.id, {"pass": 0, "fail": 0, "skipped": 0})
            slot["pass" if v.passed else "fail"] += 1
            if not v.passed:
                failures.append(
                    {"id": v.id, "p": v.p, "witness_index": v.witness_index}
                )
        for s in self.skipped:
            per_id.setdefault(s["id"], {"pass": 0, "fail": 0, "skipped": 0})
            per_id[s["id"]]["skipped"] += 1
        self.summary = {
            "pass": sum(1 for v in self.results if v.passed),
            "fail": sum(1 for v in self.results if not v.passed),
            "skipped": len(self.skipped),
            "per_id": {k: per_id[k] for k in sorted(per_id)},
            "failures": failures,
        }
        return self

    @property
    def ok(self) -> bool:
        return self.summary.get("fail", 0) == 0

    def to_dict(self) -> dict:
        return {
            "meta": self.meta,
            "results": [v.to_dict() for v in self.results],
            "skipped": self.skipped,
            "summary": self.summary,
        }


def _select_specs(ids, seed: int) -> list[CongruenceSpec]:
    specs = registry(seed)
    if ids in (None, "all"):
        return specs
    wanted = list(ids)
    known = {s.id for s in specs}
    unknown = [i for i in wanted if i not in known]
    if unknown:
        raise ConfigurationError(f"unknown registry ids: {', '.join(unknown)}")
    return [s for s in specs if s.id in set(wanted)]


def verify_prime(p, ids, work, seed, euler_bound=DEFAULT_EULER_BOUND):
    """All requested verdicts for one prime; the parallel unit of work."""
    specs = _select_specs(ids, seed)
    run = [s for s in specs if not (s.euler_dependent and p > euler_bound)]
    skipped = [
        {"id": s.id, "p": p, "reason": "euler-bound"}
        for s in specs
        if s.euler_dependent and p > euler_bound
    ]
    ctx = build_ctx(p, work)
    sp = build_specials(p, with_euler=any(s.euler_dependent for s in run))
    verdicts = [evaluate(ctx, sp, s) for s in sorted(run, key=lambda s: s.id)]
    return verdicts, skipped


def _worker(args):
    p, ids, work, seed, euler_bound = args
    return p, verify_prime(p, ids, work, seed, euler_bound)


def run_batch(
    lo: int,
    hi: int,
    ids="all",
    work: int = 5,
    jobs: int = 1,
    seed: int = 0,
    euler_bound: int = DEFAULT_EULER_BOUND,
) -> Report:
    """Evaluate the selected registry entries for every prime in [lo, hi]."""
    if not 4 < lo <= hi:
        raise ConfigurationError(f"prime range must satisfy 4 < lo <= hi, got {lo}:{hi}")
    if not 1 <= work <= 8:
        raise ConfigurationError(f"working precision must lie in 1..8, got {work}")
    if jobs < 1:
        raise ConfigurationError(f"worker count must be >= 1, got {jobs}")
    specs = _select_specs(ids, seed)
    too_deep = [s.id for s in specs if s.required_precision > work]
    if too_deep:
        raise InsufficientPrecision(
            f"entries {', '.join(too_deep)} require more working precision than {work}"
        )
    primes = sieve_primes(lo - 1, hi)
    id_list = sorted(s.id for s in specs)

    results: list[Verdict] = []
    skipped: list = []
    if jobs == 1 or len(primes) <= 1:
        per_prime = [(p, verify_prime(p, ids, work, seed, euler_bound)) for p in primes]
    else:
        args = [(p, ids, work, seed, euler_bound) for p in primes]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_prime = list(pool.map(_worker, args, chunksize=1))
        per_prime.sort(key=lambda t: t[0])
    for _, (verdicts, skips) in per_prime:
        results.extend(verdicts)
        skipped.extend(skips)

    meta = {
        "tool": "congforge",
        "version": __version__,
        "prime_lo": lo,
        "prime_hi": hi,
        "ids": id_list,
        "work": work,
        "seed": seed,
        "euler_bound": euler_bound,
    }
    return Report(meta=meta, results=results, skipped=skipped).finalize()


CSV_COLUMNS = ["id", "p", "mod_exp", "lhs", "rhs", "pass", "diff_valuation", "witness_index"]


def report_to_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def report_to_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)  # default dialect: RFC 4180 quoting, CRLF rows
    writer.writerow(CSV_COLUMNS)
    for v in report.results:
        d = v.to_dict()
        writer.writerow([d.get(c, "") for c in CSV_COLUMNS])
    return buf.getvalue()


def emit_report(report: Report, format: str = "json", path=None) -> str:
    """Serialize a report; write it to `path` when given, and return the text."""
    if format == "json":
        text = report_to_json(report)
    elif format == "csv":
        text = report_to_csv(report)
    else:
        raise ConfigurationError(f"unknown report format {format!r}")
    if path is not None:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text
