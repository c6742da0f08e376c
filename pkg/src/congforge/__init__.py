"""Verification engine for prime congruences of harmonic numbers and
central binomial coefficients."""

__version__ = "0.1.0"

from .padic import (  # noqa: F401
    PadicRat,
    Residue,
    padic_add,
    padic_from_int,
    padic_from_ratio,
    padic_from_residue,
    padic_mul,
    padic_reduce,
    padic_shift,
    res_from_int,
    res_inv,
)
from .prime_ctx import (  # noqa: F401
    PrimeCtx,
    build_ctx,
    fermat_style_quotient,
    harmonic,
    sieve_primes,
)
from .special import (  # noqa: F401
    SpecialValues,
    bernoulli_mod_p,
    bernoulli_third,
    build_specials,
    euler_mod_p,
    legendre_m1,
    legendre_p3,
)
from .congruences import (  # noqa: F401
    CongruenceSpec,
    Verdict,
    brute_force_oracle,
    evaluate,
    evaluate_c38,
    registry,
    registry_ids,
)
from .runner import Report, emit_report, run_batch  # noqa: F401
