"""Exact rational square-root bounds and Archimedes' polygon bounds on pi."""
from .pi_bounds import (
    Direction,
    PiBoundsResult,
    SqrtPolicy,
    TriangleState,
    Verdict,
    circumscribed_chain,
    exact_96gon_bounds,
    halve_angle,
    inscribed_chain,
    rescale,
    run_archimedes,
    verify_bound,
)
from .rational import (
    Cmp,
    DomainError,
    MixedNumber,
    cmp_sqrt,
    isqrt,
    mediant,
    parse_fraction,
    reduce,
    square,
    to_decimal,
)
from .sqrt_methods import (
    Enclosure,
    ExactRoot,
    PellPair,
    ResidualRecord,
    Side,
    StopRule,
    brute_force_scan,
    cf_expansion,
    convergents,
    dyadic_sqrt_bound,
    dyadic_sqrt_trace,
    harmonic_partner,
    heath_mixed,
    hero_step,
    interpolate,
    interpolate_step,
    midpoint_square,
    pell2_iterate,
    pell2_step,
    squares_table,
    theorem1_check,
)
from .trace import Trace

__version__ = "0.1.0"
