"""Exact-arithmetic toolkit for primitive Pythagorean triples (PPTs) whose
hypotenuse sits a fixed gap g above a leg, or whose legs differ by a fixed
gap f, plus the totient machinery behind the families' density limits."""

from ._primes import UnsupportedRangeError, factorize, is_prime, odd_part
from .density import (
    DensityRow,
    Family,
    SieveBudgetError,
    TotientSieve,
    build_sieve,
    count_G1,
    count_GEE,
    count_GEO,
    count_GO,
    count_pool,
    density_report,
    moebius_inversion_check,
    phi2,
    phi2_divisor_sum,
    render_ratio,
    sum_phi,
    sum_phi2,
)
from .hyp_gap import (
    GClass,
    GFamilyItem,
    GKind,
    classify_g,
    family_params,
    family_triple,
    generate_g_family,
    invert_to_family,
    leg_from_gap,
)
from .leg_gap import (
    CfElement,
    FSpec,
    FTriple,
    admissible_f,
    cf_elements,
    generate_f_triples,
    pell_recast,
    verify_f_triple,
)
from .pell import (
    PellSolution,
    RecurrencePair,
    apply_delta_power,
    delta_power,
    gamma_delta_power,
    neg_pell_solution,
    recurrence_coeffs,
)
from .triples import (
    ParamPair,
    Triple,
    TripleClass,
    classify_triple,
    enumerate_ppts,
    from_params,
    is_primitive,
    normalize,
    primitive_from_params,
    to_params,
)
from .zsqrt2 import (
    DELTA,
    GAMMA,
    ONE,
    SQRT2,
    ZERO,
    QuadInt,
    canonical_associate,
    euclid_div,
    gcd,
    ideal_generator,
    is_associate,
    splits,
)

__version__ = "0.1.0"

__all__ = [
    "CfElement",
    "DELTA",
    "DensityRow",
    "FSpec",
    "FTriple",
    "Family",
    "GAMMA",
    "GClass",
    "GFamilyItem",
    "GKind",
    "ONE",
    "ParamPair",
    "PellSolution",
    "QuadInt",
    "RecurrencePair",
    "SQRT2",
    "SieveBudgetError",
    "TotientSieve",
    "Triple",
    "TripleClass",
    "UnsupportedRangeError",
    "ZERO",
    "admissible_f",
    "apply_delta_power",
    "build_sieve",
    "canonical_associate",
    "cf_elements",
    "classify_g",
    "classify_triple",
    "count_G1",
    "count_GEE",
    "count_GEO",
    "count_GO",
    "count_pool",
    "delta_power",
    "density_report",
    "enumerate_ppts",
    "euclid_div",
    "factorize",
    "family_params",
    "family_triple",
    "from_params",
    "gamma_delta_power",
    "gcd",
    "generate_f_triples",
    "generate_g_family",
    "ideal_generator",
    "invert_to_family",
    "is_associate",
    "is_prime",
    "is_primitive",
    "leg_from_gap",
    "moebius_inversion_check",
    "neg_pell_solution",
    "normalize",
    "odd_part",
    "pell_recast",
    "phi2",
    "phi2_divisor_sum",
    "primitive_from_params",
    "recurrence_coeffs",
    "render_ratio",
    "splits",
    "sum_phi",
    "sum_phi2",
    "to_params",
    "verify_f_triple",
]
