"""Exact arithmetic, primitivity analysis, and exhaustive enumeration of
multiperfect numbers, with rigorous evaluation of the count bounds."""

from .arithmetic import (
    ExactRational,
    FactoredInteger,
    FactorizationExhausted,
    abundancy,
    factorize,
    nth_odd_prime,
    nu,
    nu_rational,
    prime_count_upto,
    primes_upto,
    sigma,
    sigma_prime_power,
    unitary_divisors,
)
from .bounds import (
    BoundReport,
    Interval,
    absolute_count_bound,
    bound_chain_check,
    bound_report,
    count_coefficient,
    multiperfect_count_bound,
    omega_floor,
    primitive_count_bound,
)
from .classify import (
    PerfectionClass,
    PrimitiveDecomposition,
    classify,
    is_k_perfect,
    is_primitive,
    primitive_decomposition,
)
from .search import (
    BoundCheck,
    FoundRecord,
    SearchParams,
    SearchReport,
    brute_scan,
    chain_count_majorant,
    chain_search,
    multiperfect_scan,
    verify_counts,
)
from .signature import (
    ChainSignature,
    EmptyChain,
    NotPrimitive,
    Reconstruction,
    extract_signature,
    next_chain_prime,
    reconstruct,
)

__version__ = "0.1.0"

__all__ = [
    "ExactRational",
    "FactoredInteger",
    "FactorizationExhausted",
    "abundancy",
    "factorize",
    "nth_odd_prime",
    "nu",
    "nu_rational",
    "prime_count_upto",
    "primes_upto",
    "sigma",
    "sigma_prime_power",
    "unitary_divisors",
    "BoundReport",
    "Interval",
    "absolute_count_bound",
    "bound_chain_check",
    "bound_report",
    "count_coefficient",
    "multiperfect_count_bound",
    "omega_floor",
    "primitive_count_bound",
    "PerfectionClass",
    "PrimitiveDecomposition",
    "classify",
    "is_k_perfect",
    "is_primitive",
    "primitive_decomposition",
    "BoundCheck",
    "FoundRecord",
    "SearchParams",
    "SearchReport",
    "brute_scan",
    "chain_count_majorant",
    "chain_search",
    "multiperfect_scan",
    "verify_counts",
    "ChainSignature",
    "EmptyChain",
    "NotPrimitive",
    "Reconstruction",
    "extract_signature",
    "next_chain_prime",
    "reconstruct",
]
