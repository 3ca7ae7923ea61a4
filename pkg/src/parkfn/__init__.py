"""parkfn: four families of parking functions, their primes, and exact counts.

Recognition, capacity-process simulation, prime decomposition, closed-form
enumeration, and an independent brute-force oracle for classical, vector,
(p, q), and two-dimensional weight-grid parking functions.
"""

from .core import (
    LabeledPath,
    LatticePath,
    Point,
    Seq,
    common_points,
    label_vertical,
    order_statistics,
    path_of_increasing,
    transpose,
    weakly_above,
)
from .oracle import EnumerationReport, FamilySpec, count, enumerate_members
from .pq import (
    PQPair,
    PQPrimeDecomposition,
    compose_pq,
    count_pq_ipf,
    count_pq_ippf,
    count_pq_pf,
    count_pq_ppf,
    count_pq_ppf_sum,
    decompose_pq,
    is_pq_pf,
    is_pq_prime,
    remove_zero_reduction,
    u0_matrix,
    u0_prime_matrix,
)
from .twodim import (
    AffineWeightSpec,
    BoundednessWitness,
    WeightMatrix,
    affine_weight_matrix,
    count_affine_ipf,
    count_affine_ippf,
    count_affine_pf,
    count_affine_ppf,
    is_u_pf,
    is_u_prime,
    prime_weight_transform,
)
from .vector import (
    ParkingOutcome,
    VectorPrimeDecomposition,
    compose,
    count_ipf_arith,
    count_ippf_arith,
    count_pf_arith,
    count_ppf_arith,
    decompose,
    difference_vector,
    is_prime_vector_pf,
    is_vector_pf,
    prime_reduction,
    simulate_capacity_parking,
    split_points,
)

__version__ = "0.1.0"

__all__ = [
    "AffineWeightSpec",
    "BoundednessWitness",
    "EnumerationReport",
    "FamilySpec",
    "LabeledPath",
    "LatticePath",
    "ParkingOutcome",
    "PQPair",
    "PQPrimeDecomposition",
    "Point",
    "Seq",
    "VectorPrimeDecomposition",
    "WeightMatrix",
    "affine_weight_matrix",
    "common_points",
    "compose",
    "compose_pq",
    "count",
    "count_affine_ipf",
    "count_affine_ippf",
    "count_affine_pf",
    "count_affine_ppf",
    "count_ipf_arith",
    "count_ippf_arith",
    "count_pf_arith",
    "count_ppf_arith",
    "count_pq_ipf",
    "count_pq_ippf",
    "count_pq_pf",
    "count_pq_ppf",
    "count_pq_ppf_sum",
    "decompose",
    "decompose_pq",
    "difference_vector",
    "enumerate_members",
    "is_pq_pf",
    "is_pq_prime",
    "is_prime_vector_pf",
    "is_u_pf",
    "is_u_prime",
    "is_vector_pf",
    "label_vertical",
    "order_statistics",
    "path_of_increasing",
    "prime_reduction",
    "prime_weight_transform",
    "remove_zero_reduction",
    "simulate_capacity_parking",
    "split_points",
    "transpose",
    "u0_matrix",
    "u0_prime_matrix",
    "weakly_above",
]
