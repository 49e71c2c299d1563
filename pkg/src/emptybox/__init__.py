"""Large empty boxes amidst points in the unit hypercube, and the combinatorics
of perfect vector sets / properly overlapping partitions behind them."""
from .bounds import (
    BoundReport,
    asymptotic_bases,
    p_binary_exact,
    p_bounds,
    volume_lower_bound,
    volume_upper_bound_const,
)
from .estimators import LargeEmptyBoxFinder, MaxEmptyBoxOracle
from .exceptions import BudgetExceededError, ConstructionFailedError, EmptyBoxError
from .finder import CaseTag, CollisionCertificate, find_large_empty_box, select_min_slab
from .geometry import AxisBox, PointSet, is_empty_box, strictly_inside, volume
from .oracle import max_empty_box_exact, slicing_bound_box
from .partitions import (
    PartitionFamily,
    VectorFamily,
    brute_force_p,
    construct_binary_optimal,
    construct_block_family,
    lym_check,
    partitions_to_vectors,
    random_perfect_family,
    vectors_to_partitions,
    verify_perfect,
)
from .pointsets import hammersley, random_uniform, van_der_corput

__version__ = "0.1.0"

__all__ = [
    "AxisBox",
    "BoundReport",
    "BudgetExceededError",
    "CaseTag",
    "CollisionCertificate",
    "ConstructionFailedError",
    "EmptyBoxError",
    "LargeEmptyBoxFinder",
    "MaxEmptyBoxOracle",
    "PartitionFamily",
    "PointSet",
    "VectorFamily",
    "asymptotic_bases",
    "brute_force_p",
    "construct_binary_optimal",
    "construct_block_family",
    "find_large_empty_box",
    "hammersley",
    "is_empty_box",
    "lym_check",
    "max_empty_box_exact",
    "p_binary_exact",
    "p_bounds",
    "partitions_to_vectors",
    "random_perfect_family",
    "random_uniform",
    "select_min_slab",
    "slicing_bound_box",
    "strictly_inside",
    "van_der_corput",
    "vectors_to_partitions",
    "verify_perfect",
    "volume",
    "volume_lower_bound",
    "volume_upper_bound_const",
]
