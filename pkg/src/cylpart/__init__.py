"""Cylindric partitions with small profiles: bijections and q-series checks."""
from .partitions import (
    CylindricPartition,
    Profile,
    count_sequence,
    enumerate_cylindric,
    refined_counts,
    validate_cylindric,
)

__all__ = [
    "CylindricPartition",
    "Profile",
    "count_sequence",
    "enumerate_cylindric",
    "refined_counts",
    "validate_cylindric",
]
