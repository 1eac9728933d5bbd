"""Exact symmetric-group cycle-type statistics under the star-transposition
and random i-cycle shuffles: signed rim-hook diagrams, closed-form tensor
multiplicities, exact walk moments, brute-force oracles, and Monte Carlo."""

__version__ = "0.1.0"

from .partitions import Partition, as_partition, dimension, partitions_of
from .walks import WalkSpec

__all__ = [
    "Partition",
    "WalkSpec",
    "as_partition",
    "dimension",
    "partitions_of",
    "__version__",
]
