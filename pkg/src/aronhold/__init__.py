"""Exact GL(3) multiplicity computations for the Fermat cubic orbit closure."""

from aronhold.weights import NotDominant, Partition, make_partition, parse_partition

__all__ = ["NotDominant", "Partition", "make_partition", "parse_partition"]
__version__ = "0.1.0"
