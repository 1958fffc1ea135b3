"""Partitions with at most three parts, viewed as polynomial dominant weights of GL(3)."""

from __future__ import annotations

import re
from typing import NamedTuple


class NotDominant(ValueError):
    """Raised for a triple that is not weakly decreasing and nonnegative."""


class Partition(NamedTuple):
    """A weakly decreasing triple of nonnegative integers.

    Tuple ordering is lexicographic, which is the canonical order used for
    enumeration and output. Construct through :func:`make_partition` when the
    input is not already known to be dominant.
    """

    l1: int
    l2: int
    l3: int

    def __str__(self) -> str:
        return f"({self.l1},{self.l2},{self.l3})"

    @property
    def size(self) -> int:
        return self.l1 + self.l2 + self.l3

    def __add__(self, other):  # type: ignore[override]
        if isinstance(other, tuple) and len(other) == 3:
            return Partition(self.l1 + other[0], self.l2 + other[1], self.l3 + other[2])
        return NotImplemented


ZERO = Partition(0, 0, 0)
DET = Partition(1, 1, 1)


def is_dominant(c1: int, c2: int, c3: int) -> bool:
    return c1 >= c2 >= c3 >= 0


def make_partition(c1: int, c2: int, c3: int) -> Partition:
    if not is_dominant(c1, c2, c3):
        raise NotDominant(f"({c1},{c2},{c3}) is not a partition")
    return Partition(int(c1), int(c2), int(c3))


_LITERAL = re.compile(r"^\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def parse_partition(text: str) -> Partition:
    """Parse a literal such as ``"(6,3,0)"``; parentheses are mandatory."""
    m = _LITERAL.match(text)
    if m is None:
        raise ValueError(f"malformed partition literal: {text!r}")
    return make_partition(*(int(g) for g in m.groups()))


def leq_componentwise(mu: Partition, lam: Partition) -> bool:
    return all(m <= l for m, l in zip(mu, lam))


def size(lam: Partition) -> int:
    return lam[0] + lam[1] + lam[2]


def mu_hat(mu: Partition, k: int) -> int:
    """Number of entries of ``mu`` equal to ``k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return sum(1 for part in mu if part == k)


def shift_down(lam: Partition, kappa: Partition) -> Partition | None:
    """``lam - kappa`` if that is again a partition, else None."""
    diff = (lam[0] - kappa[0], lam[1] - kappa[1], lam[2] - kappa[2])
    if is_dominant(*diff):
        return Partition(*diff)
    return None


def weyl_dim(lam: Partition) -> int:
    """Dimension of the irreducible GL(3)-module with highest weight ``lam``."""
    a, b, c = lam
    return (a - b + 1) * (b - c + 1) * (a - c + 2) // 2


def partitions_of(n: int, max_first_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` into at most three parts, ascending lexicographically."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    top = n if max_first_part is None else min(n, max_first_part)
    out = []
    for a in range(-(-n // 3), top + 1):
        rest = n - a
        for b in range(-(-rest // 2), min(a, rest) + 1):
            out.append(Partition(a, b, rest - b))
    return out
