"""Multiplicities in the coordinate rings of the Fermat cubic orbit closure.

For a partition ``lam`` of ``3d``:

* ``a_lam`` is the multiplicity of ``V(lam)`` in the polynomial part of the
  coordinate ring of the orbit, equal to ``dim V(lam)^H`` for the stabilizer
  ``H``; computed either by character averaging or by the plethysm/LR formula.
* ``b_lam`` is its multiplicity in the coordinate ring of the orbit closure,
  the hypersurface cut out by the degree-4 Aronhold invariant of weight
  ``(4,4,4)``.
* ``m_lam = a_lam - b_lam`` is the multiplicity in the quotient.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from aronhold import stabilizer as stab
from aronhold.symfunc import multi_lr, plethysm_coeff, plethysm_expansion
from aronhold.weights import (
    Partition,
    leq_componentwise,
    mu_hat,
    partitions_of,
    shift_down,
    size,
    weyl_dim,
)

ARONHOLD_WEIGHT = Partition(4, 4, 4)
METHODS = ("formula", "character", "both")


class BugNegative(ArithmeticError):
    """A multiplicity that must be nonnegative came out negative."""


class MethodMismatch(ArithmeticError):
    """The two computations of ``a_lam`` disagree."""

    def __init__(self, mismatches: list[tuple[Partition, int, int]]):
        self.mismatches = mismatches
        lines = ", ".join(f"{lam}: formula={f} character={c}" for lam, f, c in mismatches)
        super().__init__(f"a_lambda methods disagree at {lines}")


def b_lambda(lam: Partition) -> int:
    """Multiplicity of ``V(lam)`` in degree ``|lam|/3`` of ``C[V]/(Aronhold)``."""
    lam = Partition(*lam)
    if size(lam) % 3:
        return 0
    d = size(lam) // 3
    total = plethysm_coeff(d, 3, lam)
    shifted = shift_down(lam, ARONHOLD_WEIGHT)
    if d >= 4 and shifted is not None:
        total -= plethysm_coeff(d - 4, 3, shifted)
    if total < 0:
        raise BugNegative(f"b_lambda{lam} = {total}")
    return total


def a_lambda_formula(lam: Partition) -> int:
    """``a_lam`` as a sum of multi-LR coefficients times plethysm coefficients.

    Sums over partitions ``mu`` of ``d`` with at most three parts; the value
    ``k`` occurring ``mu_hat(mu, k)`` times contributes a factor
    ``Sym^{mu_hat}(Sym^{3k} C^3)``.
    """
    lam = Partition(*lam)
    if size(lam) % 3:
        return 0
    d = size(lam) // 3
    total = 0
    for mu in partitions_of(d):
        factors = []
        for k in sorted({part for part in mu if part > 0}):
            expansion = plethysm_expansion(mu_hat(mu, k), 3 * k)
            factors.append([(nu, c) for nu, c in sorted(expansion.items()) if leq_componentwise(nu, lam)])
        for choice in product(*factors):
            weight = math.prod(c for _, c in choice)
            total += weight * multi_lr([nu for nu, _ in choice], lam)
    return total


def a_lambda_character(lam: Partition) -> int:
    return stab.a_lambda_character(Partition(*lam))


def a_lambda(lam: Partition, method: str = "formula") -> int:
    if method == "formula":
        return a_lambda_formula(lam)
    if method == "character":
        return a_lambda_character(lam)
    if method == "both":
        f, c = a_lambda_formula(lam), a_lambda_character(lam)
        if f != c:
            raise MethodMismatch([(Partition(*lam), f, c)])
        return f
    raise ValueError(f"unknown method {method!r}")


def m_lambda(lam: Partition, method: str = "formula") -> int:
    m = a_lambda(lam, method) - b_lambda(lam)
    if m < 0:
        raise BugNegative(f"m_lambda{tuple(lam)} = {m}")
    return m


@dataclass(frozen=True)
class MultiplicityRow:
    lam: Partition
    a: int
    b: int
    m: int
    degree: int

    def __post_init__(self):
        if self.m != self.a - self.b or self.m < 0:
            raise BugNegative(f"inconsistent row {self}")
        if size(self.lam) != 3 * self.degree:
            raise ValueError(f"{self.lam} does not have size 3*{self.degree}")


def _row_for(args: tuple[Partition, str]) -> tuple[Partition, int | None, int | None, int]:
    lam, method = args
    f = a_lambda_formula(lam) if method in ("formula", "both") else None
    c = a_lambda_character(lam) if method in ("character", "both") else None
    a = f if f is not None else c
    b = b_lambda(lam) if a else 0
    return lam, f, c, b


def multiplicity_table(
    max_degree: int, method: str = "both", jobs: int = 1, min_degree: int = 1
) -> list[MultiplicityRow]:
    """Rows with ``a_lam > 0`` for ``min_degree <= d <= max_degree``, canonical order."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    tasks = [(lam, method) for d in range(max(1, min_degree), max_degree + 1) for lam in partitions_of(3 * d)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_row_for, tasks, chunksize=8))
    else:
        results = [_row_for(t) for t in tasks]

    mismatches = [(lam, f, c) for lam, f, c, _ in results if f is not None and c is not None and f != c]
    if mismatches:
        raise MethodMismatch(mismatches)
    rows = []
    for lam, f, c, b in results:
        a = f if f is not None else c
        if a > 0:
            rows.append(MultiplicityRow(lam, a, b, a - b, size(lam) // 3))
    return rows


def _rank(mat) -> int:
    rows = [[Fraction(v) for v in row] for row in mat]
    rank = 0
    for col in range(len(rows[0])):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def boundary_witness() -> tuple[tuple[int, int, int], list[list[int]]]:
    """A point ``w`` on the Fermat curve and the rank-one map with every column ``w``.

    The map kills the Fermat cubic under precomposition, yet its orbit under
    the finite stabilizer cannot approach zero.
    """
    w = (1, -1, 0)
    a = [[w[i]] * 3 for i in range(3)]
    if stab.FERMAT.evaluate(w) != 0:
        raise AssertionError(f"{w} is not on the Fermat curve")
    if not stab.compose_with_matrix(stab.FERMAT, a).is_zero():
        raise AssertionError("Fermat o a is not zero")
    if _rank(a) != 1:
        raise AssertionError("witness map is not of rank one")
    return w, a


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    counterexamples: list = field(default_factory=list)


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "", counterexamples=()) -> None:
        self.checks.append(Check(name, passed, detail, list(counterexamples)))


def validate(max_degree: int, jobs: int = 1) -> ValidationReport:
    report = ValidationReport()

    for d in range(3 * max_degree + 1):
        lams = partitions_of(d)
        dims = [weyl_dim(lam) for lam in lams]
        got = sum(x * x for x in dims)
        want = math.comb(d + 8, 8)
        squares = " + ".join(f"{x}^2" for x in dims)
        report.add(f"Cauchy d={d}", got == want, f"{squares} = {got}, C({d + 8},8) = {want}")

    for d in range(max_degree + 1):
        exp = plethysm_expansion(d, 3)
        got = sum(c * weyl_dim(lam) for lam, c in exp.items())
        want = math.comb(d + 9, 9)
        report.add(f"Sym^{d} Sym^3 dimension", got == want, f"{got} vs C({d + 9},9) = {want}")

    lams = [lam for n in range(3 * max_degree + 1) for lam in partitions_of(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            formula = list(pool.map(a_lambda_formula, lams, chunksize=8))
            character = list(pool.map(a_lambda_character, lams, chunksize=8))
    else:
        formula = [a_lambda_formula(lam) for lam in lams]
        character = [a_lambda_character(lam) for lam in lams]
    bad = [(str(lam), f, c) for lam, f, c in zip(lams, formula, character) if f != c]
    report.add("a_lambda formula == character", not bad, f"{len(lams)} partitions, |lam| <= {3 * max_degree}", bad)

    neg = []
    for lam, a in zip(lams, formula):
        try:
            b = b_lambda(lam)
        except BugNegative:
            b = None
        if b is None or b > a or (size(lam) % 3 and a):
            neg.append((str(lam), a, b))
    report.add("0 <= b_lambda <= a_lambda", not neg, "", neg)

    group = stab.enumerate_stabilizer()
    members = set(group)
    not_closed = [(str(g), str(h)) for g in group for h in group if g @ h not in members]
    no_inverse = [str(g) for g in group if g.inverse() not in members or g @ g.inverse() != stab.IDENTITY]
    report.add("stabilizer order", len(members) == 162 == len(group), f"{len(group)} elements")
    report.add("stabilizer closure", not not_closed and stab.IDENTITY in members, "", not_closed[:10])
    report.add("stabilizer inverses", not no_inverse, "", no_inverse[:10])
    moved = [str(h) for h in group if stab.act_on_cubic(stab.FERMAT, h) != stab.FERMAT]
    report.add("stabilizer fixes x^3+y^3+z^3", not moved, "", moved)

    try:
        w, a = boundary_witness()
        report.add("rank-one boundary witness", True, f"w={w}")
    except AssertionError as exc:
        report.add("rank-one boundary witness", False, str(exc))
    return report
