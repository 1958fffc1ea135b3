"""The monomial stabilizer of the Fermat cubic and exact character averaging over it.

Scalars live in Q(w), w a primitive cube root of unity. Character values of
GL(3)-modules on this group are symmetric in the eigenvalues, so they are
computed from the elementary symmetric values (e1, e2, e3) and never need
ninth roots of unity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from aronhold.weights import Partition


class NonIntegralAverage(ArithmeticError):
    """A character average over the group is not a nonnegative rational integer."""


@dataclass(frozen=True)
class EisensteinRational:
    """``re + wo * w`` with ``w**2 = -1 - w``."""

    re: Fraction = Fraction(0)
    wo: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "wo", Fraction(self.wo))

    @classmethod
    def coerce(cls, x) -> EisensteinRational:
        if isinstance(x, EisensteinRational):
            return x
        return cls(Fraction(x))

    @classmethod
    def omega_power(cls, k: int) -> EisensteinRational:
        return _OMEGA_POWERS[k % 3]

    def __add__(self, other):
        other = EisensteinRational.coerce(other)
        return EisensteinRational(self.re + other.re, self.wo + other.wo)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinRational(-self.re, -self.wo)

    def __sub__(self, other):
        return self + (-EisensteinRational.coerce(other))

    def __rsub__(self, other):
        return EisensteinRational.coerce(other) - self

    def __mul__(self, other):
        return eisenstein_mul(self, EisensteinRational.coerce(other))

    __rmul__ = __mul__

    def conjugate(self) -> EisensteinRational:
        # w -> w^2 = -1 - w
        return EisensteinRational(self.re - self.wo, -self.wo)

    def norm(self) -> Fraction:
        return self.re * self.re - self.re * self.wo + self.wo * self.wo

    def __truediv__(self, other):
        other = EisensteinRational.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(w)")
        num = self * other.conjugate()
        return EisensteinRational(num.re / n, num.wo / n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.wo == 0 and self.re == other
        if isinstance(other, EisensteinRational):
            return self.re == other.re and self.wo == other.wo
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.wo))

    def __bool__(self):
        return bool(self.re) or bool(self.wo)

    def __str__(self) -> str:
        if not self.wo:
            return str(self.re)
        w = "w" if self.wo == 1 else "-w" if self.wo == -1 else f"{self.wo}*w"
        if not self.re:
            return w
        return f"{self.re} - {w[1:]}" if w.startswith("-") else f"{self.re} + {w}"


def eisenstein_mul(a: EisensteinRational, b: EisensteinRational) -> EisensteinRational:
    # (a0 + a1 w)(b0 + b1 w) = a0 b0 + (a0 b1 + a1 b0) w + a1 b1 (-1 - w)
    ww = a.wo * b.wo
    return EisensteinRational(a.re * b.re - ww, a.re * b.wo + a.wo * b.re - ww)


_OMEGA_POWERS = (
    EisensteinRational(1, 0),
    EisensteinRational(0, 1),
    EisensteinRational(-1, -1),
)
ZERO = EisensteinRational()
ONE = _OMEGA_POWERS[0]
OMEGA = _OMEGA_POWERS[1]


@dataclass(frozen=True, order=True)
class StabilizerElement:
    """Monomial matrix sending basis vector ``j`` to ``w**exps[j]`` times basis vector ``perm[j]``.

    ``perm`` holds 0-based images; text output uses 1-based cycle notation.
    """

    perm: tuple[int, int, int]
    exps: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"{self.perm} is not a permutation of 0..2")
        if any(e not in (0, 1, 2) for e in self.exps):
            raise ValueError(f"exponents {self.exps} must lie in {{0,1,2}}")

    def __matmul__(self, other: StabilizerElement) -> StabilizerElement:
        """Matrix product ``self @ other``."""
        perm = tuple(self.perm[other.perm[j]] for j in range(3))
        exps = tuple((other.exps[j] + self.exps[other.perm[j]]) % 3 for j in range(3))
        return StabilizerElement(perm, exps)

    def inverse(self) -> StabilizerElement:
        inv = [0, 0, 0]
        exps = [0, 0, 0]
        for j, i in enumerate(self.perm):
            inv[i] = j
            exps[i] = (-self.exps[j]) % 3
        return StabilizerElement(tuple(inv), tuple(exps))

    def matrix(self) -> list[list[EisensteinRational]]:
        m = [[ZERO] * 3 for _ in range(3)]
        for j in range(3):
            m[self.perm[j]][j] = EisensteinRational.omega_power(self.exps[j])
        return m

    def trace(self) -> EisensteinRational:
        t = ZERO
        for j in range(3):
            if self.perm[j] == j:
                t = t + EisensteinRational.omega_power(self.exps[j])
        return t

    def det(self) -> EisensteinRational:
        sign = _perm_sign(self.perm)
        return EisensteinRational.omega_power(sum(self.exps)) * sign

    def __str__(self) -> str:
        return f"{_cycles(self.perm)}[{','.join(map(str, self.exps))}]"


IDENTITY = StabilizerElement((0, 1, 2), (0, 0, 0))


def _perm_sign(perm) -> int:
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def _cycles(perm) -> str:
    seen = set()
    parts = []
    for start in range(3):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "()"


@lru_cache(maxsize=1)
def _stabilizer() -> tuple[StabilizerElement, ...]:
    return tuple(
        StabilizerElement(perm, exps)
        for perm in permutations(range(3))
        for exps in product(range(3), repeat=3)
    )


def enumerate_stabilizer() -> list[StabilizerElement]:
    """All 162 products of a permutation matrix and a diagonal matrix of cube roots of unity."""
    return list(_stabilizer())


Exponent = tuple[int, int, int]


@dataclass(frozen=True)
class CubicForm:
    """Ternary form stored as ``{(a, b, c): coefficient}`` for ``x^a y^b z^c``."""

    coeffs: dict

    def __post_init__(self):
        clean = {}
        for k, v in self.coeffs.items():
            k = tuple(int(e) for e in k)
            if len(k) != 3 or min(k) < 0 or sum(k) != 3:
                raise ValueError(f"{k} is not a cubic exponent")
            v = EisensteinRational.coerce(v)
            if v:
                clean[k] = v
        object.__setattr__(self, "coeffs", clean)

    def __eq__(self, other):
        if not isinstance(other, CubicForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, point) -> EisensteinRational:
        total = ZERO
        for (a, b, c), v in self.coeffs.items():
            total = total + v * _pow(point[0], a) * _pow(point[1], b) * _pow(point[2], c)
        return total

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for (a, b, c) in sorted(self.coeffs, reverse=True):
            v = self.coeffs[(a, b, c)]
            s = str(v)
            if v.wo and v.re:
                s = f"({s})"
            terms.append(f"{s} * x^{a} y^{b} z^{c}")
        return " + ".join(terms)


def _pow(x, n: int) -> EisensteinRational:
    out = ONE
    x = EisensteinRational.coerce(x)
    for _ in range(n):
        out = out * x
    return out


FERMAT = CubicForm({(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})


def compose_with_matrix(q: CubicForm, mat) -> CubicForm:
    """``q o mat``: substitute ``x_i -> sum_j mat[i][j] x_j`` and expand."""
    rows = [[EisensteinRational.coerce(v) for v in row] for row in mat]
    units = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    out: dict[Exponent, EisensteinRational] = {}
    for exps, coeff in q.coeffs.items():
        poly = {(0, 0, 0): coeff}
        for i, power in enumerate(exps):
            for _ in range(power):
                nxt: dict[Exponent, EisensteinRational] = {}
                for mono, c in poly.items():
                    for j in range(3):
                        if rows[i][j]:
                            key = tuple(mono[t] + units[j][t] for t in range(3))
                            nxt[key] = nxt.get(key, ZERO) + c * rows[i][j]
                poly = nxt
        for mono, c in poly.items():
            out[mono] = out.get(mono, ZERO) + c
    return CubicForm(out)


def act_on_cubic(q: CubicForm, g: StabilizerElement) -> CubicForm:
    return compose_with_matrix(q, g.matrix())


def element_symmetric_values(h: StabilizerElement):
    """Elementary symmetric functions ``(e1, e2, e3)`` of the eigenvalues of ``h``."""
    t1 = h.trace()
    t2 = (h @ h).trace()
    e2 = (t1 * t1 - t2) * Fraction(1, 2)
    return t1, e2, h.det()


# Hot path: character values lie in Z[w], so they are evaluated on integer
# pairs (re, wo) and only converted to EisensteinRational at the end.
def _zmul(x, y):
    ww = x[1] * y[1]
    return (x[0] * y[0] - ww, x[0] * y[1] + x[1] * y[0] - ww)


def _zsub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _to_int_pair(x: EisensteinRational) -> tuple[int, int]:
    if x.re.denominator != 1 or x.wo.denominator != 1:
        raise ArithmeticError(f"{x} is not an Eisenstein integer")
    return int(x.re), int(x.wo)


def _schur_value_int(lam: Partition, e1, e2, e3) -> tuple[int, int]:
    hk = [(1, 0)]
    for k in range(1, lam[0] + 3):
        v = _zmul(e1, hk[k - 1])
        if k >= 2:
            v = _zsub(v, _zmul(e2, hk[k - 2]))
        if k >= 3:
            t = _zmul(e3, hk[k - 3])
            v = (v[0] + t[0], v[1] + t[1])
        hk.append(v)

    def h(k: int):
        return hk[k] if k >= 0 else (0, 0)

    m = [[h(lam[i] - i + j) for j in range(3)] for i in range(3)]
    minor = lambda a, b, c, d: _zsub(_zmul(a, b), _zmul(c, d))  # noqa: E731
    t0 = _zmul(m[0][0], minor(m[1][1], m[2][2], m[1][2], m[2][1]))
    t1 = _zmul(m[0][1], minor(m[1][0], m[2][2], m[1][2], m[2][0]))
    t2 = _zmul(m[0][2], minor(m[1][0], m[2][1], m[1][1], m[2][0]))
    return (t0[0] - t1[0] + t2[0], t0[1] - t1[1] + t2[1])


def schur_value_at(lam: Partition, h: StabilizerElement) -> EisensteinRational:
    """Character of ``V(lam)`` at ``h`` via Jacobi-Trudi."""
    esym = tuple(_to_int_pair(v) for v in element_symmetric_values(h))
    re, wo = _schur_value_int(Partition(*lam), *esym)
    return EisensteinRational(re, wo)


@lru_cache(maxsize=1)
def _class_data() -> tuple[tuple[tuple, int], ...]:
    counts = Counter(
        tuple(_to_int_pair(v) for v in element_symmetric_values(h)) for h in _stabilizer()
    )
    return tuple(sorted(counts.items()))


@lru_cache(maxsize=None)
def character_average(lam: Partition) -> EisensteinRational:
    """``(1/|H|) sum_h chi_lam(h)`` without integrality checks."""
    order = len(_stabilizer())
    re = wo = 0
    for esym, count in _class_data():
        v = _schur_value_int(Partition(*lam), *esym)
        re += count * v[0]
        wo += count * v[1]
    return EisensteinRational(Fraction(re, order), Fraction(wo, order))


@lru_cache(maxsize=None)
def a_lambda_character(lam: Partition) -> int:
    """Dimension of the invariants of the stabilizer in ``V(lam)``."""
    avg = character_average(Partition(*lam))
    if avg.wo != 0 or avg.re.denominator != 1 or avg.re < 0:
        raise NonIntegralAverage(f"average over H at {tuple(lam)} is {avg}")
    return int(avg.re)
