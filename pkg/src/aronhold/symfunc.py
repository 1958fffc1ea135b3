"""Symmetric polynomials in three variables.

Everything is stored in the monomial-symmetric basis ``m_mu`` keyed by
:class:`~aronhold.weights.Partition`, with Python ints as coefficients.
"""

from __future__ import annotations

import threading
from collections.abc import Iterable, Iterator, Mapping
from functools import lru_cache
from itertools import permutations

from aronhold.weights import ZERO, Partition, leq_componentwise, partitions_of, size

RHO = (2, 1, 0)


class NotACharacter(ArithmeticError):
    """A Schur decomposition produced a negative multiplicity."""


class NonIntegralRecurrence(ArithmeticError):
    """The Newton recurrence for a symmetric power hit an inexact division."""


def orbit(exps: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    """Distinct permutations of an exponent vector."""
    return sorted(set(permutations(exps)))


def _sorted_key(exps) -> Partition:
    return Partition(*sorted(exps, reverse=True))


class SymPoly:
    """Homogeneous symmetric polynomial ``sum c_mu m_mu``."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Partition, int] = {}
        for key, coeff in items:
            key = Partition(*key)
            if key[0] < key[1] or key[1] < key[2] or key[2] < 0:
                raise ValueError(f"key {key} is not a partition")
            if coeff:
                clean[key] = clean.get(key, 0) + coeff
                if not clean[key]:
                    del clean[key]
        degrees = {size(k) for k in clean}
        if len(degrees) > 1:
            raise ValueError(f"inhomogeneous symmetric polynomial, degrees {sorted(degrees)}")
        self.terms = clean
        self.degree = degrees.pop() if degrees else None

    @classmethod
    def monomial(cls, *parts: int) -> SymPoly:
        parts = tuple(parts) + (0,) * (3 - len(parts))
        return cls({Partition(*parts): 1})

    def __repr__(self) -> str:
        if not self.terms:
            return "SymPoly(0)"
        body = " + ".join(f"{c}*m{tuple(k)}" for k, c in sorted(self.terms.items(), reverse=True))
        return f"SymPoly({body})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: SymPoly) -> SymPoly:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return SymPoly(out)

    def __sub__(self, other: SymPoly) -> SymPoly:
        return self + other.scale(-1)

    def __mul__(self, other: SymPoly) -> SymPoly:
        return mono_mul(self, other)

    def scale(self, c: int) -> SymPoly:
        return SymPoly({k: c * v for k, v in self.terms.items()})

    def expand(self) -> Iterator[tuple[tuple[int, int, int], int]]:
        """Every monomial ``x^a y^b z^c`` with its coefficient."""
        for key, c in self.terms.items():
            for e in orbit(key):
                yield e, c

    def dimension(self) -> int:
        """Sum of all monomial coefficients, i.e. the value at (1, 1, 1)."""
        return sum(c * len(orbit(k)) for k, c in self.terms.items())


ONE = SymPoly({ZERO: 1})


def mono_mul(f: SymPoly, g: SymPoly) -> SymPoly:
    """Product of two symmetric polynomials.

    The smaller-support factor is expanded into all its monomials and added
    to the orbit representative of each key of the other factor. Summing the
    S3-translates of those partial products recovers the full product, which
    rescales each collected coefficient by ``|orbit(key)| / |orbit(nu)|``.
    """
    if not f.terms or not g.terms:
        return SymPoly()
    if len(f.terms) < len(g.terms):
        f, g = g, f
    g_full = list(g.expand())
    acc: dict[Partition, int] = {}
    for kappa, fc in f.terms.items():
        partial: dict[Partition, int] = {}
        for beta, gc in g_full:
            nu = _sorted_key((kappa[0] + beta[0], kappa[1] + beta[1], kappa[2] + beta[2]))
            partial[nu] = partial.get(nu, 0) + gc
        n_kappa = len(orbit(kappa))
        for nu, c in partial.items():
            num = fc * c * n_kappa
            n_nu = len(orbit(nu))
            if num % n_nu:
                raise ArithmeticError("orbit rescaling is not exact")
            acc[nu] = acc.get(nu, 0) + num // n_nu
    return SymPoly(acc)


def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``.

    Tableaux on {1,2,3} are Gelfand-Tsetlin patterns
    ``lam / (p, q) / r`` with interlacing rows; the content is
    ``(r, p + q - r, |lam| - p - q)``. With ``r = mu[0]`` fixed this counts
    the admissible ``p`` for ``q = mu[0] + mu[1] - p``.
    """
    if size(lam) != size(mu) or lam[2] < 0:
        return 0
    l1, l2, l3 = lam
    r = mu[0]
    s = mu[0] + mu[1]
    count = 0
    for p in range(max(l2, r), l1 + 1):
        q = s - p
        if l3 <= q <= l2 and q <= r:
            count += 1
    return count


@lru_cache(maxsize=None)
def schur_poly(lam: Partition) -> SymPoly:
    """The Schur polynomial ``s_lam(x, y, z)`` in the monomial basis."""
    lam = Partition(*lam)
    shift = lam[2]
    core = Partition(lam[0] - shift, lam[1] - shift, 0)
    terms = {}
    for mu in partitions_of(size(core), core[0]):
        k = kostka(core, mu)
        if k:
            terms[Partition(mu[0] + shift, mu[1] + shift, mu[2] + shift)] = k
    return SymPoly(terms)


class SchurExpansion(dict):
    """Finite map ``Partition -> multiplicity`` with no zero entries."""

    def __init__(self, data: Mapping[Partition, int] | Iterable = ()):
        super().__init__()
        items = data.items() if isinstance(data, Mapping) else data
        for key, value in items:
            key = Partition(*key)
            total = self.get(key, 0) + value
            if total:
                self[key] = total
            else:
                self.pop(key, None)

    def __missing__(self, key):
        return 0

    def to_text(self) -> str:
        return "".join(f"{self[k]}  {k}\n" for k in sorted(self))

    def to_sympoly(self) -> SymPoly:
        out = SymPoly()
        for lam, c in self.items():
            out = out + schur_poly(lam).scale(c)
        return out


def schur_decompose(f: SymPoly) -> SchurExpansion:
    """Write ``f`` as an integer combination of Schur polynomials.

    Peels off the lexicographically largest monomial each round; ``s_lam``
    has leading monomial ``x^lam`` with coefficient 1, so the loop ends.
    """
    rest = dict(f.terms)
    out: dict[Partition, int] = {}
    while rest:
        lead = max(rest)
        c = rest[lead]
        out[lead] = c
        for mu, k in schur_poly(lead).terms.items():
            v = rest.get(mu, 0) - c * k
            if v:
                rest[mu] = v
            else:
                rest.pop(mu, None)
    negative = {k: v for k, v in out.items() if v < 0}
    if negative:
        raise NotACharacter(f"negative multiplicities {sorted(negative.items())}")
    return SchurExpansion(out)


def power_substitute(f: SymPoly, i: int) -> SymPoly:
    """``f(x^i, y^i, z^i)``."""
    if i < 1:
        raise ValueError("i must be positive")
    return SymPoly({Partition(i * k[0], i * k[1], i * k[2]): c for k, c in f.terms.items()})


def sym_power_character(chi: SymPoly, d: int) -> SymPoly:
    """Character of ``Sym^d U`` from the character ``chi`` of ``U``.

    Uses ``n h_n = sum_{i=1..n} p_i h_{n-i}`` where ``p_i`` is ``chi`` with
    every variable raised to the ``i``-th power.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    h = [ONE]
    powers: list[SymPoly] = []
    for n in range(1, d + 1):
        powers.append(power_substitute(chi, n))
        total = SymPoly()
        for i in range(1, n + 1):
            total = total + mono_mul(powers[i - 1], h[n - i])
        quotient = {}
        for k, c in total.terms.items():
            q, r = divmod(c, n)
            if r:
                raise NonIntegralRecurrence(f"coefficient {c} of m{tuple(k)} not divisible by {n}")
            quotient[k] = q
        h.append(SymPoly(quotient))
    return h[d]


def complete_homogeneous(m: int) -> SymPoly:
    """Character of ``Sym^m C^3``: every monomial of degree ``m`` once."""
    return SymPoly({mu: 1 for mu in partitions_of(m)})


_pleth_lock = threading.Lock()
_pleth_cache: dict[tuple[int, int], SchurExpansion] = {}


def plethysm_expansion(d: int, m: int) -> SchurExpansion:
    """Schur expansion of ``Sym^d(Sym^m C^3)``, memoized per ``(d, m)``."""
    if d < 0 or m < 1:
        raise ValueError("need d >= 0 and m >= 1")
    key = (d, m)
    cached = _pleth_cache.get(key)
    if cached is not None:
        return cached
    result = schur_decompose(sym_power_character(complete_homogeneous(m), d))
    with _pleth_lock:
        return _pleth_cache.setdefault(key, result)


def plethysm_coeff(d: int, m: int, lam: Partition) -> int:
    """Multiplicity of ``V(lam)`` in ``Sym^d(Sym^m C^3)``."""
    return plethysm_expansion(d, m)[Partition(*lam)]


@lru_cache(maxsize=None)
def _weights_of(lam: Partition) -> tuple[tuple[tuple[int, int, int], int], ...]:
    """All weights of ``V(lam)`` with multiplicities."""
    return tuple(schur_poly(lam).expand())


def _straighten(gamma: tuple[int, int, int]) -> tuple[int, Partition] | None:
    """Sign and dominant weight for ``gamma - rho`` under the dot action, or None if singular."""
    if len(set(gamma)) < 3:
        return None
    order = sorted(range(3), key=lambda i: -gamma[i])
    inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if order[i] > order[j])
    g = [gamma[i] for i in order]
    return (-1) ** inversions, Partition(g[0] - RHO[0], g[1] - RHO[1], g[2] - RHO[2])


@lru_cache(maxsize=None)
def _schur_mul_cached(lam: Partition, mu: Partition) -> SchurExpansion:
    out: dict[Partition, int] = {}
    for beta, mult in _weights_of(mu):
        hit = _straighten(tuple(lam[i] + beta[i] + RHO[i] for i in range(3)))
        if hit is not None:
            sign, nu = hit
            out[nu] = out.get(nu, 0) + sign * mult
    return SchurExpansion(out)


def schur_mul(lam: Partition, mu: Partition) -> SchurExpansion:
    """Littlewood-Richardson expansion of ``s_lam * s_mu`` in three variables.

    Brauer-Klimyk: shift ``lam + rho`` by every weight of ``V(mu)`` and fold
    the result back into the dominant chamber with the sign of the sorting
    permutation; walls cancel.
    """
    return _schur_mul_cached(Partition(*lam), Partition(*mu))


def multi_lr(nus: Iterable[Partition], lam: Partition) -> int:
    """Coefficient of ``s_lam`` in the product of ``s_nu`` over ``nus``."""
    lam = Partition(*lam)
    nus = [Partition(*nu) for nu in nus if tuple(nu) != ZERO]
    if sum(size(nu) for nu in nus) != size(lam):
        return 0
    current = {ZERO: 1}
    for nu in nus:
        nxt: dict[Partition, int] = {}
        for alpha, c in current.items():
            for beta, k in schur_mul(alpha, nu).items():
                if leq_componentwise(beta, lam):
                    nxt[beta] = nxt.get(beta, 0) + c * k
        current = {k: v for k, v in nxt.items() if v}
        if not current:
            return 0
    return current.get(lam, 0)
