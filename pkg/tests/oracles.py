"""Brute-force reference computations, deliberately naive and independent of the package."""

from collections import Counter
from itertools import combinations_with_replacement, product


def triples_summing_to(n):
    return [(a, b, c) for a in range(n + 1) for b in range(n + 1) for c in range(n + 1)
            if a >= b >= c and a + b + c == n]


def ssyt(shape, letters=3):
    """All semistandard fillings of ``shape`` (a tuple of row lengths) by 1..letters."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    out = []
    for filling in product(range(1, letters + 1), repeat=len(cells)):
        t = dict(zip(cells, filling))
        ok = all(t[(i, j)] <= t[(i, j + 1)] for (i, j) in cells if (i, j + 1) in t) and all(
            t[(i, j)] < t[(i + 1, j)] for (i, j) in cells if (i + 1, j) in t
        )
        if ok:
            out.append(t)
    return out


def schur_monomials(shape):
    """Full monomial expansion {exponent: coeff} of s_shape(x, y, z) by tableau enumeration."""
    counts = Counter()
    for t in ssyt(shape):
        w = [0, 0, 0]
        for v in t.values():
            w[v - 1] += 1
        counts[tuple(w)] += 1
    return dict(counts)


def sym_power_by_multisets(m, d):
    """Dominant-monomial coefficients of the character of Sym^d(Sym^m C^3)."""
    monos = [(a, b, m - a - b) for a in range(m + 1) for b in range(m + 1 - a)]
    counts = Counter()
    for combo in combinations_with_replacement(monos, d):
        e = tuple(sum(v[i] for v in combo) for i in range(3))
        if e[0] >= e[1] >= e[2]:
            counts[e] += 1
    return dict(counts)


def horizontal_strips(lam, k):
    """Partitions nu with at most 3 parts obtained from lam by adding a k-box horizontal strip."""
    out = []
    for nu in triples_summing_to(sum(lam) + k):
        if nu[0] >= lam[0] >= nu[1] >= lam[1] >= nu[2] >= lam[2]:
            out.append(nu)
    return out


def partitions_into_at_most_three(n):
    return len(triples_summing_to(n))
