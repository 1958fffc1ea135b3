import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from aronhold.symfunc import (
    ONE,
    NonIntegralRecurrence,
    NotACharacter,
    SchurExpansion,
    SymPoly,
    complete_homogeneous,
    kostka,
    mono_mul,
    multi_lr,
    plethysm_coeff,
    plethysm_expansion,
    power_substitute,
    schur_decompose,
    schur_mul,
    schur_poly,
    sym_power_character,
)
from aronhold.weights import Partition as P, partitions_of, weyl_dim
from oracles import horizontal_strips, schur_monomials, sym_power_by_multisets

m = SymPoly.monomial


def small_partitions(max_size):
    return [lam for n in range(max_size + 1) for lam in partitions_of(n)]


partition_st = st.sampled_from(small_partitions(8))


def test_sympoly_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        SymPoly({P(1, 0, 0): 1, P(2, 0, 0): 1})


def test_sympoly_drops_zero_coefficients():
    assert SymPoly({P(1, 0, 0): 0}).terms == {}
    assert SymPoly({P(1, 0, 0): 0}).degree is None


def test_mono_mul_examples():
    assert mono_mul(m(1), m(1)) == SymPoly({P(2, 0, 0): 1, P(1, 1, 0): 2})
    f = m(2, 1) + m(1, 1, 1).scale(3)
    assert mono_mul(f, ONE) == f
    assert mono_mul(m(1, 1, 1), m(1, 1, 1)) == m(2, 2, 2)


def _full(f: SymPoly) -> dict:
    return {e: c for e, c in f.expand()}


def _naive_product(f, g):
    out = {}
    for a, ca in f.expand():
        for b, cb in g.expand():
            e = (a[0] + b[0], a[1] + b[1], a[2] + b[2])
            out[e] = out.get(e, 0) + ca * cb
    return out


@settings(max_examples=60)
@given(partition_st, partition_st)
def test_mono_mul_matches_full_expansion(lam, mu):
    f, g = schur_poly(lam), schur_poly(mu) + m(*mu).scale(-2)
    assert _full(mono_mul(f, g)) == {k: v for k, v in _naive_product(f, g).items() if v}


def test_schur_poly_examples():
    assert schur_poly(P(1, 0, 0)) == m(1)
    assert schur_poly(P(1, 1, 1)) == m(1, 1, 1)
    assert schur_poly(P(2, 1, 0)) == m(2, 1) + m(1, 1, 1).scale(2)


@pytest.mark.parametrize("lam", small_partitions(7))
def test_schur_poly_matches_tableau_enumeration(lam):
    shape = tuple(p for p in lam if p)
    assert _full(schur_poly(lam)) == schur_monomials(shape)


def test_kostka_known_values():
    assert kostka(P(2, 1, 0), P(1, 1, 1)) == 2
    assert kostka(P(3, 2, 1), P(2, 2, 2)) == 2
    assert kostka(P(2, 2, 0), P(3, 1, 0)) == 0


@pytest.mark.parametrize("lam", small_partitions(12))
def test_schur_decompose_round_trip(lam):
    assert schur_decompose(schur_poly(lam)) == {lam: 1}


def test_schur_decompose_examples():
    assert schur_decompose(m(1)) == {P(1, 0, 0): 1}
    sym2sym3 = sym_power_character(complete_homogeneous(3), 2)
    assert schur_decompose(sym2sym3) == {P(6, 0, 0): 1, P(4, 2, 0): 1}


def test_schur_decompose_rejects_virtual_character():
    with pytest.raises(NotACharacter):
        schur_decompose(schur_poly(P(2, 1, 0)) - schur_poly(P(3, 0, 0)))


@settings(max_examples=40)
@given(st.lists(st.tuples(partition_st, st.integers(1, 3)), max_size=4), st.integers(0, 8))
def test_schur_decompose_reconstructs(combo, n):
    f = SymPoly()
    expected = SchurExpansion()
    for lam, c in combo:
        if sum(lam) == n:
            f = f + schur_poly(lam).scale(c)
            expected[lam] += c
    exp = schur_decompose(f)
    assert exp == expected
    assert exp.to_sympoly() == f


def test_power_substitute():
    assert power_substitute(m(1), 2) == m(2)
    f = schur_poly(P(3, 1, 0))
    assert power_substitute(f, 1) == f
    assert power_substitute(m(2, 1), 3) == m(6, 3)


def test_sym_power_character_examples():
    chi = complete_homogeneous(3)
    assert sym_power_character(chi, 0) == ONE
    assert sym_power_character(chi, 1) == chi
    sq = sym_power_character(chi, 2)
    assert sq.degree == 6
    assert sq.dimension() == 55


@pytest.mark.parametrize("d", range(5))
def test_sym_power_matches_multiset_enumeration(d):
    got = sym_power_character(complete_homogeneous(3), d)
    assert {tuple(k): v for k, v in got.terms.items()} == sym_power_by_multisets(3, d)


def test_sym_power_detects_corrupted_character(monkeypatch):
    import aronhold.symfunc as sf

    real = sf.power_substitute

    def doubled(f, i):
        out = real(f, i)
        return out + out if i == 2 else out

    monkeypatch.setattr(sf, "power_substitute", doubled)
    with pytest.raises(NonIntegralRecurrence):
        sf.sym_power_character(m(1), 2)


@pytest.mark.parametrize("d", range(9))
def test_plethysm_dimension_audit(d):
    exp = plethysm_expansion(d, 3)
    assert all(c > 0 for c in exp.values())
    assert sum(c * weyl_dim(lam) for lam, c in exp.items()) == math.comb(d + 9, 9)


def test_plethysm_coeff_examples():
    assert plethysm_coeff(1, 3, P(3, 0, 0)) == 1
    assert plethysm_coeff(2, 3, P(4, 2, 0)) == 1
    assert plethysm_coeff(2, 3, P(2, 2, 2)) == 0
    assert plethysm_coeff(4, 3, P(4, 4, 4)) == 1
    assert plethysm_coeff(0, 3, P(0, 0, 0)) == 1
    assert plethysm_coeff(0, 3, P(3, 0, 0)) == 0


def test_schur_mul_examples():
    assert schur_mul(P(1, 0, 0), P(1, 0, 0)) == {P(2, 0, 0): 1, P(1, 1, 0): 1}
    assert schur_mul(P(1, 0, 0), P(1, 1, 0)) == {P(2, 1, 0): 1, P(1, 1, 1): 1}
    assert schur_mul(P(4, 2, 1), P(0, 0, 0)) == {P(4, 2, 1): 1}
    # s21 * s21 truncated to three rows
    assert schur_mul(P(2, 1, 0), P(2, 1, 0)) == {
        P(4, 2, 0): 1, P(4, 1, 1): 1, P(3, 3, 0): 1, P(3, 2, 1): 2, P(2, 2, 2): 1}


@settings(max_examples=80)
@given(partition_st, partition_st)
def test_schur_mul_matches_monomial_oracle(lam, mu):
    assert schur_mul(lam, mu) == schur_decompose(mono_mul(schur_poly(lam), schur_poly(mu)))


@settings(max_examples=80)
@given(partition_st, partition_st)
def test_schur_mul_commutes(lam, mu):
    assert schur_mul(lam, mu) == schur_mul(mu, lam)


@pytest.mark.parametrize("lam", small_partitions(6))
@pytest.mark.parametrize("k", range(5))
def test_pieri(lam, k):
    expected = {P(*nu): 1 for nu in horizontal_strips(lam, k)}
    assert schur_mul(lam, P(k, 0, 0)) == expected


def test_multi_lr_examples():
    assert multi_lr([], P(0, 0, 0)) == 1
    assert multi_lr([P(3, 1, 0)], P(3, 1, 0)) == 1
    assert multi_lr([P(3, 1, 0)], P(2, 2, 0)) == 0
    assert multi_lr([P(1, 0, 0), P(1, 1, 0)], P(2, 1, 0)) == 1
    assert multi_lr([P(1, 0, 0), P(0, 0, 0), P(1, 1, 0)], P(2, 1, 0)) == 1
    assert multi_lr([P(1, 0, 0)], P(2, 0, 0)) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(small_partitions(5)), min_size=3, max_size=3), st.randoms())
def test_multi_lr_fold_order_irrelevant(nus, rnd):
    perm = list(nus)
    rnd.shuffle(perm)
    targets = partitions_of(sum(sum(nu) for nu in nus))
    assert [multi_lr(nus, t) for t in targets] == [multi_lr(perm, t) for t in targets]


def test_multi_lr_matches_monomial_product():
    rng = random.Random(7)
    pool = small_partitions(5)
    for _ in range(10):
        nus = rng.sample(pool, 3)
        prod = ONE
        for nu in nus:
            prod = mono_mul(prod, schur_poly(nu))
        exp = schur_decompose(prod)
        for lam in partitions_of(sum(sum(nu) for nu in nus)):
            assert multi_lr(nus, lam) == exp[lam]


def test_expansion_text_form():
    exp = schur_mul(P(1, 0, 0), P(1, 1, 0))
    assert exp.to_text() == "1  (1,1,1)\n1  (2,1,0)\n"
