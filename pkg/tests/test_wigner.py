from fractions import Fraction
import itertools
import random

import pytest
from hypothesis import given, settings

from tetrasum.spin import DomainError, SignedSqrtRational, ssr_sum
from tetrasum.wigner import (
    SixJCache,
    Tetra6j,
    canonical_key,
    classical_images,
    racah_parameters,
    racah_series_length,
    regge_image,
    sixj,
    sixj_cached,
    sixj_exact,
    sixj_oracle,
    symmetry_orbit,
    three_j,
)

from conftest import admissible_symbols, random_admissible

H = Fraction(1, 2)

# values produced by sixj_oracle and frozen
ORACLE_VALUES = {
    (2, 2, 2, 2, 2, 2): "+sqrt(1/36)",
    (3, 3, 2, 1, 1, 2): "+sqrt(5/72)",
    (4, 4, 4, 2, 2, 2): "+sqrt(7/300)",
    (2, 2, 2, 2, 2, 0): "-sqrt(1/9)",
    (6, 4, 2, 3, 5, 3): "-sqrt(2/75)",
    (4, 3, 1, 4, 3, 1): "+sqrt(1/400)",
    (6, 6, 6, 6, 6, 6): "-sqrt(1/196)",
}


@pytest.mark.parametrize("spins,expected", sorted(ORACLE_VALUES.items()))
def test_sixj_frozen_values(spins, expected):
    s = Tetra6j(*spins)
    assert str(sixj_exact(s)) == expected
    assert str(sixj_oracle(s)) == expected


def test_sixj_examples():
    assert sixj(1, 1, 1, 1, 1, 1) == SignedSqrtRational(1, Fraction(1, 36))
    assert sixj(H, H, 1, H, H, 0) == SignedSqrtRational(1, Fraction(1, 4))
    assert sixj(1, 1, 1, 1, 1, 0) == SignedSqrtRational(-1, Fraction(1, 9))
    assert float(sixj(1, 1, 1, 1, 1, 1)) == pytest.approx(1 / 6)


def test_oracle_trivial_cases():
    assert sixj_oracle(Tetra6j(0, 0, 0, 0, 0, 0)) == SignedSqrtRational(1, 1)
    assert sixj_oracle(Tetra6j.of(1, 2, 4, 1, 2, 4)).is_zero()
    assert sixj_exact(Tetra6j.of(1, 2, 4, 1, 2, 4)).is_zero()


def test_tetra6j_layout():
    s = Tetra6j.of(1, 2, 3, 4, 5, 6)
    assert s.triads() == ((2, 4, 6), (2, 10, 12), (8, 4, 12), (8, 10, 6))
    assert str(Tetra6j.of(H, 1, H, 0, 1, 1)) == "{1/2 1 1/2; 0 1 1}"


def test_three_j_examples():
    assert three_j(1, 1, 0, 0, 0, 0) == SignedSqrtRational(-1, Fraction(1, 3))
    assert three_j(H, H, 0, H, -H, 0) == SignedSqrtRational(1, Fraction(1, 2))
    assert three_j(1, 1, 1, 1, 1, 1).is_zero()
    assert three_j(2, 2, 2, 0, 0, 0) == SignedSqrtRational(-1, Fraction(2, 35))


def test_three_j_rejects_m_beyond_j():
    with pytest.raises(DomainError):
        three_j(1, 1, 1, 2, -1, -1)
    with pytest.raises(DomainError):
        three_j(1, 1, 1, H, 0, -H)


@pytest.mark.parametrize("j1,j2,j3", [(1, 1, 1), (H, 1, Fraction(3, 2)), (2, 1, 2)])
def test_three_j_row_normalization(j1, j2, j3):
    # sum over m1, m2 of (2 j3 + 1) (3j)^2 = 1 for each m3
    t1, t2 = int(2 * j1), int(2 * j2)
    for m3 in (Fraction(k, 2) for k in range(-int(2 * j3), int(2 * j3) + 1, 2)):
        total = Fraction(0)
        for a in range(-t1, t1 + 1, 2):
            m1 = Fraction(a, 2)
            m2 = -m1 - m3
            if abs(m2) <= j2 and (j2 - m2).denominator == 1:
                total += three_j(j1, j2, j3, m1, m2, m3).radicand
        assert total * (2 * j3 + 1) == 1


def test_oracle_agrees_with_racah_small_spins():
    for spins in itertools.product(range(4), repeat=6):
        s = Tetra6j(*spins)
        if s.is_admissible():
            assert sixj_exact(s) == sixj_oracle(s), s


@given(admissible_symbols(top=8))
@settings(max_examples=60, deadline=None)
def test_oracle_agrees_with_racah_random(s):
    assert sixj_exact(s) == sixj_oracle(s)


@given(admissible_symbols(top=24))
def test_zero_spin_reduction(s):
    a, b, c = s[0], s[1], s[2]
    val = sixj_exact(Tetra6j(a, b, c, b, a, 0))
    sign = -1 if ((a + b + c) // 2) % 2 else 1
    assert val == SignedSqrtRational(sign, Fraction(1, (a + 1) * (b + 1)))


def test_symmetric_orbit_has_size_one():
    assert symmetry_orbit(Tetra6j.of(1, 1, 1, 1, 1, 1)) == {Tetra6j.of(1, 1, 1, 1, 1, 1)}


def test_generic_orbit_has_size_144():
    s = Tetra6j.of(3, 6, 5, Fraction(7, 2), Fraction(7, 2), Fraction(7, 2))
    assert s.is_admissible()
    orbit = symmetry_orbit(s)
    assert len(orbit) == 144
    assert len(symmetry_orbit(s, regge=False)) == 24
    assert {sixj_exact(t) for t in orbit} == {sixj_exact(s)}


def test_regge_example():
    s = Tetra6j.of(2, 2, 2, 1, 1, 1)
    assert regge_image(s) == Tetra6j.of(1, 1, 2, 2, 2, 1)
    assert sixj_exact(s) == sixj_exact(Tetra6j.of(1, 1, 2, 2, 2, 1))
    assert sixj_exact(s) == SignedSqrtRational(1, Fraction(7, 300))


def test_regge_skips_non_integer_sum():
    assert regge_image(Tetra6j(1, 0, 1, 0, 0, 0)) is None


@given(admissible_symbols(top=16))
@settings(max_examples=40, deadline=None)
def test_orbit_members_evaluate_identically(s):
    orbit = symmetry_orbit(s)
    assert 144 % len(orbit) == 0
    assert {sixj_exact(t) for t in orbit} == {sixj_exact(s)}


def test_classical_images_count():
    assert len(classical_images(Tetra6j(0, 1, 2, 3, 4, 5))) == 24
    assert len(set(classical_images(Tetra6j(0, 1, 2, 3, 4, 5)))) == 24


def test_tie_choice_does_not_change_value():
    rng = random.Random(5)
    checked = 0
    while checked < 200:
        s = random_admissible(rng, 10)
        _, betas = racah_parameters(s)
        low = min(betas)
        ties = [i for i in range(3) if betas[i] == low]
        vals = {sixj_exact(s, pick=i) for i in ties}
        assert len(vals) == 1
        checked += len(ties) > 1
    with pytest.raises(DomainError):
        s = Tetra6j.of(1, 1, 1, 1, 1, 0)
        _, betas = racah_parameters(s)
        sixj_exact(s, pick=max(range(3), key=lambda i: betas[i]))


@given(admissible_symbols(top=20))
def test_racah_series_terminates_early(s):
    alphas, betas = racah_parameters(s)
    assert racah_series_length(s) <= min(betas) - max(alphas) + 1


def test_cache_hits_and_keys():
    cache = SixJCache()
    s = Tetra6j.of(2, 2, 2, 1, 1, 1)
    v = sixj_cached(s, cache)
    assert (cache.hits, cache.misses) == (0, 1)
    assert sixj_cached(s, cache) == v and cache.hits == 1
    # column permutation of a cached symbol shares the canonical key
    perm = Tetra6j(s[1], s[0], s[2], s[4], s[3], s[5])
    assert canonical_key(perm) == canonical_key(s)
    sixj_cached(perm, cache)
    assert cache.hits == 2 and len(cache) == 1


def test_cache_skips_inadmissible():
    cache = SixJCache()
    assert sixj_cached(Tetra6j.of(1, 2, 4, 1, 1, 1), cache).is_zero()
    assert len(cache) == 0 and cache.misses == 0


def test_regge_cache_folds_regge_images():
    cache = SixJCache(regge=True)
    sixj_cached(Tetra6j.of(2, 2, 2, 1, 1, 1), cache)
    sixj_cached(Tetra6j.of(1, 1, 2, 2, 2, 1), cache)
    assert cache.hits == 1 and len(cache) == 1


@given(admissible_symbols(top=12))
@settings(max_examples=50, deadline=None)
def test_cached_equals_fresh(s):
    cache = SixJCache(regge=True)
    assert sixj_cached(s, cache) == sixj_exact(s)
    for t in list(symmetry_orbit(s))[:10]:
        assert sixj_cached(t, cache) == sixj_exact(t)


def test_orthogonality_via_ssr_sum_small():
    # sum_x (2x+1) {1 1 x; 1 1 0}^2 = 1 / (2*0+1)... with fixed p = q = 0
    terms = [sixj_exact(Tetra6j(2, 2, x, 2, 2, 0)) * sixj_exact(Tetra6j(2, 2, x, 2, 2, 0)) * (x + 1)
             for x in (0, 2, 4)]
    assert ssr_sum(terms) == SignedSqrtRational(1, 1)
