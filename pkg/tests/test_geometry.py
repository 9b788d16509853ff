from fractions import Fraction
import itertools
import math
import random

import mpmath
import pytest

from tetrasum.complex import StructureError, SimplicialComplex3, load_complex
from tetrasum.geometry import (
    EDGE_VERTICES,
    NonEuclideanError,
    dihedral_angles,
    embed,
    interior_dihedral_angles,
    pr_asymptotic,
    regge_action_3d,
    sixj_lengths,
    tet_geometry,
    volume_sq,
    volume_sq_from_squares,
)
from tetrasum.spin import ssr_to_float
from tetrasum.wigner import Tetra6j, sixj_exact

REGULAR = math.pi - math.acos(1 / 3)


def random_tet(rng):
    pts = [[rng.uniform(-1, 1) for _ in range(3)] for _ in range(4)]
    return [math.dist(pts[i], pts[j]) for i, j in EDGE_VERTICES]


def test_regular_volume_exact():
    assert volume_sq([1] * 6) == Fraction(1, 72)
    assert volume_sq([Fraction(3, 2)] * 6) == Fraction(3, 2) ** 6 / 72


def test_coplanar_square_is_degenerate():
    # 0-1-2-3 a unit square; 02 and 13 are the diagonals
    assert volume_sq_from_squares([1, 2, 1, 1, 2, 1]) == 0


def test_triangle_violation_is_negative():
    assert volume_sq([1, 1, 1, 1, 1, 10]) < 0


def test_non_euclidean_error_carries_volume():
    with pytest.raises(NonEuclideanError) as err:
        dihedral_angles([1, 1, 1, 1, 1, 10])
    assert err.value.volume_sq == volume_sq([1, 1, 1, 1, 1, 10])


def test_regular_dihedral():
    for t in dihedral_angles([1] * 6):
        assert abs(t - REGULAR) < 1e-12
    g = tet_geometry([Fraction(1)] * 6)
    assert g.volume == pytest.approx(1 / (6 * math.sqrt(2)))
    assert len(set(round(t, 12) for t in g.dihedral)) == 1


def test_dihedral_extended_precision():
    with mpmath.workprec(200):
        expect = mpmath.pi - mpmath.acos(mpmath.mpf(1) / 3)
    for t in dihedral_angles([1] * 6, prec=200):
        assert abs(t - expect) < mpmath.mpf(2) ** -180


def test_scale_invariance():
    rng = random.Random(3)
    ls = random_tet(rng)
    a = dihedral_angles(ls)
    b = dihedral_angles([7.5 * x for x in ls])
    assert max(abs(x - y) for x, y in zip(a, b)) < 1e-11


def test_near_degenerate_angle_limit():
    # apex sinking onto the centre of the base triangle
    base = 1.0
    for h in (1e-2, 1e-4):
        side = math.sqrt(1 / 3 + h * h)
        th = dihedral_angles([base, base, base, side, side, side])
        assert min(th) < 1e-1 or max(th) > math.pi - 1e-1


def test_embedding_reproduces_lengths():
    rng = random.Random(8)
    for _ in range(50):
        ls = random_tet(rng)
        if volume_sq(ls) < 1e-4:
            continue
        v = embed(ls)
        for (i, j), ell in zip(EDGE_VERTICES, ls):
            assert abs(math.dist(v[i], v[j]) - ell) <= 1e-12 * ell
        assert v[3][2] > 0 and v[2][1] > 0


def test_outer_angles_in_open_interval():
    rng = random.Random(9)
    for _ in range(50):
        ls = random_tet(rng)
        if volume_sq(ls) < 1e-6:
            continue
        assert all(0 < t < math.pi for t in dihedral_angles(ls))


def test_cayley_menger_relabeling_symmetry():
    ls = [Fraction(n, 7) for n in (9, 10, 11, 12, 13, 8)]
    length = {frozenset(p): x for p, x in zip(EDGE_VERTICES, ls)}
    ref = volume_sq(ls)
    for perm in itertools.permutations(range(4)):
        relabeled = [length[frozenset((perm[i], perm[j]))] for i, j in EDGE_VERTICES]
        assert volume_sq(relabeled) == ref


def test_schlafli_identity():
    rng = random.Random(4)
    for _ in range(10):
        ls = random_tet(rng)
        if volume_sq(ls) < 1e-3:
            continue
        d = [rng.uniform(-1, 1) for _ in range(6)]
        eps = 1e-6
        plus = interior_dihedral_angles([x + eps * y for x, y in zip(ls, d)])
        minus = interior_dihedral_angles([x - eps * y for x, y in zip(ls, d)])
        dtheta = [(p - m) / (2 * eps) for p, m in zip(plus, minus)]
        scale = sum(abs(x * y) for x, y in zip(ls, dtheta))
        assert abs(sum(x * y for x, y in zip(ls, dtheta))) < 1e-6 * max(scale, 1)


def test_regge_action_double_tetrahedron():
    cx = load_complex("builtin:s3-2tet")
    action, deficits = regge_action_3d(cx, cx.lengths)
    each = 2 * math.pi - 2 * math.acos(1 / 3)
    assert all(abs(e - each) < 1e-12 for e in deficits.values())
    assert abs(action - 6 * each) < 1e-12
    assert action == pytest.approx(22.9276, abs=1e-4)


def test_regge_action_scales_linearly():
    cx = load_complex("builtin:s3-2tet")
    lengths = {e: 2.5 for e in cx.edges}
    action, _ = regge_action_3d(cx, lengths)
    base, _ = regge_action_3d(cx, cx.lengths)
    assert action == pytest.approx(2.5 * base, rel=1e-12)


def test_regge_action_needs_closed_complex():
    cx = SimplicialComplex3([(0, 1, 2, 3)])
    with pytest.raises(StructureError, match="not closed"):
        regge_action_3d(cx, {e: 1.0 for e in cx.edges})


def test_regge_action_needs_all_lengths():
    cx = load_complex("builtin:s3-5tet")
    with pytest.raises(StructureError, match="no length"):
        regge_action_3d(cx, {})


def test_wigner_mode_value():
    s = Tetra6j.of(*[10] * 6)
    v = float(volume_sq(sixj_lengths(s))) ** 0.5
    assert pr_asymptotic(s, "wigner") == pytest.approx(1 / (12 * math.pi * v), rel=1e-14)


def test_asymptotic_forbidden_region():
    with pytest.raises(NonEuclideanError):
        pr_asymptotic(Tetra6j.of(1, 1, 2, 1, 1, 2))


def test_unknown_mode():
    from tetrasum.spin import DomainError

    with pytest.raises(DomainError):
        pr_asymptotic(Tetra6j.of(*[5] * 6), "bogus")


def _equilateral(j):
    s = Tetra6j.of(*[j] * 6)
    return ssr_to_float(sixj_exact(s)), s


def test_standard_normalization_converges_pointwise():
    errs = []
    for j in (10, 20, 40, 80):
        x, s = _equilateral(j)
        amp = 1 / math.sqrt(12 * math.pi * float(volume_sq(sixj_lengths(s))) ** 0.5)
        errs.append(abs(x - pr_asymptotic(s, "standard")) / amp)
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 1e-3


def test_scaled_configuration_converges():
    # {k j0} for a generic Euclidean j0, scale k in 1, 2, 4, 8
    base = (3, 4, 5, 4, 3, 4)
    errs = []
    for k in (2, 4, 8, 16):
        s = Tetra6j(*(2 * k * b for b in base))
        exact = ssr_to_float(sixj_exact(s))
        vol = float(volume_sq(sixj_lengths(s))) ** 0.5
        amp = 1 / math.sqrt(12 * math.pi * vol)
        errs.append(abs(exact - pr_asymptotic(s, "standard")) / amp)
    assert errs[-1] < errs[0]


def test_windowed_square_mean_is_half_the_wigner_estimate():
    # the oscillating cos^2 averages to 1/2; see the phase-mode docstring
    vals = []
    for j in range(25, 36):
        x, s = _equilateral(j)
        vals.append(x * x / pr_asymptotic(s, "wigner"))
    mean = sum(vals) / len(vals)
    assert 0.4 < mean < 0.6
