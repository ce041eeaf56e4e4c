import random

import pytest

from toricauto.divisors import (
    DivisorClass,
    TorusDivisor,
    canonical_class,
    chi,
    cohomology,
    h0,
    hom_complex_dims,
    intersect,
    is_ample,
    is_big,
    is_nef,
    picard,
    ray_divisor,
)
from toricauto.fan import census, hirzebruch, paper_example, projective_plane
from toricauto.lattice import inertia


def _brute_h0(f, D):
    a = D.coeffs
    R = 2 * max(1, max(abs(x) for x in a)) * max(abs(c) for v in f.rays for c in v) + 2
    return sum(
        1
        for x in range(-R, R + 1)
        for y in range(-R, R + 1)
        if all(x * v[0] + y * v[1] >= -ai for v, ai in zip(f.rays, a))
    )


def test_eight_ray_picard():
    f = paper_example()
    pic = picard(f)
    assert pic.rank == 6
    assert pic.basis_rays == (3, 4, 5, 6, 7, 8)
    assert pic.format_class(pic.ray_class(1)) == "D_3 + 2 D_4 + D_5 - D_7 - 2 D_8"
    assert pic.format_class(pic.ray_class(2)) == "D_4 + D_5 + D_6 + D_7 + D_8"


def test_principal_divisors_vanish(fans_small):
    for f in fans_small:
        pic = picard(f)
        for P in pic.principal_divisors():
            assert pic.project(P) == DivisorClass.zero(pic.rank)
            # and are numerically trivial
            for lab in f.labels:
                assert intersect(f, P, ray_divisor(f, lab)) == 0


def test_lift_project_roundtrip(fans_small):
    rng = random.Random(2)
    for f in fans_small:
        pic = picard(f)
        c = DivisorClass(tuple(rng.randint(-3, 3) for _ in range(pic.rank)))
        assert pic.project(pic.lift(c)) == c


def test_intersection_form(fans_small):
    for f in fans_small:
        pic = picard(f)
        G = pic.intersection_matrix
        assert abs(G.det()) == 1
        assert inertia(G.tolist()) == (1, pic.rank - 1, 0)
        K = canonical_class(f)
        assert intersect(f, K, K) == 12 - len(f)
        for lab in f.labels:
            C = ray_divisor(f, lab)
            assert intersect(f, C, C) + intersect(f, C, K) == -2


def test_h0_against_brute_force(fans_small):
    rng = random.Random(4)
    for f in fans_small[:30]:
        for _ in range(5):
            D = TorusDivisor(tuple(rng.randint(-2, 3) for _ in f.rays))
            assert h0(f, D) == _brute_h0(f, D), (f.rays, D)


def test_projective_plane_cohomology():
    f = projective_plane()
    O = lambda k: TorusDivisor((k, 0, 0))
    assert cohomology(f, O(0)) == (1, 0, 0)
    assert cohomology(f, O(1)) == (3, 0, 0)
    assert cohomology(f, O(2)) == (6, 0, 0)
    assert cohomology(f, O(-1)) == (0, 0, 0)
    assert cohomology(f, O(-2)) == (0, 0, 0)
    assert cohomology(f, O(-3)) == (0, 0, 1)
    assert cohomology(f, O(-4)) == (0, 0, 3)


def test_hirzebruch_h1():
    # O(-2, 0) on P^1 x P^1 has h^1 = h^1(O(-2)) h^0(O) = 1 by Kunneth
    f0 = hirzebruch(0)
    assert cohomology(f0, TorusDivisor((-2, 0, 0, 0))) == (0, 1, 0)
    for n in range(6):
        f = hirzebruch(n)
        # E = D_2 with E^2 = -n, E.K = n - 2: chi(O(-2E)) = -n - 1, h^0 = h^2 = 0
        assert cohomology(f, TorusDivisor((0, -2, 0, 0))) == (0, n + 1, 0)


def test_cohomology_laws(fans_small):
    rng = random.Random(6)
    for f in fans_small:
        K = canonical_class(f)
        D = TorusDivisor(tuple(rng.randint(-3, 3) for _ in f.rays))
        h = cohomology(f, D)
        assert h[0] - h[1] + h[2] == chi(f, D)
        assert cohomology(f, K - D) == h[::-1]
        assert cohomology(f, picard(f).project(D)) == h


def test_hom_dims():
    f = paper_example()
    O = TorusDivisor.zero(8)
    assert hom_complex_dims(f, O, O) == (1, 0, 0)
    C = ray_divisor(f, 1)
    assert hom_complex_dims(f, C, O) == (0, 0, 0)
    assert hom_complex_dims(f, O, C) == (1, 1, 0)


def test_positivity():
    for cf in census(6, 2, "fano"):
        f = cf.fan()
        mK = canonical_class(f).negate()
        assert is_ample(f, mK) and is_nef(f, mK) and is_big(f, mK)
    f = hirzebruch(2)
    mK = canonical_class(f).negate()
    assert not is_ample(f, mK) and is_nef(f, mK) and is_big(f, mK)
    assert not is_big(f, TorusDivisor((1, 0, 0, 0)))
    assert is_big(f, TorusDivisor((1, 0, 1, 1)))
    assert not is_big(f, TorusDivisor((-1, 0, 0, 0)))


def test_length_errors():
    f = projective_plane()
    with pytest.raises(ValueError):
        cohomology(f, TorusDivisor((1, 0)))
    with pytest.raises(TypeError):
        intersect(f, (1, 0, 0), (1, 0, 0))


def test_anticanonical_ampleness_criterion():
    # -K ample iff no invariant curve has self-intersection <= -2
    for cf in census(6, 2):
        f = cf.fan()
        assert is_ample(f, canonical_class(f).negate()) == all(s >= -1 for s in f.profile)


def test_spec_examples():
    p2 = projective_plane()
    pic = picard(p2)
    assert pic.rank == 1 and len({pic.ray_class(i) for i in p2.labels}) == 1
    f3 = hirzebruch(3)
    mK = canonical_class(f3).negate()
    assert not is_ample(f3, mK) and not is_nef(f3, mK)
    assert intersect(f3, mK, ray_divisor(f3, 2)) == -1
    f = paper_example()
    assert not is_big(f, DivisorClass.zero(6))
    assert not is_big(f, ray_divisor(f, 1))
    assert chi(f, TorusDivisor.zero(8)) == 1
    assert chi(f, ray_divisor(f, 1)) == 0
    assert chi(p2, TorusDivisor((1, 0, 0))) == 3
    for C in (1, 3, 5, 6, 7):
        D = ray_divisor(f, C)
        assert cohomology(f, D.negate()) == (0, 0, 0)
        assert cohomology(f, D) == (1, 1, 0)
        assert hom_complex_dims(f, D.negate(), TorusDivisor.zero(8)) == (1, 1, 0)
        assert hom_complex_dims(f, TorusDivisor.zero(8), D.negate()) == (0, 0, 0)
