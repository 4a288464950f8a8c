import random
from fractions import Fraction

import pytest

from conealg import (
    BigradedMonomial,
    GeneratorSet,
    LatticePoint2,
    Monomial,
    asymptotic_limits,
    intersection_generators,
    principal_intersection,
    semigroup_generators,
    verify_generation,
)
from oracles import brute_irreducibles, largest_inner_power, random_exponent_pair

P = LatticePoint2
M = Monomial


def bg(exponents, r, s):
    return BigradedMonomial(M(exponents), P(r, s))


# The (2,1) generator carries the full degree u^2*v: its cone provenance is
# Hilbert element (2,1), and I^2 cap J^1 = (x^10*y^4).
GOLDEN = [
    bg((2, 3), 0, 1),
    bg((6, 9), 1, 3),
    bg((10, 15), 2, 5),
    bg((5, 6), 1, 2),
    bg((5, 3), 1, 1),
    bg((15, 6), 3, 2),
    bg((10, 4), 2, 1),
    bg((5, 2), 1, 0),
]


def test_golden_generators_exact_order():
    gs = intersection_generators((5, 2), (2, 3))
    assert list(gs.generators) == GOLDEN


def test_golden_generators_per_cone_provenance():
    gs = intersection_generators((5, 2), (2, 3))
    assert [len(entries) for entries in gs.per_cone] == [3, 4, 3]
    for entries in gs.per_cone:
        for p, bm in entries:
            assert bm.degree == p
            assert bm.coeff == principal_intersection((5, 2), (2, 3), p.r, p.s)
    # boundary Hilbert elements appear in two cones but yield one generator
    assert sum(1 for e in gs.per_cone[0] + gs.per_cone[1] if e[0] == P(2, 5)) == 2
    assert sum(1 for g in gs.generators if g.degree == P(2, 5)) == 1


def test_single_prime_generators():
    gs = intersection_generators((1,), (1,))
    assert set(gs.generators) == {
        BigradedMonomial(M((1,)), P(1, 0)),
        BigradedMonomial(M((1,)), P(0, 1)),
        BigradedMonomial(M((1,)), P(1, 1)),
    }


def test_two_three_generators_match_brute_force():
    gs = intersection_generators((2,), (3,))
    expected = {
        BigradedMonomial(M((3,)), P(0, 1)),
        BigradedMonomial(M((3,)), P(1, 1)),
        BigradedMonomial(M((6,)), P(3, 2)),
        BigradedMonomial(M((4,)), P(2, 1)),
        BigradedMonomial(M((2,)), P(1, 0)),
    }
    assert set(gs.generators) == expected
    # independent route: irreducibles of each cone + the componentwise max
    oracle = set()
    for c in gs.fan.cones:
        for p in brute_irreducibles(c):
            oracle.add(
                BigradedMonomial(principal_intersection((2,), (3,), p.r, p.s), p)
            )
    assert set(gs.generators) == oracle


def test_generators_sound():
    rng = random.Random(41)
    for _ in range(10):
        a, b = random_exponent_pair(rng)
        for g in intersection_generators(a, b).generators:
            assert g.coeff == principal_intersection(a, b, g.degree.r, g.degree.s)


def test_input_order_invariance():
    rng = random.Random(43)
    for _ in range(15):
        a, b = random_exponent_pair(rng)
        indices = list(range(len(a)))
        rng.shuffle(indices)
        a2 = tuple(a[i] for i in indices)
        b2 = tuple(b[i] for i in indices)
        base = set(intersection_generators(a, b).generators)
        shuffled = set(intersection_generators(a2, b2).generators)
        remapped = {
            BigradedMonomial(
                M(tuple(g.coeff.exponents[i] for i in indices)), g.degree
            )
            for g in base
        }
        assert shuffled == remapped


def test_swap_symmetry():
    rng = random.Random(47)
    for _ in range(15):
        a, b = random_exponent_pair(rng)
        forward = set(intersection_generators(a, b).generators)
        backward = set(intersection_generators(b, a).generators)
        assert backward == {
            BigradedMonomial(g.coeff, P(g.degree.s, g.degree.r)) for g in forward
        }


def test_scaling_multiplies_coefficients_only():
    rng = random.Random(53)
    for _ in range(10):
        a, b = random_exponent_pair(rng, max_entry=4)
        c = rng.randint(2, 4)
        base = intersection_generators(a, b)
        scaled = intersection_generators(
            tuple(c * x for x in a), tuple(c * x for x in b)
        )
        assert scaled.fan.cones == base.fan.cones
        assert set(scaled.generators) == {
            BigradedMonomial(M(tuple(c * e for e in g.coeff.exponents)), g.degree)
            for g in base.generators
        }


def test_semigroup_presentation_two_variables():
    sg = semigroup_generators((5, 2), (2, 3))
    assert sg.nvars == 2
    assert len(sg.vectors) == 10
    assert (2, 3, 0, 1) in sg.vectors  # x^2*y^3*v
    assert (1, 0, 0, 0) in sg.vectors and (0, 1, 0, 0) in sg.vectors
    degrees = {(g.degree.r, g.degree.s) for g in intersection_generators((5, 2), (2, 3)).generators}
    for vec in sg.vectors:
        assert len(vec) == 4
        assert vec[-2:] in degrees or vec[-2:] == (0, 0)


def test_semigroup_presentation_single_variable():
    sg = semigroup_generators((1,), (1,))
    assert set(sg.vectors) == {(1, 1, 0), (1, 0, 1), (1, 1, 1), (1, 0, 0)}


def test_semigroup_rejects_empty():
    with pytest.raises(ValueError):
        semigroup_generators((), ())


def test_verify_generation_golden_grid():
    gs = intersection_generators((5, 2), (2, 3))
    report = verify_generation((5, 2), (2, 3), gs, 15, 15)
    assert report.passed and report.total == 256 and report.failures == 0
    assert report.summary() == "PASS 256/256 components"


def test_verify_generation_detects_missing_generator():
    gs = intersection_generators((5, 2), (2, 3))
    removed = bg((2, 3), 0, 1)
    tampered = GeneratorSet(
        tuple(g for g in gs.generators if g != removed), gs.fan, gs.per_cone
    )
    report = verify_generation((5, 2), (2, 3), tampered, 15, 15)
    assert not report.passed
    assert report.first_failure == P(0, 1)
    assert "FAIL at (r,s)=(0,1)" in report.summary()


def test_verify_generation_trivial_grid():
    gs = intersection_generators((5, 2), (2, 3))
    assert verify_generation((5, 2), (2, 3), gs, 0, 0).passed


def test_asymptotic_limits_examples():
    F = Fraction
    limits = asymptotic_limits((5, 2), (2, 3))
    assert limits == (F(2, 5), F(3, 2), F(2, 3), F(5, 2))
    assert asymptotic_limits((3, 1), (3, 1)) == (1, 1, 1, 1)
    assert asymptotic_limits((1,), (2,)) == (2, 2, F(1, 2), F(1, 2))


def test_asymptotic_limits_reciprocal_identities():
    rng = random.Random(59)
    for _ in range(20):
        n = rng.randint(1, 4)
        a = tuple(rng.randint(1, 6) for _ in range(n))
        b = tuple(rng.randint(1, 6) for _ in range(n))
        limits = asymptotic_limits(a, b)
        assert limits.l_I_of_J * limits.L_J_of_I == 1
        assert limits.l_J_of_I * limits.L_I_of_J == 1


def test_asymptotic_limits_requires_equal_radicals():
    with pytest.raises(ValueError, match="radicals differ"):
        asymptotic_limits((1, 0), (1, 2))


def test_asymptotic_limit_matches_divisibility_oracle():
    a, b = (5, 2), (2, 3)
    limits = asymptotic_limits(a, b)
    for m in range(1, 61):
        v = largest_inner_power(a, b, m)
        assert abs(v / m - limits.l_I_of_J) <= max(a) / m
