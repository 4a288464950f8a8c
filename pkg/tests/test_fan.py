import random

import pytest

from conealg import (
    LatticePoint2,
    build_fan,
    cone_contains,
    fan_order,
    hilbert_basis,
    locate,
    primitive,
)
from oracles import random_exponent_pair

P = LatticePoint2


def test_fan_order_already_ordered():
    assert fan_order((5, 2), (2, 3)) == ((5, 2), (2, 3), (0, 1))


def test_fan_order_sorts_by_descending_ratio():
    assert fan_order((2, 5), (3, 2)) == ((5, 2), (2, 3), (1, 0))


def test_fan_order_ties_are_stable():
    assert fan_order((1, 1), (1, 1)) == ((1, 1), (1, 1), (0, 1))


def test_fan_order_infinite_ratio_sorts_first():
    # b_i = 0 reads as ratio +infinity
    assert fan_order((2, 3), (1, 0)) == ((3, 2), (0, 1), (1, 0))


def test_fan_order_drops_indices_absent_from_both():
    assert fan_order((1, 0), (1, 0)) == ((1,), (1,), (0,))


def test_fan_order_errors():
    with pytest.raises(ValueError, match="same length"):
        fan_order((1, 2), (1,))
    with pytest.raises(ValueError, match="positive entry"):
        fan_order((0, 0), (1, 2))
    with pytest.raises(ValueError, match="nonnegative"):
        fan_order((1, -2), (1, 2))
    with pytest.raises(ValueError, match="nonempty"):
        fan_order((), ())


def test_fan_order_idempotent():
    rng = random.Random(11)
    for _ in range(40):
        a, b = random_exponent_pair(rng)
        a2, b2, _ = fan_order(a, b)
        a3, b3, perm = fan_order(a2, b2)
        assert (a3, b3) == (a2, b2)
        assert perm == tuple(range(len(a2)))


def test_build_fan_golden():
    fan = build_fan((5, 2), (2, 3))
    assert [(c.ray_high, c.ray_low) for c in fan.cones] == [
        (P(0, 1), P(2, 5)),
        (P(2, 5), P(3, 2)),
        (P(3, 2), P(1, 0)),
    ]


def test_build_fan_single_prime():
    fan = build_fan((1,), (1,))
    assert [(c.ray_high, c.ray_low) for c in fan.cones] == [
        (P(0, 1), P(1, 1)),
        (P(1, 1), P(1, 0)),
    ]


def test_build_fan_middle_rays():
    fan = build_fan((2, 1), (1, 1))
    assert [(c.ray_high, c.ray_low) for c in fan.cones] == [
        (P(0, 1), P(1, 2)),
        (P(1, 2), P(1, 1)),
        (P(1, 1), P(1, 0)),
    ]


def test_build_fan_rejects_unordered():
    with pytest.raises(ValueError, match="fan ordered"):
        build_fan((2, 5), (3, 2))


def test_build_fan_rejects_dead_index():
    with pytest.raises(ValueError, match="both zero"):
        build_fan((1, 0), (1, 0))


def test_degenerate_cone_from_vanishing_b_entry():
    # ratio +infinity merges the first interior ray with the (0,1) sentinel
    a2, b2, _ = fan_order((2, 3), (3, 0))
    fan = build_fan(a2, b2)
    assert fan.cones[0].is_degenerate
    assert hilbert_basis(fan.cones[0]).elements == {P(0, 1)}


def test_degenerate_cone_from_tied_ratios():
    fan = build_fan((2, 4), (1, 2))
    assert len(fan.cones) == 3
    assert fan.cones[1].is_degenerate
    assert fan.cones[1].ray_low == P(1, 2)


def test_locate_examples():
    fan = build_fan((5, 2), (2, 3))
    assert locate(fan, P(1, 3)) == 0
    assert locate(fan, P(0, 0)) == 0
    assert locate(fan, P(2, 5)) == 0  # shared ray of C_0 and C_1: lowest index
    assert locate(fan, P(3, 2)) == 1
    assert locate(fan, P(6, 1)) == 2


def test_sentinels():
    rng = random.Random(23)
    for _ in range(20):
        a, b = random_exponent_pair(rng)
        a2, b2, _ = fan_order(a, b)
        fan = build_fan(a2, b2)
        assert fan.cones[0].ray_high == P(0, 1)
        assert fan.cones[-1].ray_low == P(1, 0)
        for k in range(6):
            assert cone_contains(fan.cones[0], P(0, k))
            assert cone_contains(fan.cones[-1], P(k, 0))


def test_monotone_slopes_and_shared_rays():
    rng = random.Random(29)
    for _ in range(20):
        a, b = random_exponent_pair(rng)
        a2, b2, _ = fan_order(a, b)
        fan = build_fan(a2, b2)
        for left, right in zip(fan.cones, fan.cones[1:]):
            assert left.ray_low == right.ray_high
            # slope comparison by cross-multiplication
            assert left.ray_high.s * left.ray_low.r >= left.ray_low.s * left.ray_high.r


def test_boundary_rays_in_both_hilbert_bases():
    fan = build_fan((5, 2), (2, 3))
    for left, right in zip(fan.cones, fan.cones[1:]):
        shared = primitive(left.ray_low)
        assert shared in hilbert_basis(left).elements
        assert shared in hilbert_basis(right).elements


def test_coverage_grid():
    for a, b in [((5, 2), (2, 3)), ((1,), (1,)), ((2, 4), (1, 2)), ((0, 3), (2, 1))]:
        a2, b2, _ = fan_order(a, b)
        fan = build_fan(a2, b2)
        for r in range(51):
            for s in range(51):
                locate(fan, P(r, s))  # raises if uncovered
