"""Fans of cones in the first quadrant built from two exponent vectors.

Two exponent vectors a, b of equal length are "fan ordered" when the ratios
a_i/b_i are non-increasing (with x/0 = +infinity).  The fan of such a pair is
the chain of cones spanned by consecutive rays (b_i, a_i), bracketed by the
sentinel rays (0,1) and (1,0); together they cover the first quadrant.
"""

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence

from .lattice import Cone2, LatticePoint2, cone_contains, primitive


def _check_exponent_vector(name: str, v: tuple[int, ...]) -> None:
    if len(v) == 0:
        raise ValueError(f"{name} must be nonempty")
    for x in v:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise ValueError(f"{name} entries must be nonnegative integers, got {x!r}")
    if not any(v):
        raise ValueError(f"{name} has no positive entry (the ideal would be the unit ideal)")


def _is_fan_ordered(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(a[i] * b[i + 1] >= a[i + 1] * b[i] for i in range(len(a) - 1))


def fan_order(
    a: Sequence[int], b: Sequence[int]
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Reorder the paired exponents by ratio a_i/b_i, descending.

    b_i = 0 sorts as +infinity; ties keep their original order; indices where
    both exponents are zero are dropped (the prime occurs in neither ideal).
    Returns (a_sorted, b_sorted, permutation) where permutation[j] is the
    original index sitting at fan position j.
    """
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("exponent vectors must have the same length")
    _check_exponent_vector("a", a)
    _check_exponent_vector("b", b)
    keep = [i for i in range(len(a)) if a[i] or b[i]]
    if not keep:
        raise ValueError("both ideals are the unit ideal")

    def cmp(i: int, j: int) -> int:
        # a_i/b_i > a_j/b_j iff a_i*b_j > a_j*b_i (all entries nonnegative)
        lhs, rhs = a[i] * b[j], a[j] * b[i]
        if lhs != rhs:
            return -1 if lhs > rhs else 1
        return 0

    keep.sort(key=cmp_to_key(cmp))
    return tuple(a[i] for i in keep), tuple(b[i] for i in keep), tuple(keep)


@dataclass(frozen=True)
class Fan:
    """The n+1 cones C_0..C_n over consecutive rays (b_i, a_i) of a fan
    ordered pair, with sentinels so that C_0 contains the s-axis and C_n the
    r-axis.  Consecutive cones share exactly one ray; cones whose rays
    coincide after primitivization are retained but degenerate."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    cones: tuple[Cone2, ...]


def build_fan(a: Sequence[int], b: Sequence[int]) -> Fan:
    """Build the fan of a fan-ordered pair (a, b)."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("exponent vectors must have the same length")
    _check_exponent_vector("a", a)
    _check_exponent_vector("b", b)
    for i in range(len(a)):
        if a[i] == 0 and b[i] == 0:
            raise ValueError(f"a and b are both zero at index {i}")
    if not _is_fan_ordered(a, b):
        raise ValueError("a and b are not fan ordered (ratios a_i/b_i must be non-increasing)")
    rays = [LatticePoint2(0, 1)]
    rays.extend(primitive(LatticePoint2(b[i], a[i])) for i in range(len(a)))
    rays.append(LatticePoint2(1, 0))
    cones = tuple(
        Cone2(ray_low=rays[i + 1], ray_high=rays[i]) for i in range(len(rays) - 1)
    )
    return Fan(a, b, cones)


def locate(fan: Fan, p: LatticePoint2) -> int:
    """Index of the first cone containing p; boundary points resolve to the
    lower index.  Total on N^2 because the cones cover the first quadrant."""
    for i, c in enumerate(fan.cones):
        if cone_contains(c, p):
            return i
    raise AssertionError(f"fan does not cover {p}")
