"""Exact 2D lattice geometry in the first quadrant.

Primitive vectors, pointed rational cones given by two rays, exact membership
tests, Hilbert bases, and decomposition of lattice points into basis elements.
All arithmetic uses Python integers (arbitrary precision, so there is no
silent wraparound); every value is immutable and every operation is a pure
function, safe for concurrent use.
"""

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd
from typing import Iterable, Optional


@dataclass(frozen=True, order=True)
class LatticePoint2:
    """A point (r, s) of the nonnegative integer lattice N^2."""

    r: int
    s: int

    def __post_init__(self):
        for name in ("r", "s"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be nonnegative, got {value}")

    def __add__(self, other: "LatticePoint2") -> "LatticePoint2":
        return LatticePoint2(self.r + other.r, self.s + other.s)

    def __sub__(self, other: "LatticePoint2") -> "LatticePoint2":
        # raises ValueError if the difference leaves the first quadrant
        return LatticePoint2(self.r - other.r, self.s - other.s)

    def scaled(self, k: int) -> "LatticePoint2":
        return LatticePoint2(self.r * k, self.s * k)

    def is_origin(self) -> bool:
        return self.r == 0 and self.s == 0

    def __str__(self) -> str:
        return f"({self.r},{self.s})"


def det(p: LatticePoint2, q: LatticePoint2) -> int:
    """Cross product p.r*q.s - p.s*q.r; positive iff q is steeper than p."""
    return p.r * q.s - p.s * q.r


def primitive(v: LatticePoint2) -> LatticePoint2:
    """The primitive vector on the ray of v (components divided by their gcd)."""
    if v.is_origin():
        raise ValueError("zero ray")
    g = gcd(v.r, v.s)
    return LatticePoint2(v.r // g, v.s // g)


@dataclass(frozen=True)
class Cone2:
    """A pointed rational cone in the first quadrant spanned by two primitive
    rays, ordered so that slope(ray_high) >= slope(ray_low).

    The slope of (r, s) is s/r, with s/0 read as +infinity.  A cone whose rays
    coincide is degenerate (a single ray) but still representable.
    """

    ray_low: LatticePoint2
    ray_high: LatticePoint2

    def __post_init__(self):
        for name in ("ray_low", "ray_high"):
            ray = getattr(self, name)
            if ray.is_origin():
                raise ValueError("zero ray")
            if primitive(ray) != ray:
                raise ValueError(f"{name} {ray} is not primitive")
        if det(self.ray_low, self.ray_high) < 0:
            raise ValueError(
                f"ray_high {self.ray_high} has smaller slope than ray_low {self.ray_low}"
            )

    @property
    def is_degenerate(self) -> bool:
        return self.ray_low == self.ray_high

    def __str__(self) -> str:
        return f"cone{{{self.ray_high},{self.ray_low}}}"


def cone(u: LatticePoint2, w: LatticePoint2) -> Cone2:
    """The cone spanned by u and w; rays are primitivized and ordered by slope."""
    u, w = primitive(u), primitive(w)
    if det(u, w) < 0:
        u, w = w, u
    return Cone2(ray_low=u, ray_high=w)


def cone_contains(c: Cone2, p: LatticePoint2) -> bool:
    """Exact membership: p = l1*ray_low + l2*ray_high with rational l1, l2 >= 0,
    decided by the two cross-product sign tests."""
    return det(c.ray_low, p) >= 0 and det(p, c.ray_high) >= 0


def slope_descending(points: Iterable[LatticePoint2]) -> list[LatticePoint2]:
    """Sort lattice points by slope, steepest first; ties by coordinate order."""

    def cmp(p: LatticePoint2, q: LatticePoint2) -> int:
        d = det(p, q)  # > 0 iff q is steeper than p
        if d != 0:
            return 1 if d > 0 else -1
        return -1 if (p.r, p.s) < (q.r, q.s) else (1 if (p.r, p.s) > (q.r, q.s) else 0)

    return sorted(points, key=cmp_to_key(cmp))


@dataclass(frozen=True)
class HilbertBasis2:
    """The unique finite minimal generating set of the lattice points of a cone."""

    elements: frozenset[LatticePoint2]
    cone: Cone2


def _parallelogram_points(c: Cone2) -> list[LatticePoint2]:
    """Nonzero lattice points of {l1*ray_low + l2*ray_high : 0 <= l1, l2 <= 1}."""
    wl, wh = c.ray_low, c.ray_high
    d = det(wl, wh)
    points = []
    for r in range(wl.r + wh.r + 1):
        for s in range(wl.s + wh.s + 1):
            if r == 0 and s == 0:
                continue
            p = LatticePoint2(r, s)
            # Cramer: l1 = det(p, ray_high)/d, l2 = det(ray_low, p)/d
            if 0 <= det(p, wh) <= d and 0 <= det(wl, p) <= d:
                points.append(p)
    return points


def hilbert_basis(c: Cone2) -> HilbertBasis2:
    """The unique minimal generating set of Q = c intersected with Z^2.

    Every irreducible element of Q lies in the fundamental parallelogram of
    the two rays, and both parts of any splitting of a parallelogram point
    into nonzero cone points stay inside the parallelogram (their ray
    coefficients can only shrink), so irreducibility is decided by scanning
    pairwise sums of parallelogram points.  A degenerate cone has the
    singleton basis consisting of its primitive ray.
    """
    if c.is_degenerate:
        return HilbertBasis2(frozenset({c.ray_low}), c)
    points = _parallelogram_points(c)
    point_set = set(points)

    def reducible(p: LatticePoint2) -> bool:
        return any(
            q.r <= p.r and q.s <= p.s and (p - q) in point_set for q in points
        )

    return HilbertBasis2(frozenset(p for p in points if not reducible(p)), c)


def decompose_over(
    p: LatticePoint2, elements: Iterable[LatticePoint2]
) -> Optional[dict[LatticePoint2, int]]:
    """Write p as a nonnegative integer combination of the given lattice points.

    Elements are tried steepest-slope first with the largest feasible
    multiplicity (greedy depth-first search, memoizing failed states); the
    first success wins, making the result deterministic.  Returns a map from
    element to positive multiplicity, empty for the origin, or None when no
    combination exists.
    """
    order = [e for e in slope_descending(elements) if not e.is_origin()]
    multiplicities = [0] * len(order)
    failed: set[tuple[int, int, int]] = set()

    def dfs(i: int, r: int, s: int) -> bool:
        if r == 0 and s == 0:
            return True
        if i == len(order) or (i, r, s) in failed:
            return False
        e = order[i]
        cap = min(r // e.r if e.r else r + s, s // e.s if e.s else r + s)
        for m in range(cap, -1, -1):
            if dfs(i + 1, r - m * e.r, s - m * e.s):
                multiplicities[i] = m
                return True
        failed.add((i, r, s))
        return False

    if not dfs(0, p.r, p.s):
        return None
    return {e: m for e, m in zip(order, multiplicities) if m}


def decompose(p: LatticePoint2, basis: HilbertBasis2) -> dict[LatticePoint2, int]:
    """Deterministic decomposition of a cone point into Hilbert basis elements."""
    if not cone_contains(basis.cone, p):
        raise ValueError("point not in cone")
    result = decompose_over(p, basis.elements)
    if result is None:  # cannot happen: a Hilbert basis generates its cone
        raise AssertionError(f"Hilbert basis failed to decompose {p}")
    return result
