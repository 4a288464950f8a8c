"""Generating sets of the intersection algebra of two principal monomial
ideals.

For I = (x^a) and J = (x^b) the algebra sum of I^r cap J^s u^r v^s is
generated by one bigraded monomial per Hilbert basis element of each cone of
the fan of (a, b): the coefficient at degree (r, s) is the componentwise
max(r*a_k, s*b_k) monomial.  This module computes that set, its log-vector
semigroup presentation, asymptotic containment limits, and runs the
bounded-grid verifier that reconstructs every graded component from the
generators.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .fans import Fan, build_fan, fan_order, locate
from .lattice import LatticePoint2, decompose_over, hilbert_basis, slope_descending
from .monomials import BigradedMonomial, principal_intersection, unit_monomial


@dataclass(frozen=True)
class GeneratorSet:
    """A deduplicated generating set with per-cone provenance.

    ``generators`` is ordered by cone index, then by descending slope of the
    (u, v)-degree; boundary elements shared by adjacent cones keep their first
    occurrence.  ``per_cone[i]`` lists (hilbert element, generator) pairs for
    cone i, including boundary duplicates.
    """

    generators: tuple[BigradedMonomial, ...]
    fan: Fan
    per_cone: tuple[tuple[tuple[LatticePoint2, BigradedMonomial], ...], ...]


def intersection_generators(a: Sequence[int], b: Sequence[int]) -> GeneratorSet:
    """Finite generating set for the intersection algebra of (x^a) and (x^b).

    The pair is fan ordered internally, but coefficients are computed over
    the original variable order, so no output remapping is needed.
    """
    a, b = tuple(a), tuple(b)
    a2, b2, _ = fan_order(a, b)
    fan = build_fan(a2, b2)
    ordered: list[BigradedMonomial] = []
    seen: set[LatticePoint2] = set()
    per_cone = []
    for c in fan.cones:
        entries = []
        for p in slope_descending(hilbert_basis(c).elements):
            bm = BigradedMonomial(principal_intersection(a, b, p.r, p.s), p)
            entries.append((p, bm))
            if p not in seen:
                seen.add(p)
                ordered.append(bm)
        per_cone.append(tuple(entries))
    return GeneratorSet(tuple(ordered), fan, tuple(per_cone))


@dataclass(frozen=True)
class SemigroupPresentation:
    """Integer vectors in N^(n+2) generating the log-semigroup of the algebra:
    one vector per generator (its exponent vector extended by its (u, v)-degree)
    plus the n variable unit vectors padded with degree (0, 0)."""

    nvars: int
    vectors: tuple[tuple[int, ...], ...]


def semigroup_generators(a: Sequence[int], b: Sequence[int]) -> SemigroupPresentation:
    """Log map applied to the intersection generators, extended by the
    variable unit vectors."""
    a = tuple(a)
    gs = intersection_generators(a, b)
    vectors = [g.coeff.exponents + (g.degree.r, g.degree.s) for g in gs.generators]
    n = len(a)
    for k in range(n):
        e = [0] * (n + 2)
        e[k] = 1
        vectors.append(tuple(e))
    return SemigroupPresentation(n, tuple(vectors))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a bounded-grid reconstruction check; the first failure is
    the lexicographically smallest failing degree."""

    passed: bool
    total: int
    failures: int
    first_failure: Optional[LatticePoint2]
    reason: Optional[str]

    def summary(self) -> str:
        if self.passed:
            return f"PASS {self.total}/{self.total} components"
        ok = self.total - self.failures
        return (
            f"FAIL at (r,s)={self.first_failure}: {self.reason}"
            f" ({ok}/{self.total} components)"
        )


def verify_generation(
    a: Sequence[int],
    b: Sequence[int],
    gens: GeneratorSet,
    r_max: int,
    s_max: int,
) -> VerificationReport:
    """Check that every graded component on [0..r_max] x [0..s_max] is a
    product of the supplied generators.

    For each (r, s): locate its cone, decompose it into the cone's Hilbert
    elements still present in ``gens``, multiply the matching coefficients,
    and compare with the componentwise-max oracle.  Failures are reported,
    never raised.
    """
    a, b = tuple(a), tuple(b)
    if r_max < 0 or s_max < 0:
        raise ValueError("grid bounds must be nonnegative")
    present = set(gens.generators)
    cone_data = []
    for entries in gens.per_cone:
        kept = [(p, bm) for p, bm in entries if bm in present]
        cone_data.append(([p for p, _ in kept], dict(kept)))
    nvars = len(a)
    total = (r_max + 1) * (s_max + 1)
    failures = 0
    first = reason = None
    for r in range(r_max + 1):
        for s in range(s_max + 1):
            p = LatticePoint2(r, s)
            elements, lookup = cone_data[locate(gens.fan, p)]
            multiplicities = decompose_over(p, elements)
            if multiplicities is None:
                why = "no decomposition into available generators"
            else:
                product = unit_monomial(nvars)
                for e, m in multiplicities.items():
                    product = product * (lookup[e].coeff ** m)
                if product == principal_intersection(a, b, r, s):
                    continue
                why = "generator product differs from the component generator"
            failures += 1
            if first is None:
                first, reason = p, why
    return VerificationReport(failures == 0, total, failures, first, reason)


class AsymptoticLimits(NamedTuple):
    """Exact limits of the containment exponents between powers of I and J."""

    l_I_of_J: Fraction
    L_I_of_J: Fraction
    l_J_of_I: Fraction
    L_J_of_I: Fraction


def asymptotic_limits(a: Sequence[int], b: Sequence[int]) -> AsymptoticLimits:
    """Exact asymptotic containment slopes for ideals with equal radicals.

    l_I(J) is the limit of (largest n with J^m inside I^n)/m, attained at the
    smallest ratio b_k/a_k; the other three limits are the matching extreme
    ratios, so the reciprocal identities l_I(J)*L_J(I) = l_J(I)*L_I(J) = 1
    hold by construction.
    """
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("exponent vectors must have the same length")
    if len(a) == 0:
        raise ValueError("exponent vectors must be nonempty")
    if any(x <= 0 for x in a) or any(x <= 0 for x in b):
        raise ValueError("radicals differ: all exponents must be positive")
    ratios = [Fraction(x, y) for x, y in zip(a, b)]
    hi, lo = max(ratios), min(ratios)
    return AsymptoticLimits(1 / hi, 1 / lo, lo, hi)
