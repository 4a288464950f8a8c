"""Exact monomials and monomial ideals over a fixed variable list.

Monomial ideals are stored by their unique minimal generating set, so set
equality of generators is ideal equality.  Powers and products enumerate
candidate generator products and prune by divisibility; the enumeration is
capped (default 10^6 candidates, overridable with the CONEALG_MAX_CANDIDATES
environment variable or per call).
"""

import os
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .lattice import LatticePoint2

DEFAULT_MAX_CANDIDATES = 10**6
CAP_ENV_VAR = "CONEALG_MAX_CANDIDATES"


class PowerCapError(RuntimeError):
    """An ideal power or product would enumerate too many candidate generators."""


def _candidate_cap(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_MAX_CANDIDATES


def default_variables(n: int) -> tuple[str, ...]:
    """x, y, z for up to three variables, x1..xn beyond."""
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial recorded by its exponent vector over x_1..x_n."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.exponents, tuple):
            object.__setattr__(self, "exponents", tuple(self.exponents))
        for e in self.exponents:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {e!r}")

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def total_degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        _same_nvars(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        _same_nvars(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_nvars(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        return Monomial(tuple(e * k for e in self.exponents))


def _same_nvars(a, b) -> None:
    if a.nvars != b.nvars:
        raise ValueError(f"variable count mismatch: {a.nvars} vs {b.nvars}")


def unit_monomial(nvars: int) -> Monomial:
    return Monomial((0,) * nvars)


def _minimalize(gens: frozenset[Monomial]) -> frozenset[Monomial]:
    return frozenset(
        g for g in gens if not any(h != g and h.divides(g) for h in gens)
    )


class MonomialIdeal:
    """A monomial ideal in its minimal-generator normal form.

    The zero ideal has no generators; the unit ideal's sole generator is the
    unit monomial.  All ideals carry the arity of the shared variable list;
    mixing arities is an error, never a broadcast.
    """

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars: int, generators: Iterable[Monomial] = ()):
        gens = frozenset(
            g if isinstance(g, Monomial) else Monomial(tuple(g)) for g in generators
        )
        for g in gens:
            if g.nvars != nvars:
                raise ValueError(f"generator {g} has {g.nvars} variables, expected {nvars}")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "gens", _minimalize(gens))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return unit_monomial(self.nvars) in self.gens

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def sorted_gens(self) -> list[Monomial]:
        """Generators in descending exponent order (x-heaviest first)."""
        return sorted(self.gens, reverse=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.nvars, self.gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.nvars}, {sorted(self.gens)})"


def maximal_ideal(nvars: int) -> MonomialIdeal:
    """The ideal (x_1, ..., x_n)."""
    gens = []
    for i in range(nvars):
        e = [0] * nvars
        e[i] = 1
        gens.append(Monomial(tuple(e)))
    return MonomialIdeal(nvars, gens)


def member(m: Monomial, ideal: MonomialIdeal) -> bool:
    """Membership by definition: some generator divides m."""
    if m.nvars != ideal.nvars:
        raise ValueError(f"variable count mismatch: {m.nvars} vs {ideal.nvars}")
    return ideal.contains(m)


def ideal_intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection, generated by the pairwise least common multiples."""
    if a.nvars != b.nvars:
        raise ValueError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    return MonomialIdeal(a.nvars, (g.lcm(h) for g in a.gens for h in b.gens))


def ideal_product(
    a: MonomialIdeal, b: MonomialIdeal, max_candidates: Optional[int] = None
) -> MonomialIdeal:
    """Product, generated by the pairwise products."""
    if a.nvars != b.nvars:
        raise ValueError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    cap = _candidate_cap(max_candidates)
    if len(a.gens) * len(b.gens) > cap:
        raise PowerCapError(
            f"power too large: {len(a.gens) * len(b.gens)} candidate products exceed cap {cap}"
        )
    return MonomialIdeal(a.nvars, (g * h for g in a.gens for h in b.gens))


def ideal_power(
    a: MonomialIdeal, m: int, max_candidates: Optional[int] = None
) -> MonomialIdeal:
    """m-th power via iterated products of minimal generating sets; A^0 = (1)."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise ValueError(f"power must be a nonnegative integer, got {m!r}")
    cap = _candidate_cap(max_candidates)
    result = MonomialIdeal(a.nvars, [unit_monomial(a.nvars)])
    spent = 0
    for _ in range(m):
        spent += len(result.gens) * len(a.gens)
        if spent > cap:
            raise PowerCapError(f"power too large: {spent} candidate products exceed cap {cap}")
        result = MonomialIdeal(a.nvars, (g * h for g in result.gens for h in a.gens))
    return result


def principal_intersection(
    a: Sequence[int], b: Sequence[int], r: int, s: int
) -> Monomial:
    """The single minimal generator of (x^a)^r intersected with (x^b)^s:
    componentwise max(r*a_k, s*b_k).  Ground truth for each bigraded piece."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("exponent vectors must have the same length")
    for name, value in (("r", r), ("s", s)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
    return Monomial(tuple(max(r * ak, s * bk) for ak, bk in zip(a, b)))


@dataclass(frozen=True, order=True)
class BigradedMonomial:
    """A monomial coefficient together with its (u, v)-degree."""

    coeff: Monomial
    degree: LatticePoint2


# --- text syntax: x^5*y^2, exponent 1 omitted, unit monomial prints as 1 ---

class MonomialParseError(ValueError):
    """Invalid monomial text; carries the 1-based column of the offense."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_NUMBER = re.compile(r"[0-9]+")


def parse_monomial(text: str, variables: Sequence[str]) -> Monomial:
    """Parse monomial text like ``x^5*y^2`` over the declared alphabet."""
    index = {v: i for i, v in enumerate(variables)}
    exponents = [0] * len(variables)
    pos = 0

    def skip_spaces():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    skip_spaces()
    if pos >= len(text):
        raise MonomialParseError("empty monomial", pos + 1)
    if text[pos] == "1":
        pos += 1
        skip_spaces()
        if pos != len(text):
            raise MonomialParseError("unexpected input after unit monomial", pos + 1)
        return Monomial(tuple(exponents))

    while True:
        skip_spaces()
        m = _IDENT.match(text, pos)
        if not m:
            got = text[pos] if pos < len(text) else "end of input"
            raise MonomialParseError(f"expected a variable, got {got!r}", pos + 1)
        name = m.group(0)
        if name not in index:
            raise MonomialParseError(f"unknown variable {name!r}", pos + 1)
        pos = m.end()
        power = 1
        skip_spaces()
        if pos < len(text) and text[pos] == "^":
            pos += 1
            skip_spaces()
            n = _NUMBER.match(text, pos)
            if not n:
                raise MonomialParseError("expected an integer exponent after '^'", pos + 1)
            power = int(n.group(0))
            pos = n.end()
        exponents[index[name]] += power
        skip_spaces()
        if pos == len(text):
            return Monomial(tuple(exponents))
        if text[pos] != "*":
            raise MonomialParseError(f"expected '*', got {text[pos]!r}", pos + 1)
        pos += 1


def format_monomial(m: Monomial, variables: Sequence[str]) -> str:
    if m.nvars != len(variables):
        raise ValueError(f"variable count mismatch: {m.nvars} vs {len(variables)}")
    parts = [
        v if e == 1 else f"{v}^{e}" for v, e in zip(variables, m.exponents) if e
    ]
    return "*".join(parts) if parts else "1"


def format_bigraded(bm: BigradedMonomial, variables: Sequence[str]) -> str:
    """Render coefficient and (u, v)-degree, e.g. ``x^5*y^2*u`` or ``x^2*y^3*v``."""
    parts = []
    if not bm.coeff.is_unit():
        parts.append(format_monomial(bm.coeff, variables))
    for sym, e in (("u", bm.degree.r), ("v", bm.degree.s)):
        if e == 1:
            parts.append(sym)
        elif e > 1:
            parts.append(f"{sym}^{e}")
    return "*".join(parts) if parts else "1"
