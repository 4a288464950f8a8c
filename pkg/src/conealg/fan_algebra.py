"""Fan algebras: piecewise-linear exponent functions on a fan and the graded
algebras they define.

A candidate function is given by one integer coefficient pair per cone,
g_i(r, s) = alpha_i*r + beta_i*s.  It is fan-linear when it is nonnegative on
each cone, agrees across shared rays, and is subadditive on all of N^2.  For
functions linear on the cones of a complete fan (and zero at the origin),
subadditivity is equivalent to the function being the pointwise max of its
pieces, which reduces to finitely many ray comparisons; that is the exact
decision procedure used here.
"""

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .fans import Fan, build_fan, fan_order, locate
from .generators import VerificationReport
from .lattice import LatticePoint2, decompose_over, hilbert_basis, slope_descending
from .monomials import (
    BigradedMonomial,
    Monomial,
    MonomialIdeal,
    default_variables,
    ideal_power,
    ideal_product,
    maximal_ideal,
    parse_monomial,
    unit_monomial,
)


class FanLinearityError(ValueError):
    """Rejection of a candidate piecewise function.

    ``condition`` is one of "nonnegativity", "face_agreement", or
    "subadditivity"; ``witness`` is a concrete violating point (or pair of
    points for subadditivity).
    """

    def __init__(self, condition: str, witness, message: str):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


@dataclass(frozen=True)
class FanLinearFunction:
    """A validated fan-linear function; construct via check_fan_linear."""

    fan: Fan
    pieces: tuple[tuple[int, int], ...]

    def piece_value(self, i: int, p: LatticePoint2) -> int:
        alpha, beta = self.pieces[i]
        return alpha * p.r + beta * p.s

    def __call__(self, p: LatticePoint2) -> int:
        return self.piece_value(locate(self.fan, p), p)


def _subadditivity_witness(f: FanLinearFunction):
    """Smallest lattice pair (p, q) with f(p) + f(q) < f(p + q), ordered by
    total coordinate sum then lexicographically.  Exists whenever the exact
    ray criterion fails."""
    for total in range(2, 4097):
        for left in range(1, total):
            for pr in range(left + 1):
                p = LatticePoint2(pr, left - pr)
                for qr in range(total - left + 1):
                    q = LatticePoint2(qr, total - left - qr)
                    fp, fq, fpq = f(p), f(q), f(p + q)
                    if fp + fq < fpq:
                        return p, q, fp, fq, fpq
    raise AssertionError("no subadditivity witness found")


def check_fan_linear(
    fan: Fan, pieces: Iterable[Sequence[int]]
) -> FanLinearFunction:
    """Validate one (alpha, beta) coefficient pair per cone as a fan-linear
    function, or raise FanLinearityError with the violated condition and a
    witness.

    Negative coefficients are accepted as long as the piece is nonnegative on
    its own cone (only values on the cone matter).
    """
    normalized = []
    for pair in pieces:
        alpha, beta = pair
        for x in (alpha, beta):
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"piece coefficients must be integers, got {x!r}")
        normalized.append((alpha, beta))
    if len(normalized) != len(fan.cones):
        raise ValueError(
            f"one coefficient pair per cone: got {len(normalized)} for {len(fan.cones)} cones"
        )
    f = FanLinearFunction(fan, tuple(normalized))

    for i, c in enumerate(fan.cones):
        for ray in (c.ray_high, c.ray_low):
            value = f.piece_value(i, ray)
            if value < 0:
                raise FanLinearityError(
                    "nonnegativity", ray, f"piece {i} is negative at ray {ray}: {value}"
                )

    for i in range(len(fan.cones) - 1):
        shared = fan.cones[i].ray_low  # == fan.cones[i + 1].ray_high
        left, right = f.piece_value(i, shared), f.piece_value(i + 1, shared)
        if left != right:
            raise FanLinearityError(
                "face_agreement",
                shared,
                f"face disagreement at {shared}: {left} != {right}",
            )

    # Subadditive iff f equals the max of its pieces everywhere, iff every
    # piece is dominated by the owning piece at both rays of every cone.
    for j, c in enumerate(fan.cones):
        for ray in (c.ray_high, c.ray_low):
            owner = f.piece_value(j, ray)
            for i in range(len(normalized)):
                if f.piece_value(i, ray) > owner:
                    p, q, fp, fq, fpq = _subadditivity_witness(f)
                    raise FanLinearityError(
                        "subadditivity",
                        (p, q),
                        f"f{p}+f{q} = {fp}+{fq} < f{p + q} = {fpq}",
                    )
    return f


@dataclass(frozen=True)
class FanAlgebraSpec:
    """Ideals I_1..I_n with fan-linear exponent functions f_1..f_n over one
    shared fan: the data of the graded algebra with (r, s) component
    I_1^{f_1(r,s)} ... I_n^{f_n(r,s)}."""

    variables: tuple[str, ...]
    ideals: tuple[MonomialIdeal, ...]
    functions: tuple[FanLinearFunction, ...]

    def __post_init__(self):
        if len(self.ideals) != len(self.functions) or not self.ideals:
            raise ValueError("need equally many ideals and functions, at least one each")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")
        for ideal in self.ideals:
            if ideal.nvars != len(self.variables):
                raise ValueError(
                    f"ideal arity {ideal.nvars} does not match {len(self.variables)} variables"
                )
            if ideal.is_zero():
                raise ValueError("ideals must be nonzero")
        fan = self.functions[0].fan
        for f in self.functions:
            if f.fan != fan:
                raise ValueError("all functions must share one fan")

    @property
    def fan(self) -> Fan:
        return self.functions[0].fan


def _component_on_cone(
    spec: FanAlgebraSpec, i: int, p: LatticePoint2, max_candidates: Optional[int]
) -> MonomialIdeal:
    nvars = len(spec.variables)
    component = MonomialIdeal(nvars, [unit_monomial(nvars)])
    for ideal, f in zip(spec.ideals, spec.functions):
        power = ideal_power(ideal, f.piece_value(i, p), max_candidates)
        component = ideal_product(component, power, max_candidates)
    return component


def graded_component(
    spec: FanAlgebraSpec, r: int, s: int, max_candidates: Optional[int] = None
) -> MonomialIdeal:
    """The (r, s) component I_1^{f_1(r,s)} ... I_n^{f_n(r,s)} as a monomial
    ideal; the oracle for fan-algebra verification."""
    p = LatticePoint2(r, s)
    return _component_on_cone(spec, locate(spec.fan, p), p, max_candidates)


def fan_algebra_generators(
    spec: FanAlgebraSpec, max_candidates: Optional[int] = None
) -> tuple[BigradedMonomial, ...]:
    """Finite generating set: for every Hilbert basis element (r, s) of every
    cone, one generator per minimal generator of the (r, s) component.

    Ordered by cone index, then descending slope of the degree, then
    descending exponent order of the coefficient; duplicates from shared rays
    keep their first occurrence.
    """
    out: list[BigradedMonomial] = []
    seen: set[BigradedMonomial] = set()
    for i, c in enumerate(spec.fan.cones):
        for p in slope_descending(hilbert_basis(c).elements):
            component = _component_on_cone(spec, i, p, max_candidates)
            for mono in component.sorted_gens():
                bm = BigradedMonomial(mono, p)
                if bm not in seen:
                    seen.add(bm)
                    out.append(bm)
    return tuple(out)


def intersection_as_fan_algebra(
    a: Sequence[int], b: Sequence[int], variables: Optional[Sequence[str]] = None
) -> FanAlgebraSpec:
    """The intersection algebra of (x^a) and (x^b) as a fan algebra:
    I_k = (x_k) and f_k(r, s) = max(r*a_k, s*b_k), whose restriction to cone
    i of the fan of (a, b) is r*a_k left of the wall (fan position before i)
    and s*b_k from the wall on."""
    a, b = tuple(a), tuple(b)
    a2, b2, perm = fan_order(a, b)
    fan = build_fan(a2, b2)
    n = len(a)
    if variables is None:
        variables = default_variables(n)
    position = {original: j for j, original in enumerate(perm)}
    ncones = len(fan.cones)
    ideals = []
    functions = []
    for k in range(n):
        exponents = [0] * n
        exponents[k] = 1
        ideals.append(MonomialIdeal(n, [Monomial(tuple(exponents))]))
        if a[k] == 0 and b[k] == 0:
            pieces = ((0, 0),) * ncones
        else:
            j = position[k]
            pieces = tuple(
                (a[k], 0) if j < i else (0, b[k]) for i in range(ncones)
            )
        functions.append(check_fan_linear(fan, pieces))
    return FanAlgebraSpec(tuple(variables), tuple(ideals), tuple(functions))


def verify_fan_algebra(
    spec: FanAlgebraSpec,
    gens: Iterable[BigradedMonomial],
    r_max: int,
    s_max: int,
    max_candidates: Optional[int] = None,
) -> VerificationReport:
    """Check that every graded component on [0..r_max] x [0..s_max] equals the
    product of generator components along a Hilbert decomposition of (r, s).

    The component at a Hilbert degree is rebuilt from the supplied generators,
    so missing or tampered generators surface as reported failures.
    """
    if r_max < 0 or s_max < 0:
        raise ValueError("grid bounds must be nonnegative")
    by_degree: dict[LatticePoint2, set[Monomial]] = {}
    for g in gens:
        by_degree.setdefault(g.degree, set()).add(g.coeff)
    bases = [slope_descending(hilbert_basis(c).elements) for c in spec.fan.cones]
    nvars = len(spec.variables)
    total = (r_max + 1) * (s_max + 1)
    failures = 0
    first = reason = None
    for r in range(r_max + 1):
        for s in range(s_max + 1):
            p = LatticePoint2(r, s)
            i = locate(spec.fan, p)
            elements = [e for e in bases[i] if e in by_degree]
            multiplicities = decompose_over(p, elements)
            if multiplicities is None:
                why = "no decomposition into available generator degrees"
            else:
                product = MonomialIdeal(nvars, [unit_monomial(nvars)])
                for e, m in multiplicities.items():
                    factor = ideal_power(
                        MonomialIdeal(nvars, by_degree[e]), m, max_candidates
                    )
                    product = ideal_product(product, factor, max_candidates)
                if product == graded_component(spec, r, s, max_candidates):
                    continue
                why = "generator component product differs from the graded component"
            failures += 1
            if first is None:
                first, reason = p, why
    return VerificationReport(failures == 0, total, failures, first, reason)


def principal_cap_maximal_power(
    n_vars: int, f: Monomial, r: int, s: int, max_candidates: Optional[int] = None
) -> MonomialIdeal:
    """Minimal generators of (f)^r intersected with (x_1..x_n)^s for a
    non-unit monomial f: equals f^r * m^{max(s - r*deg f, 0)}."""
    if f.nvars != n_vars:
        raise ValueError(f"f has {f.nvars} variables, expected {n_vars}")
    if f.is_unit():
        raise ValueError("f must not be the unit monomial")
    for name, value in (("r", r), ("s", s)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
    clamp = max(s - r * f.total_degree(), 0)
    return ideal_product(
        MonomialIdeal(n_vars, [f**r]),
        ideal_power(maximal_ideal(n_vars), clamp, max_candidates),
        max_candidates,
    )


def principal_cap_algebra(n_vars: int, f: Monomial) -> FanAlgebraSpec:
    """The auxiliary fan algebra behind (f)^r cap m^s: the maximal ideal with
    exponent s - r*deg f above the wall of slope deg f, zero below."""
    if f.is_unit():
        raise ValueError("f must not be the unit monomial")
    degree = f.total_degree()
    fan = build_fan((degree,), (1,))
    function = check_fan_linear(fan, ((-degree, 1), (0, 0)))
    return FanAlgebraSpec(
        default_variables(n_vars), (maximal_ideal(n_vars),), (function,)
    )


def principal_cap_generators(n_vars: int, f: Monomial) -> tuple[BigradedMonomial, ...]:
    """Generating set of the algebra of the (f)^r cap m^s components, obtained
    from the auxiliary fan algebra by multiplying the coefficient at degree
    (r, s) by f^r."""
    spec = principal_cap_algebra(n_vars, f)
    return tuple(
        BigradedMonomial(bm.coeff * (f**bm.degree.r), bm.degree)
        for bm in fan_algebra_generators(spec)
    )


# --- JSON file format ---

class SpecFormatError(ValueError):
    """Invalid fan algebra file; the message names the offending field."""


_REQUIRED_FIELDS = ("variables", "a", "b", "ideals", "pieces")


def _expect_int(path: str, value) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SpecFormatError(f"{path}: expected an exact integer, got {value!r}")
    return value


def _expect_list(path: str, value) -> list:
    if not isinstance(value, list):
        raise SpecFormatError(f"{path}: expected a list")
    return value


def load_fan_algebra_spec(text: str) -> FanAlgebraSpec:
    """Parse and validate the JSON fan-algebra format::

        {"variables": ["x", "y"], "a": [...], "b": [...],
         "ideals": [["x"], ["y"]], "pieces": [[[a, b], ...per cone], ...per function]}

    a and b must already be fan ordered (pieces are positional per cone).
    Raises SpecFormatError with the offending field, or FanLinearityError if a
    piece list is not fan-linear.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecFormatError(f"invalid JSON: {e}") from e
    if not isinstance(data, dict):
        raise SpecFormatError("top level: expected an object")
    unknown = set(data) - set(_REQUIRED_FIELDS) - {"format_version"}
    if unknown:
        raise SpecFormatError(f"unknown field {sorted(unknown)[0]!r}")
    for field in _REQUIRED_FIELDS:
        if field not in data:
            raise SpecFormatError(f"missing field {field!r}")
    version = data.get("format_version", 1)
    if version != 1:
        raise SpecFormatError(f"format_version: unsupported version {version!r}")

    raw_vars = _expect_list("variables", data["variables"])
    if not raw_vars:
        raise SpecFormatError("variables: must be nonempty")
    variables = []
    for i, name in enumerate(raw_vars):
        if not isinstance(name, str) or not name or not name.isidentifier():
            raise SpecFormatError(f"variables[{i}]: expected an identifier, got {name!r}")
        if name in variables:
            raise SpecFormatError(f"variables[{i}]: duplicate name {name!r}")
        variables.append(name)

    exponents = {}
    for field in ("a", "b"):
        entries = _expect_list(field, data[field])
        exponents[field] = tuple(
            _expect_int(f"{field}[{i}]", x) for i, x in enumerate(entries)
        )
    a, b = exponents["a"], exponents["b"]
    try:
        fan = build_fan(a, b)
    except ValueError as e:
        raise SpecFormatError(f"a/b: {e}") from e

    raw_ideals = _expect_list("ideals", data["ideals"])
    if not raw_ideals:
        raise SpecFormatError("ideals: must be nonempty")
    ideals = []
    for k, gens in enumerate(raw_ideals):
        gens = _expect_list(f"ideals[{k}]", gens)
        if not gens:
            raise SpecFormatError(f"ideals[{k}]: must have at least one generator")
        monomials = []
        for j, text_gen in enumerate(gens):
            if not isinstance(text_gen, str):
                raise SpecFormatError(f"ideals[{k}][{j}]: expected a monomial string")
            try:
                monomials.append(parse_monomial(text_gen, variables))
            except ValueError as e:
                raise SpecFormatError(f"ideals[{k}][{j}]: {e}") from e
        ideals.append(MonomialIdeal(len(variables), monomials))

    raw_pieces = _expect_list("pieces", data["pieces"])
    if len(raw_pieces) != len(ideals):
        raise SpecFormatError(
            f"pieces: expected {len(ideals)} piece lists (one per ideal), got {len(raw_pieces)}"
        )
    functions = []
    for k, piece_list in enumerate(raw_pieces):
        piece_list = _expect_list(f"pieces[{k}]", piece_list)
        if len(piece_list) != len(fan.cones):
            raise SpecFormatError(
                f"pieces[{k}]: expected {len(fan.cones)} pairs (one per cone), got {len(piece_list)}"
            )
        pairs = []
        for i, pair in enumerate(piece_list):
            pair = _expect_list(f"pieces[{k}][{i}]", pair)
            if len(pair) != 2:
                raise SpecFormatError(f"pieces[{k}][{i}]: expected a pair [alpha, beta]")
            pairs.append(
                (
                    _expect_int(f"pieces[{k}][{i}][0]", pair[0]),
                    _expect_int(f"pieces[{k}][{i}][1]", pair[1]),
                )
            )
        functions.append(check_fan_linear(fan, pairs))

    return FanAlgebraSpec(tuple(variables), tuple(ideals), tuple(functions))
