"""Exact computation of the cross-ratio degree of a hypergraph.

The map sends a configuration of n distinct points of P^1 to the tuple of
cross-ratios read off the hyperedges.  Its degree is the number of
configurations hitting a generic target, and is computed here the direct
way: fix p1 = infinity, p2 = 0, p3 = 1 using the Moebius action, draw
random target values, build the denominator-cleared polynomial system in
the remaining n-3 unknowns, triangularise it by linear substitutions plus
one classical resultant, and count the solutions that verify against the
original equations and keep all points distinct.

Counting is exact over a random ~62-bit prime field (fast path) or over
the rationals (cross-check path).  Roots of the squarefree eliminant live
in quotient rings K[x]/(g) which split on zero divisors, so no irreducible
factorisation is ever needed; a surviving factor of degree k contributes k
mutually conjugate solutions.  Every linear substitution whose pivot
coefficient involves unknowns spawns a branch system for the vanishing
pivot, so solutions are partitioned by the first vanishing denominator and
counted exactly once.  Random draws that hit a structural coincidence
(vanishing resultant, repeated coordinates, underdetermined branch) raise
``UnluckyDrawError`` and the trial is redrawn, with a random shear of the
final two coordinates as an extra defence on retries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .fields import (
    PrimeField,
    QuotientRing,
    RationalField,
    SplitRequired,
    f_deg,
    f_divmod,
    f_from_ints,
    f_gcd,
    f_squarefree_part,
    random_prime,
    rpoly_gcd,
)
from .hypergraph import Hypergraph, canonical_form
from .poly import MPoly, resultant_bivariate

FIELD_KINDS = ("prime", "rational")
_MAX_ATTEMPTS = 24
_MAX_BRANCH_DEPTH = 12
_RATIONAL_DRAW_RANGE = 1 << 30
_PRIME_BITS = 62


class UnluckyDrawError(RuntimeError):
    """The drawn parameters hit a coincidence; redraw and retry."""


class TriangularizationError(RuntimeError):
    """More than two mutually nonlinear unknowns remain."""


class SolverError(RuntimeError):
    """Retries exhausted without a usable draw."""


# ---------------------------------------------------------------------------
# cross-ratio of four points
# ---------------------------------------------------------------------------


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()


def cross_ratio(z1, z2, z3, z4, field=None):
    """(z3-z1)(z4-z2) / ((z3-z2)(z4-z1)) with the usual infinity limits.

    When one point is infinity the two factors containing it (one in the
    numerator, one in the denominator) cancel.  Points must be pairwise
    distinct; the result lies outside {0, 1}.
    """
    pts = (z1, z2, z3, z4)
    infinite = [i for i, z in enumerate(pts) if z is INFINITY]
    if len(infinite) > 1:
        raise ValueError("points are not pairwise distinct")
    finite = [z for z in pts if z is not INFINITY]
    if len(set(finite)) != len(finite):
        raise ValueError("points are not pairwise distinct")
    if field is None:
        sub = lambda a, b: a - b
        mul = lambda a, b: a * b
        div = lambda a, b: Fraction(a, b) if isinstance(a, int) and isinstance(b, int) else a / b
    else:
        sub, mul = field.sub, field.mul
        div = lambda a, b: field.mul(a, field.inv(b))
    if not infinite:
        num = mul(sub(z3, z1), sub(z4, z2))
        den = mul(sub(z3, z2), sub(z4, z1))
    elif infinite[0] == 0:
        num, den = sub(z4, z2), sub(z3, z2)
    elif infinite[0] == 1:
        num, den = sub(z3, z1), sub(z4, z1)
    elif infinite[0] == 2:
        num, den = sub(z4, z2), sub(z4, z1)
    else:
        num, den = sub(z3, z1), sub(z3, z2)
    return div(num, den)


# ---------------------------------------------------------------------------
# system construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParameterDraw:
    """Generic target values for the cross-ratio equations.

    Targets are field elements: ints mod p for the prime backend, ints or
    Fractions for the rational one.
    """

    targets: tuple
    seed: int = 0

    def __post_init__(self) -> None:
        if any(a in (0, 1) for a in self.targets):
            raise ValueError("targets must avoid 0 and 1")
        if len(set(self.targets)) != len(self.targets):
            raise ValueError("targets must be pairwise distinct")


@dataclass
class CrossRatioSystem:
    """Gauge-fixed equations plus the distinctness side conditions.

    Unknown i stands for the point p_{i+4}; p1 = infinity, p2 = 0, p3 = 1.
    Every equation is multilinear by construction.
    """

    n_vertices: int
    modulus: Optional[int]
    draw: ParameterDraw
    equations: list[MPoly]
    degeneracy: list[MPoly]

    @property
    def nvars(self) -> int:
        return self.n_vertices - 3

    def variable_names(self) -> list[str]:
        return [f"p{i + 4}" for i in range(self.nvars)]


def _position(vertex: int, nvars: int, modulus: Optional[int]):
    """The gauge position of a vertex: INFINITY, a constant, or an unknown."""
    if vertex == 1:
        return INFINITY
    if vertex == 2:
        return MPoly.constant(0, nvars, modulus)
    if vertex == 3:
        return MPoly.constant(1, nvars, modulus)
    return MPoly.variable(vertex - 4, nvars, modulus)


def equation_for_edge(
    edge: Sequence[int], target, nvars: int, modulus: Optional[int]
) -> MPoly:
    """Denominator-cleared equation for one ordered cross-ratio constraint.

    ``target`` may be an int or (over the rationals) a Fraction; rational
    targets are cleared into integer coefficients, which leaves the zero
    set unchanged.
    """
    z = [_position(v, nvars, modulus) for v in edge]
    if isinstance(target, Fraction):
        if modulus is not None:
            raise ValueError("fractional targets require the rational field")
        t_num, t_den = target.numerator, target.denominator
    else:
        t_num, t_den = target, 1
    infinite = [i for i, v in enumerate(edge) if v == 1]
    if not infinite:
        num = (z[2] - z[0]) * (z[3] - z[1])
        den = (z[2] - z[1]) * (z[3] - z[0])
    elif infinite[0] == 0:
        num, den = z[3] - z[1], z[2] - z[1]
    elif infinite[0] == 1:
        num, den = z[2] - z[0], z[3] - z[0]
    elif infinite[0] == 2:
        num, den = z[3] - z[1], z[3] - z[0]
    else:
        num, den = z[2] - z[0], z[2] - z[1]
    return (num.scale(t_den) - den.scale(t_num)).content_stripped()


def system_from_edge_tuples(
    n_vertices: int,
    edge_tuples: Sequence[Sequence[int]],
    draw: ParameterDraw,
    modulus: Optional[int] = None,
) -> CrossRatioSystem:
    """Build the system for explicitly ordered edge tuples.

    The public entry point :func:`gauge_and_build` uses ascending tuples;
    this variant exists so reordering vertices inside an edge (which moves
    the target through the anharmonic group but preserves the preimage
    count) can be exercised directly.
    """
    nvars = n_vertices - 3
    if len(edge_tuples) != len(draw.targets):
        raise ValueError("need one target per edge")
    equations = [
        equation_for_edge(e, a, nvars, modulus) for e, a in zip(edge_tuples, draw.targets)
    ]
    degeneracy = []
    for i in range(nvars):
        xi = MPoly.variable(i, nvars, modulus)
        degeneracy.append(xi)
        degeneracy.append(xi - MPoly.constant(1, nvars, modulus))
    for i in range(nvars):
        for j in range(i + 1, nvars):
            degeneracy.append(
                MPoly.variable(i, nvars, modulus) - MPoly.variable(j, nvars, modulus)
            )
    return CrossRatioSystem(n_vertices, modulus, draw, equations, degeneracy)


def gauge_and_build(
    h: Hypergraph, draw: ParameterDraw, modulus: Optional[int] = None
) -> CrossRatioSystem:
    """Gauge-fix and build the polynomial system for a hypergraph.

    Expects vertices ordered by nonincreasing degree (canonical order), so
    the gauge pins the three highest-degree vertices.
    """
    deg = h.degrees()
    if list(deg) != sorted(deg, reverse=True):
        raise ValueError("vertices must be ordered by nonincreasing degree")
    if h.has_isolated_vertex():
        raise ValueError("hypergraph has an isolated vertex")
    return system_from_edge_tuples(h.n_vertices, h.edges, draw, modulus)


# ---------------------------------------------------------------------------
# triangularisation
# ---------------------------------------------------------------------------


@dataclass
class Substitution:
    var: int
    num: MPoly
    den: MPoly
    den_is_constant: bool


@dataclass
class TriangularChain:
    """One elimination path plus the branch systems it spawned.

    ``substitutions`` holds the full prefix from the root, so the chain can
    recover every unknown on its own.  ``assume_zero`` lists the pivot
    coefficients this chain assumes vanish (branch-defining), and
    ``assume_nonzero`` those assumed invertible, partitioning the solution
    set across sibling chains.
    """

    substitutions: list[Substitution]
    assume_zero: list[MPoly]
    assume_nonzero: list[MPoly]
    inconsistent: bool = False
    eliminant_var: Optional[int] = None
    terminal_upolys: list[list[int]] = field(default_factory=list)
    final_pair: Optional[list[MPoly]] = None
    pair_elim_var: Optional[int] = None
    shear: Optional[tuple[int, int, int]] = None  # x := x' + t*y as (x, y, t)
    branches: list["TriangularChain"] = field(default_factory=list)


def triangularize(sys: CrossRatioSystem, shear_t: Optional[int] = None) -> TriangularChain:
    """Eliminate unknowns one linear pivot at a time.

    Picks the first equation with an unknown of degree 1 whose coefficient
    is a nonzero constant and eliminates the highest-index such unknown;
    nonconstant pivot coefficients spawn a branch system for their
    vanishing.  With two unknowns left and nothing linear, one classical
    resultant produces the univariate eliminant.  ``shear_t`` applies the
    coordinate change x -> x + t*y to the final two unknowns first, which
    separates solutions that share a coordinate.
    """
    active = set(range(sys.nvars))
    eqs = [
        (e.content_stripped(), frozenset(e.variables())) for e in sys.equations
    ]
    return _triangularize(eqs, active, [], [], [], 0, shear_t, sys.modulus)


_Tagged = tuple[MPoly, frozenset]


def _triangularize(
    eqs: list[_Tagged],
    active: set[int],
    subs: list[Substitution],
    assume_zero: list[MPoly],
    assume_nonzero: list[MPoly],
    depth: int,
    shear_t: Optional[int],
    modulus: Optional[int],
) -> TriangularChain:
    if depth > _MAX_BRANCH_DEPTH:
        raise UnluckyDrawError("branch recursion exceeded its depth bound")
    subs = list(subs)
    assume_zero = list(assume_zero)
    assume_nonzero = list(assume_nonzero)
    branches: list[TriangularChain] = []

    def finish(**kwargs) -> TriangularChain:
        return TriangularChain(
            substitutions=subs,
            assume_zero=assume_zero,
            assume_nonzero=assume_nonzero,
            branches=branches,
            **kwargs,
        )

    while True:
        eqs = [(e, orig) for e, orig in eqs if not e.is_zero()]
        if any(e.is_constant() for e, _ in eqs):
            return finish(inconsistent=True)
        if not eqs:
            raise UnluckyDrawError("underdetermined system")
        if len(active) == 1:
            v = next(iter(active))
            return finish(
                eliminant_var=v, terminal_upolys=[e.to_univariate(v) for e, _ in eqs]
            )

        pivot = _find_pivot(eqs, active)
        if pivot is None:
            if len(active) > 2:
                raise TriangularizationError(
                    f"{len(active)} mutually nonlinear unknowns remain"
                )
            x, y = sorted(active)
            plain = [e for e, _ in eqs]
            shear = None
            if shear_t is not None:
                shear = (x, y, shear_t)
                replacement = MPoly.variable(x, plain[0].nvars, modulus) + MPoly.variable(
                    y, plain[0].nvars, modulus
                ).scale(shear_t)
                one = MPoly.constant(1, plain[0].nvars, modulus)
                plain = [e.substitute(x, replacement, one) for e in plain]
                plain = [e for e in plain if not e.is_zero()]
            with_y = [e for e in plain if e.degree_in(y) > 0]
            without_y = [e for e in plain if e.degree_in(y) == 0]
            if not with_y:
                raise UnluckyDrawError("partner unknown is unconstrained")
            terminal = [e.to_univariate(x) for e in without_y]
            if len(with_y) >= 2:
                res = resultant_bivariate(with_y[0], with_y[1], elim=y, keep=x)
                if not res:
                    raise UnluckyDrawError("vanishing resultant")
                terminal.append(res)
            if not terminal:
                raise UnluckyDrawError("underdetermined final pair")
            return finish(
                eliminant_var=x,
                terminal_upolys=terminal,
                final_pair=with_y,
                pair_elim_var=y,
                shear=shear,
            )

        ei, v, is_const = pivot
        coeffs = eqs[ei][0].coeffs_by_power(v)
        c0, c1 = coeffs[0], coeffs[1]
        if not is_const:
            branch_eqs = [
                (c1, frozenset(c1.variables())),
                (c0, frozenset(c0.variables())),
            ] + [q for i, q in enumerate(eqs) if i != ei]
            branches.append(
                _triangularize(
                    branch_eqs,
                    set(active),
                    subs,
                    assume_zero + [c1],
                    assume_nonzero,
                    depth + 1,
                    shear_t,
                    modulus,
                )
            )
            assume_nonzero.append(c1)
        subs.append(Substitution(v, -c0, c1, is_const))
        eqs = [
            (q.substitute(v, -c0, c1), orig) for i, (q, orig) in enumerate(eqs) if i != ei
        ]
        active = active - {v}


def _find_pivot(eqs: list[_Tagged], active: set[int]) -> Optional[tuple[int, int, bool]]:
    """(equation index, unknown, coefficient-is-constant) for the next pivot.

    Constant coefficients are always preferred (they never branch), and an
    equation is solved for one of its own original unknowns when possible,
    mirroring how the linear cross-ratio constraints are chained by hand;
    ties go to the highest-index unknown.
    """

    def scan(want_const: bool, own_only: bool) -> Optional[tuple[int, int, bool]]:
        for ei, (e, orig) in enumerate(eqs):
            cands = [
                v
                for v in active
                if e.degree_in(v) == 1
                and (not own_only or v in orig)
                and (not want_const or e.coeffs_by_power(v)[1].is_constant())
            ]
            if cands:
                return ei, max(cands), want_const
        return None

    for want_const, own_only in ((True, True), (True, False), (False, True), (False, False)):
        hit = scan(want_const, own_only)
        if hit is not None:
            return hit
    return None


# ---------------------------------------------------------------------------
# root counting
# ---------------------------------------------------------------------------


def count_preimages(chain: TriangularChain, sys: CrossRatioSystem) -> int:
    """Number of verified nondegenerate solutions across all branches."""
    F = PrimeField(sys.modulus) if sys.modulus is not None else RationalField()
    total = _count_chain(chain, sys, F, None, ())
    for branch in chain.branches:
        total += count_preimages(branch, sys)
    return total


def rational_solutions(
    chain: TriangularChain, sys: CrossRatioSystem, hints: Sequence = ()
) -> list[tuple]:
    """The verified solutions whose coordinates lie in the base field.

    Solutions are read off degree-1 eliminant factors.  Conjugate root
    bundles only split when their behaviour differs, so a known candidate
    coordinate (for example a seeded solution) can be passed via ``hints``
    to peel its linear factor explicitly; the forward cross-check then
    evaluates the cross-ratio map at every recovered tuple.
    """
    F = PrimeField(sys.modulus) if sys.modulus is not None else RationalField()
    found: list[tuple] = []
    _count_chain(chain, sys, F, found, hints)
    for branch in chain.branches:
        found.extend(rational_solutions(branch, sys, hints))
    return found


def _count_chain(
    chain: TriangularChain, sys: CrossRatioSystem, F, collect: Optional[list], hints: Sequence
) -> int:
    if chain.inconsistent:
        return 0
    polys = [f_from_ints(c, F) for c in chain.terminal_upolys]
    if any(f_deg(p) == 0 for p in polys if p):
        return 0
    polys = [p for p in polys if p]
    if not polys:
        raise UnluckyDrawError("empty eliminant")
    eliminant = polys[0]
    for p in polys[1:]:
        eliminant = f_gcd(eliminant, p, F)
    if f_deg(eliminant) <= 0:
        return 0
    base = f_squarefree_part(eliminant, F)
    work = []
    for hint in hints:
        if f_deg(base) < 1:
            break
        linear = [F.neg(hint), F.one()]
        quotient, rem = f_divmod(base, linear, F)
        if not rem:
            work.append(linear)
            base = quotient
    if f_deg(base) >= 1:
        work.append(base)
    total = 0
    while work:
        g = work.pop()
        try:
            values = _verified_values(g, chain, sys, F)
        except SplitRequired as split:
            work.append(split.left)
            work.append(split.right)
            continue
        if values is None:
            continue
        total += f_deg(g)
        if collect is not None and f_deg(g) == 1:
            collect.append(tuple(v[0] for v in values))
    return total


def _verified_values(
    g: list, chain: TriangularChain, sys: CrossRatioSystem, F
) -> Optional[list]:
    """Recover and verify the solution over one squarefree factor.

    Returns the coordinate values in K[x]/(g), or None when the factor's
    roots fail verification.  All roots of g behave identically by the
    time this returns; a SplitRequired escape hands back two finer factors
    instead.
    """
    ring = QuotientRing(F, g)
    values: list = [None] * sys.nvars
    assert chain.eliminant_var is not None
    values[chain.eliminant_var] = ring.gen()

    if chain.final_pair is not None:
        y = chain.pair_elim_var
        assert y is not None
        rpolys = []
        for e in chain.final_pair:
            coeffs = e.coeffs_by_power(y)
            rpolys.append([_eval(c, ring, values) for c in coeffs])
        d = rpoly_gcd(rpolys, ring)
        if d is None:
            raise UnluckyDrawError("partner unknown vanished from the final pair")
        if len(d) - 1 == 0:
            return None
        if len(d) - 1 >= 2:
            raise UnluckyDrawError("repeated partner coordinate")
        values[y] = ring.neg(d[0])

    if chain.shear is not None:
        x, y, t = chain.shear
        values[x] = ring.add(values[x], ring.mul(ring.from_int(t), values[y]))

    for sub in reversed(chain.substitutions):
        den = _eval(sub.den, ring, values)
        if ring.is_zero(den):
            if sub.den_is_constant:
                raise AssertionError("constant pivot denominator vanished")
            return None  # this root belongs to the branch spawned here
        values[sub.var] = ring.mul(_eval(sub.num, ring, values), ring.inv(den))

    assert all(v is not None for v in values)
    for q in chain.assume_zero:
        if not ring.is_zero(_eval(q, ring, values)):
            return None
    for q in chain.assume_nonzero:
        if ring.is_zero(_eval(q, ring, values)):
            return None
    for e in sys.equations:
        if not ring.is_zero(_eval(e, ring, values)):
            return None
    for q in sys.degeneracy:
        if ring.is_zero(_eval(q, ring, values)):
            return None
    return values


def _eval(p: MPoly, ring: QuotientRing, values: list):
    return p.evaluate(ring, values)


# ---------------------------------------------------------------------------
# trials and consensus
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeResult:
    """A computed degree with its trial transcript."""

    degree: int
    provenance: str
    trials: tuple[tuple[int, int], ...]  # (trial seed, count)
    consensus: bool


def _run_trial(
    h: Hypergraph, trial_seed: int, field_kind: str
) -> tuple[CrossRatioSystem, TriangularChain, int]:
    """Draw, build, triangularise and count; redraw on unlucky draws.

    A random shear of the final two coordinates is enabled from the second
    attempt on.
    """
    if field_kind not in FIELD_KINDS:
        raise ValueError(f"field must be one of {FIELD_KINDS}")
    for attempt in range(_MAX_ATTEMPTS):
        rng = random.Random(f"draw|{trial_seed}|{attempt}|{field_kind}")
        if field_kind == "prime":
            modulus = random_prime(rng, _PRIME_BITS)
            targets = _draw_targets(rng, h.n_edges, modulus)
        else:
            modulus = None
            targets = _draw_targets(rng, h.n_edges, None)
        draw = ParameterDraw(tuple(targets), seed=trial_seed)
        shear_t = None if attempt == 0 else rng.randrange(1, _RATIONAL_DRAW_RANGE)
        try:
            sys = gauge_and_build(h, draw, modulus)
            chain = triangularize(sys, shear_t=shear_t)
            return sys, chain, count_preimages(chain, sys)
        except UnluckyDrawError:
            continue
    raise SolverError(f"no usable draw after {_MAX_ATTEMPTS} attempts (seed {trial_seed})")


def solve_once(h: Hypergraph, trial_seed: int, field_kind: str = "prime") -> int:
    """One full solve with parameters drawn from the given seed."""
    return _run_trial(h, trial_seed, field_kind)[2]


def describe_class(h: Hypergraph, seed: int = 0, field_kind: str = "prime") -> str:
    """Plain-text dump of the first trial's chain and eliminant."""
    key = canonical_form(h)
    trial_seed = _trial_seed(seed, key.bits, 0, field_kind)
    sys, chain, count = _run_trial(key.hypergraph(), trial_seed, field_kind)
    lines = [
        f"key: {key.bits}",
        f"field: {field_kind}" + (f" (mod {sys.modulus})" if sys.modulus else ""),
        f"targets: {list(sys.draw.targets)}",
        f"count: {count}",
        format_chain(chain, sys.variable_names()),
    ]
    return "\n".join(lines) + "\n"


def _draw_targets(rng: random.Random, count: int, modulus: Optional[int]) -> list[int]:
    top = modulus if modulus is not None else _RATIONAL_DRAW_RANGE
    targets: set[int] = set()
    while len(targets) < count:
        targets.add(rng.randrange(2, top))
    out = sorted(targets)
    rng.shuffle(out)
    return out


def cross_ratio_degree(
    h: Hypergraph, trials: int = 5, seed: int = 0, field_kind: str = "prime"
) -> DegreeResult:
    """Multi-trial consensus degree of a hypergraph.

    The graph is canonicalised first, so isomorphic inputs get identical
    transcripts.  On disagreement the number of trials is doubled once;
    if counts still differ the maximum is reported with consensus=False.
    """
    if trials < 3:
        raise ValueError("need at least 3 trials")
    if h.has_isolated_vertex():
        raise ValueError("hypergraph has an isolated vertex")
    key = canonical_form(h)
    hc = key.hypergraph()
    transcript: list[tuple[int, int]] = []

    def run_trial(index: int) -> None:
        trial_seed = _trial_seed(seed, key.bits, index, field_kind)
        transcript.append((trial_seed, solve_once(hc, trial_seed, field_kind)))

    for t in range(trials):
        run_trial(t)
    counts = {c for _, c in transcript}
    if len(counts) > 1:
        for t in range(trials, 2 * trials):
            run_trial(t)
        counts = {c for _, c in transcript}
    consensus = len(counts) == 1
    degree = max(counts)
    return DegreeResult(degree, "solver", tuple(transcript), consensus)


def _trial_seed(seed: int, key_bits: str, trial: int, field_kind: str) -> int:
    rng = random.Random(f"trial|{seed}|{key_bits}|{trial}|{field_kind}")
    return rng.getrandbits(48)


# ---------------------------------------------------------------------------
# debug formatting
# ---------------------------------------------------------------------------


def format_chain(chain: TriangularChain, names: Sequence[str], indent: str = "") -> str:
    """Plain-text dump of substitutions, eliminant and branches."""
    lines = []
    if chain.assume_zero:
        conds = "; ".join(q.format(names) + " = 0" for q in chain.assume_zero)
        lines.append(f"{indent}assuming {conds}")
    for sub in chain.substitutions:
        lines.append(
            f"{indent}{names[sub.var]} = ({sub.num.format(names)}) / ({sub.den.format(names)})"
        )
    if chain.inconsistent:
        lines.append(f"{indent}inconsistent (nonzero constant equation)")
    elif chain.eliminant_var is not None:
        if chain.shear is not None:
            x, y, t = chain.shear
            lines.append(f"{indent}shear {names[x]} -> {names[x]} + {t}*{names[y]}")
        for c in chain.terminal_upolys:
            poly = " + ".join(
                f"{coef}*{names[chain.eliminant_var]}^{i}" for i, coef in enumerate(c) if coef
            )
            lines.append(f"{indent}eliminant[{names[chain.eliminant_var]}]: {poly or '0'}")
        if chain.final_pair is not None and chain.pair_elim_var is not None:
            lines.append(
                f"{indent}partner {names[chain.pair_elim_var]} from: "
                + "; ".join(e.format(names) for e in chain.final_pair)
            )
    for i, branch in enumerate(chain.branches):
        lines.append(f"{indent}branch {i + 1}:")
        lines.append(format_chain(branch, names, indent + "  "))
    return "\n".join(lines)
