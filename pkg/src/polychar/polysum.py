"""Weight-polytope lattice sums and their cross-checks.

Four independent routes live here:

* a brute-force enumerator over the polytope's bounding box (the oracle),
* operator formulas that assemble the same sums from root-indexed Demazure
  operators walking the positive roots in angular order (rank 2 and A3),
* numeric evaluation of the vertex-cone rational expression and of the Weyl
  character quotient at generic points,
* a Freudenthal-recursion character builder, plus the expansion of a
  character into polytope sums over dominant weights.
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .demazure import apply_d_root, apply_r_root, character_demazure
from .formal import FormalSum, evaluate
from .rootsys import RootSystem, Weight, gamma_sequence
from .weyl import dominant_representative, orbit, weyl_group

import math

_POINT_CAP = 10**6
_POLE_TOLERANCE = 1e-6
_SAMPLER_MARGIN = 1e-2
_CROSS_CHECK_TOL = 1e-9
DEFAULT_SEED = 20240914


class PolytopeSizeError(RuntimeError):
    """Enumeration request exceeds the configured candidate cap."""


class GenericityError(RuntimeError):
    """Evaluation point too close to a pole hyperplane; resample sigma."""


@dataclass(frozen=True)
class PolytopeSum:
    """Lattice sum over a weight polytope plus its vertex orbit."""

    sum: FormalSum
    vertex_set: frozenset


@dataclass(frozen=True)
class PolytopeExpansion:
    """Nonzero coefficients expanding a character into polytope sums,
    keyed by dominant weight."""

    coefficients: dict

    def to_json_obj(self) -> list:
        return [{"w": list(w), "c": c} for w, c in sorted(self.coefficients.items())]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one formula-vs-oracle comparison."""

    formula: str
    algebra: str
    lam: Weight
    match: bool
    diff: FormalSum
    n_points: int
    millis: float

    def to_json_obj(self) -> dict:
        return {
            "formula": self.formula,
            "algebra": self.algebra,
            "lambda": list(self.lam),
            "match": self.match,
            "diff": self.diff.to_json_obj(),
            "n_points": self.n_points,
            "millis": self.millis,
        }


def _require_dominant(rs: RootSystem, weight) -> Weight:
    lam = tuple(weight)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} has length {len(lam)}, expected {rs.rank}")
    if any(x < 0 for x in lam):
        raise ValueError(f"weight {lam} is not dominant")
    return lam


def _check_sigma(rs: RootSystem, sigma) -> tuple[float, ...]:
    if len(sigma) != rs.rank:
        raise ValueError(f"sigma {tuple(sigma)} has wrong length for {rs.name}")
    return tuple(float(x) for x in sigma)


def polytope_member(rs: RootSystem, lam, mu) -> bool:
    """Exact membership test: is mu a lattice point of lam's weight polytope?

    mu belongs iff it sits in lam's coset of the root lattice and its
    dominant representative lies under lam in dominance order.  Both checks
    are integer arithmetic; no geometry is built.
    """
    lam = _require_dominant(rs, lam)
    mu = tuple(mu)
    if len(mu) != rs.rank:
        raise ValueError(f"weight {mu} has length {len(mu)}, expected {rs.rank}")
    diff = tuple(m - l for m, l in zip(mu, lam))
    if rs.root_coords_of_weight(diff) is None:
        return False
    dom, _ = dominant_representative(rs, mu)
    gap = rs.root_coords_of_weight(tuple(l - d for l, d in zip(lam, dom)))
    assert gap is not None
    return all(g >= 0 for g in gap)


def polytope_sum_oracle(rs: RootSystem, lam) -> PolytopeSum:
    """Brute-force lattice sum over the weight polytope of a dominant weight.

    Candidates come from the per-label bounding box of the vertex orbit;
    each is kept iff `polytope_member` accepts it.  All coefficients are 1.
    """
    lam = _require_dominant(rs, lam)
    if rs.rank > 3:
        raise ValueError("polytope enumeration is desk-scale: rank <= 3")
    verts = orbit(rs, lam)
    r = rs.rank
    lows = [min(v[i] for v in verts) for i in range(r)]
    highs = [max(v[i] for v in verts) for i in range(r)]
    volume = 1
    for lo, hi in zip(lows, highs):
        volume *= hi - lo + 1
    if volume > _POINT_CAP:
        raise PolytopeSizeError(
            f"bounding box holds {volume} candidates; cap is {_POINT_CAP}"
        )
    terms = {}
    for cand in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        if polytope_member(rs, lam, cand):
            terms[cand] = 1
    return PolytopeSum(FormalSum(r, terms), frozenset(verts))


def _edge_bracket(rs: RootSystem, segment, s: FormalSum) -> FormalSum:
    """Apply [d(b_m) r(b_{m-1}) ... r(b_1) + ... + d(b_2) r(b_1) + d(b_1) + 1]
    to ``s`` for a segment (b_1, ..., b_m) of roots, rightmost factors first."""
    total = s
    staged = s
    for pos, root in enumerate(segment):
        total = total.add(apply_d_root(rs, root, staged))
        if pos + 1 < len(segment):
            staged = apply_r_root(rs, root, staged)
    return total


def polytope_sum_rank2(rs: RootSystem, lam) -> FormalSum:
    """Weight-polytope lattice sum of a rank-2 algebra assembled from
    root-indexed Demazure operators along the angular order of the positive
    roots: the bracket over the first p-1 roots, then [d(gamma_p) + 1]."""
    if (rs.id.family, rs.rank) not in (("A", 2), ("B", 2), ("G", 2)):
        raise ValueError(f"the rank-2 polytope formula needs A2, B2 or G2; got {rs.name}")
    lam = _require_dominant(rs, lam)
    gammas = gamma_sequence(rs).roots
    inner_part = _edge_bracket(rs, gammas[:-1], FormalSum.exp(lam))
    return _edge_bracket(rs, gammas[-1:], inner_part)


def polytope_sum_a3(rs: RootSystem, lam) -> FormalSum:
    """Weight-polytope lattice sum of A3 as a product of three edge-walk
    brackets, one per segment of the angular root order, rightmost bracket
    acting first."""
    if (rs.id.family, rs.rank) != ("A", 3):
        raise ValueError(f"the A3 polytope formula needs A3; got {rs.name}")
    lam = _require_dominant(rs, lam)
    g = gamma_sequence(rs).roots
    out = FormalSum.exp(lam)
    for segment in (g[0:3], g[3:5], g[5:6]):
        out = _edge_bracket(rs, segment, out)
    return out


def polytope_sum_demazure(rs: RootSystem, lam) -> FormalSum:
    """Operator-formula route to the polytope sum, dispatched by algebra
    (A1, A2, B2, G2 or A3)."""
    key = (rs.id.family, rs.rank)
    if key == ("A", 1):
        lam = _require_dominant(rs, lam)
        return _edge_bracket(rs, gamma_sequence(rs).roots, FormalSum.exp(lam))
    if key in (("A", 2), ("B", 2), ("G", 2)):
        return polytope_sum_rank2(rs, lam)
    if key == ("A", 3):
        return polytope_sum_a3(rs, lam)
    raise ValueError(f"no operator polytope-sum formula for {rs.name}")


def _formula_name(rs: RootSystem) -> str:
    key = (rs.id.family, rs.rank)
    if key == ("A", 1):
        return "demazure_a1"
    if key in (("A", 2), ("B", 2), ("G", 2)):
        return "demazure_rank2"
    if key == ("A", 3):
        return "demazure_a3"
    raise ValueError(f"no operator polytope-sum formula for {rs.name}")


def brion_eval(rs: RootSystem, lam, sigma) -> float:
    """Numeric value at sigma of the vertex-cone rational expression for the
    polytope lattice sum: one exponential per Weyl image of lam, divided by
    the product of (1 - e^{-<w alpha, sigma>}) over the simple roots.

    Raises GenericityError when sigma is within 1e-6 of a pole hyperplane.
    """
    lam = _require_dominant(rs, lam)
    sig = _check_sigma(rs, sigma)
    table = weyl_group(rs)
    simples = [root.weight_coords for root in rs.simple_roots]
    staged = []
    for el in table.elements:
        pairs = []
        for alpha in simples:
            x = rs.inner_float(el.apply(alpha), sig)
            if abs(x) <= _POLE_TOLERANCE:
                raise GenericityError(
                    f"sigma is within {_POLE_TOLERANCE} of a pole hyperplane; resample"
                )
            pairs.append(x)
        staged.append((el, pairs))
    total = 0.0
    for el, pairs in staged:
        term = math.exp(rs.inner_float(el.apply(lam), sig))
        for x in pairs:
            term /= 1.0 - math.exp(-x)
        total += term
    return total


def weyl_character_eval(rs: RootSystem, lam, sigma) -> float:
    """Numeric character value at sigma, computed both as the alternating
    sum over the shifted Weyl action divided by the denominator product and
    as the manifestly invariant sum of vertex-cone terms over all positive
    roots.  The two must agree to 1e-9 relative; the first is returned."""
    lam = _require_dominant(rs, lam)
    sig = _check_sigma(rs, sigma)
    table = weyl_group(rs)
    pos = [root.weight_coords for root in rs.positive_roots]
    for alpha in pos:
        for el in table.elements:
            x = rs.inner_float(el.apply(alpha), sig)
            if abs(x) <= _POLE_TOLERANCE:
                raise GenericityError(
                    f"sigma is within {_POLE_TOLERANCE} of a pole hyperplane; resample"
                )
    lam_rho = tuple(x + 1 for x in lam)
    num = 0.0
    for el in table.elements:
        shifted = tuple(x - 1 for x in el.apply(lam_rho))
        num += el.sign * math.exp(rs.inner_float(shifted, sig))
    den = 1.0
    for alpha in pos:
        den *= 1.0 - math.exp(-rs.inner_float(alpha, sig))
    alternating = num / den
    invariant = 0.0
    for el in table.elements:
        term = math.exp(rs.inner_float(el.apply(lam), sig))
        for alpha in pos:
            term /= 1.0 - math.exp(-rs.inner_float(el.apply(alpha), sig))
        invariant += term
    scale = max(abs(alternating), abs(invariant), 1e-300)
    if abs(alternating - invariant) / scale > _CROSS_CHECK_TOL:
        raise ArithmeticError(
            "the two character evaluations disagree beyond 1e-9; sigma is ill-conditioned"
        )
    return alternating


def dominant_weights_below(rs: RootSystem, lam) -> list:
    """Dominant weights of lam's root-lattice coset lying under lam in
    dominance order, sorted from lam downward (then lexicographically)."""
    lam = _require_dominant(rs, lam)
    verts = orbit(rs, lam)
    r = rs.rank
    highs = [max(v[i] for v in verts) for i in range(r)]
    found = []
    for cand in product(*(range(0, h + 1) for h in highs)):
        gap = rs.root_coords_of_weight(tuple(l - c for l, c in zip(lam, cand)))
        if gap is not None and all(g >= 0 for g in gap):
            found.append((sum(gap), cand))
    found.sort()
    return [cand for _, cand in found]


def dominant_weight_multiplicities(rs: RootSystem, lam) -> dict:
    """Weight multiplicities of the irreducible module with highest weight
    lam, tabulated on its dominant weights by the Freudenthal recursion.

    Processing runs from lam downward so every multiplicity needed on the
    right-hand side is already known; each value must come out a positive
    integer, which is asserted.
    """
    lam = _require_dominant(rs, lam)
    doms = dominant_weights_below(rs, lam)
    rho = rs.weyl_vector
    lam_rho = tuple(l + d for l, d in zip(lam, rho))
    top = rs.inner(lam_rho, lam_rho)
    mult: dict = {}
    for mu in doms:
        if mu == lam:
            mult[mu] = 1
            continue
        acc = Fraction(0)
        for root in rs.positive_roots:
            wc = root.weight_coords
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu, wc))
                dom_nu, _ = dominant_representative(rs, nu)
                m_nu = mult.get(dom_nu)
                if m_nu is None:
                    break
                acc += m_nu * rs.inner(nu, wc)
                k += 1
        mu_rho = tuple(m + d for m, d in zip(mu, rho))
        denom = top - rs.inner(mu_rho, mu_rho)
        value = 2 * acc / denom
        if value.denominator != 1 or value <= 0:
            raise ArithmeticError(f"multiplicity recursion broke at {mu}: {value}")
        mult[mu] = int(value)
    return mult


def character_freudenthal(rs: RootSystem, lam) -> FormalSum:
    """Character of the irreducible highest-weight module via the
    Freudenthal recursion, spread over full Weyl orbits."""
    mult = dominant_weight_multiplicities(rs, lam)
    terms = {}
    for mu, m in mult.items():
        for w in orbit(rs, mu):
            terms[w] = m
    return FormalSum(rs.rank, terms)


def weyl_dimension(rs: RootSystem, lam) -> int:
    """Dimension of the irreducible module: the product over positive roots
    of (lam + rho, alpha) / (rho, alpha), exactly."""
    lam = _require_dominant(rs, lam)
    rho = rs.weyl_vector
    lam_rho = tuple(l + d for l, d in zip(lam, rho))
    value = Fraction(1)
    for root in rs.positive_roots:
        wc = root.weight_coords
        value *= rs.inner(lam_rho, wc) / rs.inner(rho, wc)
    if value.denominator != 1 or value <= 0:
        raise ArithmeticError(f"dimension product is not a positive integer: {value}")
    return int(value)


def _dominates(rs: RootSystem, hi, lo) -> bool:
    gap = rs.root_coords_of_weight(tuple(h - l for h, l in zip(hi, lo)))
    return gap is not None and all(g >= 0 for g in gap)


def polytope_expansion(rs: RootSystem, lam) -> PolytopeExpansion:
    """Integer coefficients expanding the irreducible character as a
    combination of polytope lattice sums over dominant weights below lam.

    Every dominant weight under a dominant weight lies inside its polytope,
    so peeling from lam downward determines each coefficient: the weight's
    multiplicity minus the coefficients already fixed above it."""
    lam = _require_dominant(rs, lam)
    mult = dominant_weight_multiplicities(rs, lam)
    coeffs: dict = {}
    for mu in dominant_weights_below(rs, lam):
        value = mult[mu]
        for nu, c in coeffs.items():
            if _dominates(rs, nu, mu):
                value -= c
        if value:
            coeffs[mu] = value
    return PolytopeExpansion(coeffs)


def sample_generic_sigmas(rs: RootSystem, count: int, seed: int = DEFAULT_SEED) -> list:
    """Seeded evaluation points, uniform per coordinate in [0.1, 1.1],
    resampled until every root pairing clears the sampler margin."""
    rng = random.Random(seed)
    pos = [root.weight_coords for root in rs.positive_roots]
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000 * max(count, 1):
            raise GenericityError("could not sample generic evaluation points")
        sig = tuple(rng.uniform(0.1, 1.1) for _ in range(rs.rank))
        if all(abs(rs.inner_float(alpha, sig)) > _SAMPLER_MARGIN for alpha in pos):
            out.append(sig)
    return out


def verify_polytope_formula(rs: RootSystem, max_label: int) -> list:
    """Sweep every dominant weight with labels in [0..max_label], comparing
    the operator formula against the brute-force enumerator exactly."""
    if max_label < 0:
        raise ValueError("max_label must be nonnegative")
    name = _formula_name(rs)
    reports = []
    for labels in product(range(max_label + 1), repeat=rs.rank):
        t0 = time.perf_counter()
        oracle = polytope_sum_oracle(rs, labels)
        formula = polytope_sum_demazure(rs, labels)
        diff = formula - oracle.sum
        millis = (time.perf_counter() - t0) * 1000.0
        reports.append(
            VerificationReport(
                formula=name,
                algebra=rs.name,
                lam=labels,
                match=diff.is_zero(),
                diff=diff,
                n_points=oracle.sum.coefficient_sum(),
                millis=millis,
            )
        )
    return reports


def numeric_formula_check(
    rs: RootSystem, lam, sigma_count: int = 20, seed: int = DEFAULT_SEED
) -> dict:
    """Max relative errors, over seeded generic points, of the vertex-cone
    expression against the enumerated polytope sum and of the Weyl character
    value against the Demazure character."""
    lam = _require_dominant(rs, lam)
    lattice_sum = polytope_sum_oracle(rs, lam).sum
    character = character_demazure(rs, lam)
    brion_err = 0.0
    weyl_err = 0.0
    for sig in sample_generic_sigmas(rs, sigma_count, seed):
        ref = evaluate(rs, lattice_sum, sig)
        brion_err = max(brion_err, abs(brion_eval(rs, lam, sig) - ref) / abs(ref))
        ref_ch = evaluate(rs, character, sig)
        weyl_err = max(
            weyl_err, abs(weyl_character_eval(rs, lam, sig) - ref_ch) / abs(ref_ch)
        )
    return {
        "algebra": rs.name,
        "lambda": list(lam),
        "sigma_count": sigma_count,
        "seed": seed,
        "brion_max_rel_err": brion_err,
        "weyl_max_rel_err": weyl_err,
        "tolerance": _CROSS_CHECK_TOL,
        "pass": brion_err < _CROSS_CHECK_TOL and weyl_err < _CROSS_CHECK_TOL,
    }
