"""Constructive decomposition of integer cone points into few terms.

Every integer point of a simplicial cone is written as a nonnegative integer
combination of generators and parallelepiped points, with the number of
distinct terms controlled by the cone's dimension and coset structure.  The
recursion branches, in order, on

  * dimension at most 3 (bounded exact search over the Hilbert basis),
  * multiplicity 1 (the generators form a lattice basis),
  * a generator with integral dual (strip it and recurse on the facet),
  * two generators with equal dual cosets (project along one, recurse on the
    projected cone, lift the terms back),
  * dimension 4, multiplicity 5, four distinct non-trivial cosets (solve in
    the 18-subcone unimodular cover),
  * otherwise a bounded exact search with at most 2k-2 terms.

Each run records a trace of the choices taken, which can be replayed to
reproduce the decomposition deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import floor

from . import cones, cosets, cover, exact, search
from .cones import SimplicialCone
from .errors import CertificateError, MembershipError, PreconditionError


# ---------------------------------------------------------------------------
# traces and results


@dataclass(frozen=True)
class StripStep:
    """A generator with integral dual was subtracted `coeff` times."""

    index: int
    coeff: int


@dataclass(frozen=True)
class ProjectStep:
    """Projected along generator `axis`, whose dual equals that of `partner`.

    `sigma` counts the primitive steps along the axis left over after lifting
    the projected decomposition.
    """

    axis: int
    partner: int
    sigma: int


@dataclass(frozen=True)
class BaseStep:
    dim: int
    method: str  # "unimodular" or "search"


@dataclass(frozen=True)
class CoverStep:
    subcone_index: int


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple


@dataclass(frozen=True)
class Decomposition:
    target: tuple
    terms: tuple  # ((coeff, vector), ...) with coeff >= 1, vectors distinct
    all_hilbert: bool  # every term vector belongs to the Hilbert basis
    trace: ReductionTrace

    def term_count(self) -> int:
        return len(self.terms)

    def vector_sum(self) -> tuple:
        total = tuple(0 for _ in self.target)
        for c, v in self.terms:
            total = exact.vadd(total, exact.vscale(c, v))
        return total


# ---------------------------------------------------------------------------
# public entry points


def decompose(cone: SimplicialCone, z, node_budget=None) -> Decomposition:
    """Decompose the integer point z of the cone; raises on non-membership."""
    target = tuple(int(x) for x in z)
    steps = []
    terms = _reduce(cone, target, steps, node_budget)
    merged = _merge(terms)
    _validate(cone, target, merged)
    hb = set(cones.hilbert_basis(cone).elements)
    return Decomposition(
        target=target,
        terms=merged,
        all_hilbert=all(v in hb for _, v in merged),
        trace=ReductionTrace(tuple(steps)),
    )


def base_case_solve(cone: SimplicialCone, z, node_budget=None) -> Decomposition:
    """Minimal Hilbert-basis decomposition for cones of dimension at most 3."""
    if cone.dim > 3:
        raise PreconditionError("base case solver requires dimension at most 3")
    return decompose(cone, z, node_budget=node_budget)


def replay(cone: SimplicialCone, z, trace: ReductionTrace, node_budget=None):
    """Re-run the decomposition and check it makes the recorded choices."""
    dec = decompose(cone, z, node_budget=node_budget)
    if dec.trace != trace:
        raise CertificateError(
            "recomputed decomposition deviates from the recorded trace"
        )
    return dec


def reduce_to_hilbert(cone: SimplicialCone, dec: Decomposition, node_budget=None):
    """Rewrite every non-Hilbert term as a minimal Hilbert-basis combination."""
    hb = cones.hilbert_basis(cone)
    hb_set = set(hb.elements)
    new_terms = []
    for c, v in dec.terms:
        if v in hb_set:
            new_terms.append((c, v))
            continue
        for cc, vv in _search_terms(cone, v, len(hb), node_budget):
            new_terms.append((c * cc, vv))
    merged = _merge(new_terms)
    _validate(cone, dec.target, merged)
    return Decomposition(
        target=dec.target, terms=merged, all_hilbert=True, trace=dec.trace
    )


@dataclass(frozen=True)
class IcrBound:
    value: int
    method: str


def icr_upper_bound(cone: SimplicialCone) -> IcrBound:
    """Best applicable upper bound on the integer Caratheodory rank."""
    k = cone.dim
    delta = cones.multiplicity(cone)
    options = []
    if k <= 3:
        options.append((k, "dim-le-3"))
    if delta <= 5:
        options.append((k, "small-multiplicity"))
    profile = cosets.coset_profile(cone)
    if profile.nontrivial_class_count <= 3:
        options.append((k, "few-cosets"))
    if 6 <= delta <= k:
        options.append((k + delta - 3, "pigeonhole"))
    if k >= 2:
        options.append((2 * k - 2, "general"))
    value, method = min(options, key=lambda t: t[0])
    return IcrBound(value=value, method=method)


# ---------------------------------------------------------------------------
# recursion


def _reduce(cone, z, steps, node_budget):
    lam = cones.coefficients(cone, z)
    if any(x < 0 for x in lam):
        raise MembershipError("vector lies outside the cone")
    if not any(lam):
        return []
    k = cone.dim
    if k <= 3:
        steps.append(BaseStep(dim=k, method="search"))
        return _search_terms(cone, z, k, node_budget)
    if cones.multiplicity(cone) == 1:
        steps.append(BaseStep(dim=k, method="unimodular"))
        coeffs = exact.as_int_vector(lam)
        return [(c, g) for c, g in zip(coeffs, cone.generators) if c != 0]
    profile = cosets.coset_profile(cone)
    for i, integral in enumerate(profile.integral_flags):
        if integral:
            return _strip_reduce(cone, z, lam, i, steps, node_budget)
    pair = _select_pair(profile, lam)
    if pair is not None:
        return _project_reduce(cone, z, pair, steps, node_budget)
    if k == 4 and cones.multiplicity(cone) == 5:
        terms, idx = cover.decompose_in_cover(cone, z)
        steps.append(CoverStep(subcone_index=idx))
        return list(terms)
    steps.append(BaseStep(dim=k, method="search"))
    return _search_terms(cone, z, 2 * k - 2, node_budget)


def _strip_reduce(cone, z, lam, i, steps, node_budget):
    # lambda_i is the pairing with an integral dual vector, hence an integer.
    if not exact.is_integral(lam[i]):
        raise CertificateError("integral dual gave a fractional coefficient")
    mu = int(lam[i])
    steps.append(StripStep(index=i, coeff=mu))
    rest = exact.vsub(z, exact.vscale(mu, cone.generators[i]))
    terms = _reduce(cone.facet(i), rest, steps, node_budget)
    if mu >= 1:
        terms = terms + [(mu, cone.generators[i])]
    return terms


def _select_pair(profile, lam):
    """Lexicographically smallest pair (i, j), oriented so lambda_i >= lambda_j."""
    oriented = []
    for a, b in profile.equal_pairs:
        oriented.append((a, b) if lam[a] >= lam[b] else (b, a))
    return min(oriented) if oriented else None


@dataclass(frozen=True)
class _ProjectionData:
    subcone: SimplicialCone  # projected cone in projected-lattice coordinates
    projection: exact.LatticeProjection
    transform: exact.Reintegerization  # projected lattice <-> Z^(k-1)
    preimages: exact.Matrix  # lattice preimages of the coordinate basis
    primitive: tuple  # primitive lattice vector along the projection axis
    kept: tuple  # kept[m] = original generator index of subcone generator m


@lru_cache(maxsize=None)
def _projection_data(cone: SimplicialCone, axis: int) -> _ProjectionData:
    sat = cones.saturation_basis(cone)
    lp = exact.project_lattice_full(sat, cone.generators[axis])
    kept = tuple(l for l in range(cone.dim) if l != axis)
    transform = exact.Reintegerization(exact.freeze(lp.basis.matrix))
    gen_cols = []
    for l in kept:
        projected = lp.project(cone.generators[l])
        gen_cols.append(transform.to_coords(projected))
    return _ProjectionData(
        subcone=SimplicialCone(tuple(gen_cols)),
        projection=lp,
        transform=transform,
        preimages=lp.preimages,
        primitive=lp.primitive,
        kept=kept,
    )


def _project_reduce(cone, z, pair, steps, node_budget):
    i, j = pair
    pos = len(steps)
    steps.append(None)  # ProjectStep filled in once sigma is known
    data = _projection_data(cone, i)
    z_proj = data.transform.to_coords(data.projection.project(z))
    sub = _reduce(data.subcone, z_proj, steps, node_budget)
    lifted = []
    for c, v in sub:
        lifted.append((c, _lift(cone, data, i, v)))
    residual = z
    for c, v in lifted:
        residual = exact.vsub(residual, exact.vscale(c, v))
    sigma = _axis_multiple(data.primitive, residual)
    if sigma < 0:
        raise CertificateError("projection left a negative residual coefficient")
    steps[pos] = ProjectStep(axis=i, partner=j, sigma=sigma)
    if sigma >= 1:
        lifted.append((sigma, data.primitive))
    return lifted


def _lift(cone, data, axis, v):
    """Lift a term of the projected decomposition back into the cone.

    Projected generators lift to the matching original generators; projected
    parallelepiped points lift to the unique preimage whose coefficient on
    the projection axis lands in [0, 1), which is a parallelepiped point of
    the original cone.
    """
    lam = cones.coefficients(data.subcone, v)
    unit = _unit_index(lam)
    if unit is not None:
        return cone.generators[data.kept[unit]]
    if not all(0 <= x < 1 for x in lam):
        raise CertificateError(
            "projected term is neither a generator nor a parallelepiped point"
        )
    x = exact.matvec(data.preimages, v)
    lam_x = cones.coefficients(cone, x)
    shift = floor(lam_x[axis])
    y = exact.vsub(x, exact.vscale(shift, cone.generators[axis]))
    return exact.as_int_vector(y)


def _unit_index(lam):
    unit = None
    for idx, x in enumerate(lam):
        if x == 0:
            continue
        if x == 1 and unit is None:
            unit = idx
        else:
            return None
    return unit


def _axis_multiple(primitive, residual):
    """The integer t with residual = t * primitive; certificate on failure."""
    pivot = next((idx for idx, x in enumerate(primitive) if x != 0), None)
    if pivot is None:
        raise CertificateError("projection axis is the zero vector")
    if all(x == 0 for x in residual):
        return 0
    if residual[pivot] % primitive[pivot] != 0:
        raise CertificateError("residual is a fractional multiple of the axis")
    t = residual[pivot] // primitive[pivot]
    if exact.vscale(t, primitive) != tuple(residual):
        raise CertificateError("residual is not parallel to the projection axis")
    return t


# ---------------------------------------------------------------------------
# shared helpers


def _search_terms(cone, z, max_terms, node_budget):
    hb = cones.hilbert_basis(cone)
    mult = cones.multiplicity(cone)
    columns = tuple(
        tuple(int(mult * x) for x in lam) for lam in hb.lams
    )
    target = cones.scaled_coefficients(cone, z)
    found, _ = search.find_combination(columns, target, max_terms, node_budget)
    if found is None:
        raise CertificateError(
            f"no combination of at most {max_terms} Hilbert basis elements exists"
        )
    return [(c, hb.elements[idx]) for c, idx in found]


def _merge(terms):
    by_vector = {}
    for c, v in terms:
        v = tuple(v)
        by_vector[v] = by_vector.get(v, 0) + c
    return tuple(sorted(((c, v) for v, c in by_vector.items() if c != 0),
                        key=lambda t: t[1]))


def _validate(cone, target, terms):
    total = tuple(0 for _ in target)
    for c, v in terms:
        if c < 1:
            raise CertificateError("decomposition has a non-positive coefficient")
        if not cones.contains(cone, v):
            raise CertificateError("decomposition term lies outside the cone")
        total = exact.vadd(total, exact.vscale(c, v))
    if total != target:
        raise CertificateError("decomposition terms do not sum to the target")
