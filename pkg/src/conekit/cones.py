"""Simplicial cones over the integer lattice.

A cone is given by linearly independent integer generator columns.  The
module computes multiplicities, enumerates the integer points of the
half-open generator parallelepiped together with their exact rational
coefficients, derives Hilbert bases, and answers membership queries.

Per-cone derived data (saturation basis, coordinate matrix, inverses) is
cached on the frozen cone value, so repeated queries against the same cone
are cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, gcd
from typing import Sequence

from . import exact
from .errors import MembershipError, PreconditionError
from .exact import Fraction as _F  # noqa: F401  (re-export convenience)


@dataclass(frozen=True)
class SimplicialCone:
    """Cone spanned by the integer columns r^1, ..., r^k inside R^n."""

    generators: tuple  # k columns, each an integer n-tuple

    def __post_init__(self):
        if not self.generators:
            raise PreconditionError("cone needs at least one generator")
        n = len(self.generators[0])
        if any(len(g) != n for g in self.generators):
            raise PreconditionError("generator dimensions disagree")
        object.__setattr__(
            self, "generators", tuple(tuple(int(x) for x in g) for g in self.generators)
        )
        gram = exact.matmul(exact.transpose(self.matrix), self.matrix)
        if exact.rat_det(gram) == 0:
            raise PreconditionError("generators are linearly dependent")

    @property
    def matrix(self) -> exact.Matrix:
        """Generator matrix, n x k, columns are the generators."""
        return exact.from_columns(self.generators)

    @property
    def ambient_dim(self) -> int:
        return len(self.generators[0])

    @property
    def dim(self) -> int:
        return len(self.generators)

    def facet(self, drop: int) -> "SimplicialCone":
        """Cone spanned by all generators except the one at index `drop`."""
        return SimplicialCone(
            tuple(g for i, g in enumerate(self.generators) if i != drop)
        )


@dataclass(frozen=True)
class ParPoint:
    """Integer point of the half-open parallelepiped with its coefficients."""

    vector: tuple
    lam: tuple  # Fractions in [0, 1), one per generator


@dataclass(frozen=True)
class ParallelepipedSet:
    points: tuple  # ParPoint, sorted lexicographically by lam

    def __len__(self):
        return len(self.points)

    def vectors(self) -> tuple:
        return tuple(p.vector for p in self.points)

    def nonzero(self) -> tuple:
        return tuple(p for p in self.points if any(p.lam))


@dataclass(frozen=True)
class HilbertBasis:
    elements: tuple  # integer vectors
    lams: tuple  # matching coefficient vectors (Fractions)

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class _ConeContext:
    """Cached exact data derived from a cone."""

    sat: exact.LatticeBasis  # basis W of lin R intersected with Z^n
    coord: exact.Matrix  # C with W C = R, k x k integer
    det_coord: int
    mult: int
    coord_inv: exact.Matrix  # rational C^{-1}
    coord_adj: exact.Matrix  # integer, equals mult * C^{-1}
    row_idx: tuple  # rows making W invertible
    w_rows_inv: exact.Matrix  # rational inverse of the selected row block


def _independent_rows(m: exact.Matrix, k: int) -> tuple:
    rows = []
    idx = []
    for i, row in enumerate(m):
        cand = rows + [row]
        gram = exact.matmul(exact.freeze(cand), exact.transpose(exact.freeze(cand)))
        if exact.rat_det(gram) != 0:
            rows.append(row)
            idx.append(i)
            if len(rows) == k:
                return tuple(idx)
    raise PreconditionError("matrix does not have full column rank")


@lru_cache(maxsize=None)
def _context(cone: SimplicialCone) -> _ConeContext:
    r = cone.matrix
    k = cone.dim
    w = exact.sublattice_basis(r)
    coord_cols = [exact.as_int_vector(exact.solve(w.matrix, g)) for g in cone.generators]
    coord = exact.from_columns(coord_cols)
    det_coord = exact.det(coord)
    mult = abs(det_coord)
    coord_inv = exact.rat_inverse(coord)
    coord_adj = exact.freeze(
        exact.as_int_vector(tuple(x * mult for x in row)) for row in coord_inv
    )
    row_idx = _independent_rows(w.matrix, k)
    block = exact.freeze(w.matrix[i] for i in row_idx)
    w_rows_inv = exact.rat_inverse(block)
    return _ConeContext(
        sat=w,
        coord=coord,
        det_coord=det_coord,
        mult=mult,
        coord_inv=coord_inv,
        coord_adj=coord_adj,
        row_idx=row_idx,
        w_rows_inv=w_rows_inv,
    )


def saturation_basis(cone: SimplicialCone) -> exact.LatticeBasis:
    """Integer basis of lin(generators) intersected with Z^n."""
    return _context(cone).sat


def multiplicity(cone: SimplicialCone) -> int:
    """Number of integer points in the half-open generator parallelepiped."""
    return _context(cone).mult


def lattice_coords(cone: SimplicialCone, z: Sequence) -> tuple:
    """Coordinates of z in the saturation basis; raises if z is outside lin R."""
    ctx = _context(cone)
    zv = tuple(z)
    cz = exact.matvec(ctx.w_rows_inv, tuple(zv[i] for i in ctx.row_idx))
    if exact.matvec(ctx.sat.matrix, cz) != tuple(Fraction(x) for x in zv):
        raise MembershipError("vector lies outside the linear span of the cone")
    return cz


def coefficients(cone: SimplicialCone, z: Sequence) -> tuple:
    """The unique lambda with R lambda = z, exact rationals."""
    ctx = _context(cone)
    cz = lattice_coords(cone, z)
    return exact.matvec(ctx.coord_inv, cz)


def scaled_coefficients(cone: SimplicialCone, z: Sequence) -> tuple:
    """Integer vector mult * lambda(z) for an integer z in lin R cap Z^n.

    Faster than `coefficients` in search loops: all arithmetic stays in ints.
    """
    ctx = _context(cone)
    cz = exact.as_int_vector(lattice_coords(cone, z))
    return exact.matvec(ctx.coord_adj, cz)


def contains(cone: SimplicialCone, z: Sequence) -> bool:
    try:
        lam = coefficients(cone, z)
    except MembershipError:
        return False
    return all(x >= 0 for x in lam)


def contains_interior(cone: SimplicialCone, z: Sequence) -> bool:
    try:
        lam = coefficients(cone, z)
    except MembershipError:
        return False
    return all(x > 0 for x in lam)


@lru_cache(maxsize=None)
def enumerate_parallelepiped(cone: SimplicialCone) -> ParallelepipedSet:
    """All integer points of par(R), each with exact coefficients in [0, 1)^k.

    Coset representatives of (lin R cap Z^n) / R Z^k are read off the Smith
    normal form of the coordinate matrix and reduced coefficient-wise mod 1.
    """
    ctx = _context(cone)
    res = exact.snf(ctx.coord)
    k = cone.dim
    divisors = [res.s[i][i] for i in range(k)]
    u_inv = exact.int_inverse(res.u)
    points = []
    for y in itertools.product(*(range(d) for d in divisors)):
        x = exact.matvec(u_inv, y)
        lam = exact.matvec(ctx.coord_inv, x)
        floors = tuple(floor(v) for v in lam)
        lam_frac = tuple(v - f for v, f in zip(lam, floors))
        mu = exact.vsub(x, exact.matvec(ctx.coord, floors))
        vec = exact.as_int_vector(exact.matvec(ctx.sat.matrix, mu))
        points.append(ParPoint(vec, lam_frac))
    points.sort(key=lambda p: p.lam)
    assert len(points) == ctx.mult
    return ParallelepipedSet(tuple(points))


def primitive(v: Sequence) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v)


@lru_cache(maxsize=None)
def hilbert_basis(cone: SimplicialCone) -> HilbertBasis:
    """Unique minimal integer generating set of cone cap Z^n.

    Candidates are the nonzero parallelepiped points plus the primitive
    vector on every extreme ray; an element is dropped iff subtracting some
    other candidate leaves a nonzero integer cone point, which by coefficient
    monotonicity is a complete irreducibility test.
    """
    par = enumerate_parallelepiped(cone)
    candidates = {}
    for p in par.nonzero():
        candidates[p.vector] = p.lam
    for i, g in enumerate(cone.generators):
        d = 0
        for x in g:
            d = gcd(d, x)
        prim = tuple(x // d for x in g)
        lam = tuple(
            Fraction(1, d) if j == i else Fraction(0) for j in range(cone.dim)
        )
        candidates.setdefault(prim, lam)
    kept = []
    items = sorted(candidates.items(), key=lambda kv: kv[1])
    for vec, lam in items:
        reducible = False
        for other_vec, other_lam in items:
            if other_vec == vec:
                continue
            if all(a <= b for a, b in zip(other_lam, lam)):
                reducible = True
                break
        if not reducible:
            kept.append((vec, lam))
    return HilbertBasis(
        elements=tuple(v for v, _ in kept), lams=tuple(l for _, l in kept)
    )
