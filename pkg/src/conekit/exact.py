"""Exact integer and rational linear algebra.

Matrices are stored row-major as tuples of tuples; entries are Python ints or
`fractions.Fraction`, never floats.  All routines are pure functions on these
immutable values, so results can be cached and shared freely.

Provided here: fraction-free determinants, Smith and Hermite normal forms with
their unimodular transforms, dual bases, saturation of column lattices,
orthogonal lattice projection, and the change of basis that maps a projected
lattice back onto the standard integer lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import MembershipError, PreconditionError

Vector = tuple
Matrix = tuple


# ---------------------------------------------------------------------------
# basic helpers


def freeze(rows) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def matvec(a: Matrix, v: Sequence) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def vadd(u: Sequence, v: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(u, v))


def vscale(c, v: Sequence) -> Vector:
    return tuple(c * x for x in v)


def columns(a: Matrix) -> tuple:
    return tuple(zip(*a))


def from_columns(cols) -> Matrix:
    return tuple(zip(*cols))


def is_integral(x) -> bool:
    return isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)


def as_int_vector(v: Sequence) -> Vector:
    if not all(is_integral(x) for x in v):
        raise MembershipError(f"vector {v} is not integral")
    return tuple(int(x) for x in v)


# ---------------------------------------------------------------------------
# determinants and rational elimination


def det(a: Matrix) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise PreconditionError("det: matrix is not square")
    m = [[int(x) for x in row] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n > 0 else 1


def rat_det(a: Matrix) -> Fraction:
    """Determinant of a square rational matrix via Gaussian elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    result = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            result = -result
        result *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            if m[i][k] != 0:
                factor = m[i][k] * inv
                for j in range(k, n):
                    m[i][j] -= factor * m[k][j]
    return result


def rat_inverse(a: Matrix) -> Matrix:
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot_row is None:
            raise PreconditionError("rat_inverse: matrix is singular")
        m[k], m[pivot_row] = m[pivot_row], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                factor = m[i][k]
                m[i] = [x - factor * y for x, y in zip(m[i], m[k])]
    return freeze(row[n:] for row in m)


def solve(a: Matrix, b: Sequence) -> Vector:
    """Solve a x = b exactly for a with full column rank.

    `a` may be rectangular (m rows, k <= m columns).  Raises MembershipError
    when the system is inconsistent (b outside the column span) and
    PreconditionError when the columns are dependent.
    """
    m_rows = len(a)
    k = len(a[0]) if m_rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(bv)] for row, bv in zip(a, b)]
    pivots = []
    r = 0
    for j in range(k):
        pivot_row = next((i for i in range(r, m_rows) if aug[i][j] != 0), None)
        if pivot_row is None:
            raise PreconditionError("solve: columns are linearly dependent")
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        inv = 1 / aug[r][j]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m_rows):
            if i != r and aug[i][j] != 0:
                factor = aug[i][j]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[r])]
        pivots.append(j)
        r += 1
    for i in range(r, m_rows):
        if aug[i][k] != 0:
            raise MembershipError("solve: inconsistent system")
    return tuple(aug[i][k] for i in range(k))


# ---------------------------------------------------------------------------
# integer row/column operations shared by SNF and HNF


def _egcd(a: int, b: int):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _gcd_transform(a: int, b: int):
    """2x2 unimodular (s, t, u, v) with s*a + t*b = gcd >= 0, u*a + v*b = 0."""
    if a != 0 and b % a == 0:
        # Keep the pivot in place when it already divides; the generic
        # extended-gcd combination would swap entries and make the
        # alternating row/column passes cycle.
        sign = 1 if a > 0 else -1
        return sign, 0, -(b // a), 1
    g, s, t = _egcd(a, b)
    if g == 0:
        return 1, 0, 0, 1
    return s, t, -b // g, a // g


def _row_combine(m, i1, i2, s, t, u, v):
    for j in range(len(m[i1])):
        x, y = m[i1][j], m[i2][j]
        m[i1][j] = s * x + t * y
        m[i2][j] = u * x + v * y


def _col_combine(m, j1, j2, s, t, u, v):
    for row in m:
        x, y = row[j1], row[j2]
        row[j1] = s * x + t * y
        row[j2] = u * x + v * y


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form S = U A V with U, V unimodular."""

    s: Matrix
    u: Matrix
    v: Matrix

    @property
    def divisors(self) -> tuple:
        """Nonzero elementary divisors, in divisibility-chain order."""
        return tuple(
            self.s[i][i]
            for i in range(min(len(self.s), len(self.s[0]) if self.s else 0))
            if self.s[i][i] != 0
        )


def snf(a: Matrix) -> SnfResult:
    """Smith normal form with both unimodular transforms, U A V = S."""
    m_rows = len(a)
    n_cols = len(a[0]) if m_rows else 0
    m = [[int(x) for x in row] for row in a]
    u = [list(row) for row in identity(m_rows)]
    v = [list(row) for row in identity(n_cols)]
    t = 0
    while t < min(m_rows, n_cols):
        pivot = None
        for i in range(t, m_rows):
            for j in range(t, n_cols):
                if m[i][j] != 0 and (
                    pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])
                ):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            m[t], m[pivot[0]] = m[pivot[0]], m[t]
            u[t], u[pivot[0]] = u[pivot[0]], u[t]
        if pivot[1] != t:
            for row in m:
                row[t], row[pivot[1]] = row[pivot[1]], row[t]
            for row in v:
                row[t], row[pivot[1]] = row[pivot[1]], row[t]
        while True:
            for i in range(t + 1, m_rows):
                if m[i][t] != 0:
                    ops = _gcd_transform(m[t][t], m[i][t])
                    _row_combine(m, t, i, *ops)
                    _row_combine(u, t, i, *ops)
            row_dirty = False
            for j in range(t + 1, n_cols):
                if m[t][j] != 0:
                    ops = _gcd_transform(m[t][t], m[t][j])
                    _col_combine(m, t, j, *ops)
                    _col_combine(v, t, j, *ops)
                    row_dirty = True
            if not row_dirty and all(m[i][t] == 0 for i in range(t + 1, m_rows)):
                break
        d = m[t][t]
        offender = next(
            (
                i
                for i in range(t + 1, m_rows)
                for j in range(t + 1, n_cols)
                if m[i][j] % d != 0
            ),
            None,
        )
        if offender is not None:
            # Pull the non-divisible row up so the next gcd pass shrinks the pivot.
            for j in range(n_cols):
                m[t][j] += m[offender][j]
            for j in range(m_rows):
                u[t][j] += u[offender][j]
            continue
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return SnfResult(freeze(m), freeze(u), freeze(v))


def hnf(a: Matrix):
    """Hermite normal form H = U A.

    H is in row-echelon shape: pivots positive, entries above each pivot
    reduced into [0, pivot).  This is the canonical representative of the
    orbit of `a` under left multiplication by unimodular matrices.
    """
    m_rows = len(a)
    n_cols = len(a[0]) if m_rows else 0
    h = [[int(x) for x in row] for row in a]
    u = [list(row) for row in identity(m_rows)]
    r = 0
    for j in range(n_cols):
        if r >= m_rows:
            break
        for i in range(r + 1, m_rows):
            if h[i][j] != 0:
                ops = _gcd_transform(h[r][j], h[i][j])
                _row_combine(h, r, i, *ops)
                _row_combine(u, r, i, *ops)
        if h[r][j] == 0:
            continue
        if h[r][j] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][j] // h[r][j]
            if q != 0:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return freeze(h), freeze(u)


def int_inverse(a: Matrix) -> Matrix:
    """Inverse of a unimodular integer matrix, returned with int entries."""
    inv = rat_inverse(a)
    return freeze(as_int_vector(row) for row in inv)


# ---------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class LatticeBasis:
    """Columns of `matrix` span a lattice inside R^ambient_dim."""

    matrix: Matrix
    ambient_dim: int

    @property
    def rank(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    def basis_columns(self) -> tuple:
        return columns(self.matrix)

    def gram_det(self) -> Fraction:
        g = matmul(transpose(self.matrix), self.matrix)
        return rat_det(g)


def dual_basis(r: Matrix) -> Matrix:
    """Dual vectors of the columns of r (full column rank required).

    Returns the n x k rational matrix whose columns pair with the columns of
    r via the Kronecker delta and lie in the column span of r.  For square r
    this is the inverse transpose; otherwise r (r^T r)^{-1}.
    """
    n = len(r)
    k = len(r[0]) if n else 0
    if k == n:
        if rat_det(r) == 0:
            raise PreconditionError("dual_basis: matrix is singular")
        return transpose(rat_inverse(r))
    gram = matmul(transpose(r), r)
    if rat_det(gram) == 0:
        raise PreconditionError("dual_basis: columns are linearly dependent")
    return matmul(r, rat_inverse(gram))


def sublattice_basis(r: Matrix) -> LatticeBasis:
    """Integer basis of lin(r) intersected with Z^n (saturation of the columns)."""
    n = len(r)
    k = len(r[0]) if n else 0
    result = snf(r)
    rank = len(result.divisors)
    if rank != k:
        raise PreconditionError("sublattice_basis: columns are linearly dependent")
    if k == n:
        return LatticeBasis(identity(n), n)
    u_inv = int_inverse(result.u)
    basis = freeze(tuple(row[j] for j in range(k)) for row in u_inv)
    return LatticeBasis(basis, n)


@dataclass(frozen=True)
class LatticeProjection:
    """Projection of a lattice onto the orthogonal complement of a vector.

    `basis` spans the projected lattice; `preimages` holds, column for
    column, lattice vectors that project onto the basis vectors; `primitive`
    is the primitive lattice vector parallel to the projection direction.
    """

    basis: LatticeBasis
    preimages: Matrix
    primitive: Vector
    direction: Vector

    def project(self, v: Sequence) -> Vector:
        r = self.direction
        factor = Fraction(dot(v, r), dot(r, r))
        return tuple(Fraction(x) - factor * y for x, y in zip(v, r))


def project_lattice_full(lat: LatticeBasis, r: Sequence) -> LatticeProjection:
    """Project the lattice onto r^perp, keeping preimage bookkeeping."""
    r = tuple(r)
    if all(x == 0 for x in r):
        raise MembershipError("project_lattice: direction is zero")
    coeffs = solve(lat.matrix, r)
    c = as_int_vector(coeffs)  # raises when r is not a lattice vector
    g = 0
    for x in c:
        g = gcd(g, x)
    c_prim = tuple(x // g for x in c)
    # Extend the primitive coordinate vector to a basis of Z^k: with
    # U c_prim = e1 we take the columns of U^{-1}, whose first column is c_prim.
    _, u = hnf(tuple((x,) for x in c_prim))
    w = int_inverse(u)
    k = len(c_prim)
    ambient_cols = []
    for j in range(1, k):
        col = tuple(w[i][j] for i in range(k))
        ambient_cols.append(matvec(lat.matrix, col))
    primitive = matvec(lat.matrix, c_prim)
    rr = dot(r, r)
    projected_cols = []
    for v in ambient_cols:
        factor = Fraction(dot(v, r), rr)
        projected_cols.append(tuple(Fraction(x) - factor * y for x, y in zip(v, r)))
    basis = LatticeBasis(from_columns(projected_cols) if projected_cols else
                         tuple(() for _ in range(lat.ambient_dim)),
                         lat.ambient_dim)
    return LatticeProjection(
        basis=basis,
        preimages=from_columns(ambient_cols) if ambient_cols else
        tuple(() for _ in range(lat.ambient_dim)),
        primitive=primitive,
        direction=r,
    )


def project_lattice(lat: LatticeBasis, r: Sequence) -> LatticeBasis:
    """Basis of the lattice projected onto the orthogonal complement of r."""
    return project_lattice_full(lat, r).basis


@dataclass(frozen=True)
class Reintegerization:
    """Invertible change of coordinates between a lattice and Z^k.

    Forward: ambient vector -> integer coordinates in the lattice basis.
    Backward: coordinates -> ambient vector.  Round trips are exact.
    """

    basis: Matrix

    def to_coords(self, v: Sequence) -> Vector:
        return as_int_vector(solve(self.basis, v))

    def from_coords(self, c: Sequence) -> Vector:
        return matvec(self.basis, c)


def integerize(vectors: Matrix, basis: Matrix):
    """Coordinates of the given columns in the lattice basis.

    Every column of `vectors` must be an integer combination of the basis
    columns; non-integral coordinates raise MembershipError.  Returns the
    integer coordinate matrix together with the transform object.
    """
    transform = Reintegerization(freeze(basis))
    coord_cols = [transform.to_coords(col) for col in columns(vectors)]
    n_rows = len(basis[0]) if basis else 0
    coords = from_columns(coord_cols) if coord_cols else tuple(
        () for _ in range(n_rows)
    )
    return coords, transform
