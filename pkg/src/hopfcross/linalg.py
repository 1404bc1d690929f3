"""Exact dense linear algebra over QQ or F_p.

Vectors, matrices and order-3 tensors are numpy arrays with ``dtype=object``
whose entries are field elements (see :mod:`hopfcross.fields`); contractions
go through ``np.einsum``, which applies the exact Python arithmetic of the
entries.  Every subspace is represented by its reduced row echelon basis, so
equal subspaces have identical representations and all reports built on top
of them are reproducible byte for byte.

Conventions fixed here and used everywhere else:

* ``solve(m, b)`` solves ``m @ x = b`` (column convention, free variables
  pinned to zero -- the solver is deterministic).
* A linear map ``f`` with domain dimension ``d`` and codomain dimension
  ``c`` is stored as a ``(d, c)`` matrix applied on the right:
  ``f(v) = v @ mat`` (row convention).
* ``kron(v, w)`` indexes the tensor product row-major:
  ``(i, j) -> i * len(w) + j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .fields import Field


def arr(fld: Field, nested) -> np.ndarray:
    """Build an object ndarray from (nested) scalars coerced into ``fld``."""
    a = np.array(nested, dtype=object)
    flat = a.reshape(-1)
    for i, x in enumerate(flat):
        flat[i] = fld.coerce(x)
    return flat.reshape(a.shape)


def zeros(fld: Field, shape) -> np.ndarray:
    a = np.empty(shape, dtype=object)
    a.reshape(-1)[:] = [fld.zero()] * a.size
    return a


def identity(fld: Field, n: int) -> np.ndarray:
    m = zeros(fld, (n, n))
    one = fld.one()
    for i in range(n):
        m[i, i] = one
    return m


def eqarr(a: np.ndarray, b: np.ndarray) -> bool:
    """Exact elementwise equality of two equally-shaped arrays."""
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.reshape(-1), b.reshape(-1)))


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.reshape(-1))


def rref(m: np.ndarray, fld: Field):
    """Reduced row echelon form.

    Args:
        m: matrix, shape (r, c).
        fld: field descriptor of the entries.

    Returns:
        (R, pivots, rank) where R is the RREF matrix (same shape), pivots
        the tuple of pivot column indices in increasing order, and
        rank == len(pivots).  Pivot entries are 1 and are the only nonzero
        entries of their columns.
    """
    r, c = m.shape
    R = m.copy()
    pivots = []
    row = 0
    for col in range(c):
        # find a nonzero entry at or below `row` in this column
        sel = None
        for i in range(row, r):
            if R[i, col] != 0:
                sel = i
                break
        if sel is None:
            continue
        if sel != row:
            R[[row, sel]] = R[[sel, row]]
        piv = R[row, col]
        if piv != fld.one():
            R[row] = [x / piv for x in R[row]]
        for i in range(r):
            if i != row and R[i, col] != 0:
                f = R[i, col]
                R[i] = [x - f * y for x, y in zip(R[i], R[row])]
        pivots.append(col)
        row += 1
        if row == r:
            break
    return R, tuple(pivots), len(pivots)


def rank(m: np.ndarray, fld: Field) -> int:
    return rref(m, fld)[2]


def solve(m: np.ndarray, b: np.ndarray, fld: Field):
    """Solve m @ x = b exactly.

    Returns the unique solution with all free variables set to zero, or
    None when the system is inconsistent.
    """
    r, c = m.shape
    assert b.shape == (r,), f"rhs length {b.shape} does not match {r} rows"
    aug = np.concatenate([m, b.reshape(r, 1)], axis=1)
    R, pivots, _ = rref(aug, fld)
    if c in pivots:
        return None
    x = zeros(fld, (c,))
    for i, p in enumerate(pivots):
        x[p] = R[i, c]
    return x


def kernel_basis(m: np.ndarray, fld: Field) -> np.ndarray:
    """Echelon basis of the right null space {x : m @ x = 0}.

    Returns a (k, c) matrix whose rows form the canonical RREF basis of
    the kernel; k may be zero.
    """
    r, c = m.shape
    R, pivots, _ = rref(m, fld)
    free = [j for j in range(c) if j not in pivots]
    vecs = zeros(fld, (len(free), c))
    one = fld.one()
    for row_i, f in enumerate(free):
        vecs[row_i, f] = one
        for i, p in enumerate(pivots):
            vecs[row_i, p] = -R[i, f]
    return span(vecs, c, fld).rows


@dataclass(frozen=True)
class SubspaceBasis:
    """Canonical (RREF) basis of a subspace of F^ambient_dim.

    Two subspaces are equal iff their ``rows`` matrices are identical.
    """

    fld: Field
    ambient_dim: int
    rows: np.ndarray          # (dim, ambient_dim), RREF, no zero rows
    pivots: tuple = dc_field(default=())

    @property
    def dim(self) -> int:
        return self.rows.shape[0]

    def __eq__(self, other):
        return (isinstance(other, SubspaceBasis)
                and self.ambient_dim == other.ambient_dim
                and eqarr(self.rows, other.rows))

    def contains(self, v: np.ndarray) -> bool:
        return coords_in(self, v) is not None

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim


def span(vectors: np.ndarray, ambient_dim: int, fld: Field) -> SubspaceBasis:
    """Canonical echelon basis of the span of the given row vectors.

    The result is independent of the order and scaling of the inputs.
    """
    if len(vectors) == 0:
        return SubspaceBasis(fld, ambient_dim, zeros(fld, (0, ambient_dim)), ())
    vectors = np.asarray(vectors, dtype=object)
    assert vectors.shape[1] == ambient_dim
    R, pivots, rk = rref(vectors.copy(), fld)
    return SubspaceBasis(fld, ambient_dim, R[:rk].copy(), pivots)


def coords_in(sub: SubspaceBasis, v: np.ndarray):
    """Coordinates of v in the echelon basis, or None if v is not a member.

    Membership is decidable directly: a member's coordinates are its
    entries at the pivot columns, so one back-substitution check suffices.
    """
    assert v.shape == (sub.ambient_dim,)
    x = np.array([v[p] for p in sub.pivots], dtype=object)
    recon = np.einsum("i,ij->j", x, sub.rows) if sub.dim else zeros(sub.fld, (sub.ambient_dim,))
    if eqarr(recon, v):
        return x if sub.dim else zeros(sub.fld, (0,))
    return None


@dataclass(frozen=True)
class QuotientSpace:
    """F^ambient_dim modulo the span of the relation vectors.

    ``projection`` (ambient_dim x dim) and ``section`` (dim x ambient_dim)
    are row-convention maps with projection . section = identity; the
    projection kills exactly the relations.  The section picks the
    complement spanned by the standard basis vectors at the non-pivot
    columns of the relation echelon form.
    """

    fld: Field
    ambient_dim: int
    relations: SubspaceBasis
    projection: np.ndarray
    section: np.ndarray

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.relations.dim

    def project(self, v: np.ndarray) -> np.ndarray:
        return v @ self.projection

    def lift(self, q: np.ndarray) -> np.ndarray:
        return q @ self.section


def quotient(ambient_dim: int, relations: np.ndarray, fld: Field) -> QuotientSpace:
    """Build the quotient of F^ambient_dim by the span of ``relations``."""
    rel = span(relations, ambient_dim, fld) if len(relations) else \
        SubspaceBasis(fld, ambient_dim, zeros(fld, (0, ambient_dim)), ())
    pivots = set(rel.pivots)
    free = [j for j in range(ambient_dim) if j not in pivots]
    q = len(free)
    proj = zeros(fld, (ambient_dim, q))
    sect = zeros(fld, (q, ambient_dim))
    one = fld.one()
    for c, f in enumerate(free):
        proj[f, c] = one
        sect[c, f] = one
    for i, p in enumerate(rel.pivots):
        for c, f in enumerate(free):
            proj[p, c] = -rel.rows[i, f]
    return QuotientSpace(fld, ambient_dim, rel, proj, sect)


def kron(v: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Tensor product of coordinate vectors, index (i, j) -> i*len(w)+j."""
    return np.kron(v, w)
