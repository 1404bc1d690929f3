"""Finite-dimensional algebras, coalgebras and Hopf algebras by structure
constants, plus the convolution machinery built on them.

Conventions:

* ``mult[i, j, k]`` is the coefficient of basis vector ``e_k`` in
  ``e_i * e_j``; ``unit`` is the coordinate vector of 1.
* ``comult[i, j, k]`` is the coefficient of ``e_j (x) e_k`` in the
  coproduct of ``e_i``; ``counit`` is a plain vector of scalars.
* The antipode and every other linear map are row-convention matrices:
  the image of ``e_i`` is row ``i``.

Nothing here assumes the axioms hold: the ``verify_*`` functions check
them instance by instance and report every failing basis tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from .checks import CheckReport, ReportBuilder
from .errors import NonGroupTable
from .fields import Field
from .linalg import SubspaceBasis, arr, eqarr, identity, kernel_basis, kron, solve, span, zeros


@dataclass(frozen=True)
class AlgebraData:
    fld: Field
    dim: int
    mult: np.ndarray          # (dim, dim, dim)
    unit: np.ndarray          # (dim,)
    labels: tuple = None

    def __post_init__(self):
        assert self.mult.shape == (self.dim,) * 3
        assert self.unit.shape == (self.dim,)

    def mul(self, x, y):
        return np.einsum("i,j,ijk->k", x, y, self.mult)

    def mul_many(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = self.mul(out, x)
        return out


@dataclass(frozen=True)
class CoalgebraData:
    fld: Field
    dim: int
    comult: np.ndarray        # (dim, dim, dim)
    counit: np.ndarray        # (dim,)
    labels: tuple = None

    def __post_init__(self):
        assert self.comult.shape == (self.dim,) * 3
        assert self.counit.shape == (self.dim,)


@dataclass(frozen=True)
class HopfAlgebraData:
    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: np.ndarray      # (dim, dim), row convention

    def __post_init__(self):
        assert self.algebra.dim == self.coalgebra.dim
        assert self.antipode.shape == (self.dim,) * 2

    @property
    def fld(self):
        return self.algebra.fld

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def comult(self):
        return self.coalgebra.comult

    @property
    def counit(self):
        return self.coalgebra.counit


@dataclass(frozen=True)
class LinMapHom:
    """A linear map between based spaces, applied as ``v @ matrix``."""

    domain_dim: int
    codomain_dim: int
    matrix: np.ndarray

    def __post_init__(self):
        assert self.matrix.shape == (self.domain_dim, self.codomain_dim)

    def __call__(self, v):
        return v @ self.matrix


# ---------------------------------------------------------------------------
# axiom verifiers


def verify_algebra(a: AlgebraData) -> CheckReport:
    """Associativity and two-sided unit on every basis tuple."""
    rb = ReportBuilder("algebra")
    lhs = np.einsum("ijm,mkl->ijkl", a.mult, a.mult, optimize=True)
    rhs = np.einsum("jkm,iml->ijkl", a.mult, a.mult, optimize=True)
    rb.compare("associativity", lhs, rhs)
    eye = identity(a.fld, a.dim)
    rb.compare("unit_left", np.einsum("i,ijk->jk", a.unit, a.mult), eye)
    rb.compare("unit_right", np.einsum("j,ijk->ik", a.unit, a.mult), eye)
    return rb.build()


def verify_coalgebra(c: CoalgebraData) -> CheckReport:
    """Coassociativity and the two counit laws on every basis tuple."""
    rb = ReportBuilder("coalgebra")
    lhs = np.einsum("ijz,jxy->ixyz", c.comult, c.comult, optimize=True)
    rhs = np.einsum("ixk,kyz->ixyz", c.comult, c.comult, optimize=True)
    rb.compare("coassociativity", lhs, rhs)
    eye = identity(c.fld, c.dim)
    rb.compare("counit_left", np.einsum("ijk,j->ik", c.comult, c.counit), eye)
    rb.compare("counit_right", np.einsum("ijk,k->ij", c.comult, c.counit), eye)
    return rb.build()


def verify_hopf(h: HopfAlgebraData) -> CheckReport:
    """Full Hopf check: algebra, coalgebra, bialgebra compatibility,
    antipode identities.  Sub-report names are prefixed accordingly."""
    rb = ReportBuilder("hopf")
    rb.absorb(verify_algebra(h.algebra), "algebra.")
    rb.absorb(verify_coalgebra(h.coalgebra), "coalgebra.")
    n = h.dim
    lhs = np.einsum("ijm,mab->ijab", h.mult, h.comult, optimize=True).reshape(n, n, n * n)
    rhs = np.einsum("ipq,jrs,pra,qsb->ijab", h.comult, h.comult, h.mult, h.mult,
                    optimize=True).reshape(n, n, n * n)
    rb.compare("comult_multiplicative", lhs, rhs)
    rb.compare("comult_unital",
               np.einsum("i,ijk->jk", h.unit, h.comult).reshape(n * n),
               kron(h.unit, h.unit))
    rb.compare("counit_multiplicative",
               np.einsum("ijm,m->ij", h.mult, h.counit),
               np.einsum("i,j->ij", h.counit, h.counit))
    eps_of_one = np.einsum("i,i->", h.unit, h.counit)
    rb.require("counit_unital", eps_of_one == h.fld.one(),
               lhs=(eps_of_one,), rhs=(h.fld.one(),))
    target = np.einsum("i,l->il", h.counit, h.unit)
    rb.compare("antipode_left",
               np.einsum("ijk,jm,mkl->il", h.comult, h.antipode, h.mult, optimize=True),
               target)
    rb.compare("antipode_right",
               np.einsum("ijk,km,jml->il", h.comult, h.antipode, h.mult, optimize=True),
               target)
    return rb.build()


def is_cocommutative(c: CoalgebraData) -> bool:
    return eqarr(c.comult, c.comult.transpose(0, 2, 1))


# ---------------------------------------------------------------------------
# Sweedler splitting and derived coalgebras


def split(c: CoalgebraData, n: int) -> np.ndarray:
    """Iterated coproduct as a tensor with ``n`` output legs.

    ``split(c, n)[i, a1, ..., an]`` is the coefficient of
    ``e_a1 (x) ... (x) e_an`` in the (n-1)-fold coproduct of ``e_i``.
    ``n = 1`` gives the identity.  Coassociativity (verified elsewhere)
    makes the splitting order irrelevant; we always split the last leg.
    """
    assert n >= 1
    s = identity(c.fld, c.dim)
    for k in range(1, n):
        s = np.einsum(s, list(range(k + 1)), c.comult, [k, k + 1, k + 2],
                      list(range(k)) + [k + 1, k + 2])
    return s


def tensor_square_coalgebra(c: CoalgebraData) -> CoalgebraData:
    """The coalgebra H (x) H with the leg-swapped coproduct
    (id (x) tau (x) id)(comult (x) comult) and product counit."""
    n = c.dim
    comult2 = np.einsum("iab,jcd->ijacbd", c.comult, c.comult,
                        optimize=True).reshape(n * n, n * n, n * n)
    counit2 = kron(c.counit, c.counit)
    return CoalgebraData(c.fld, n * n, comult2, counit2)


# ---------------------------------------------------------------------------
# convolution algebra Hom(C, A)


def convolution(f: LinMapHom, g: LinMapHom, c: CoalgebraData, a: AlgebraData) -> LinMapHom:
    """(f * g)(x) = f(x_(1)) g(x_(2))."""
    assert f.domain_dim == g.domain_dim == c.dim
    assert f.codomain_dim == g.codomain_dim == a.dim
    m = np.einsum("ijk,ja,kb,abm->im", c.comult, f.matrix, g.matrix, a.mult,
                  optimize=True)
    return LinMapHom(c.dim, a.dim, m)


def convolution_unit(c: CoalgebraData, a: AlgebraData) -> LinMapHom:
    return LinMapHom(c.dim, a.dim, np.einsum("i,m->im", c.counit, a.unit))


def convolution_inverse(f: LinMapHom, c: CoalgebraData, a: AlgebraData):
    """Two-sided convolution inverse of f, or None if it does not exist.

    Solves the linear system f*g = g*f = unit.counit over the matrix
    entries of g; the deterministic solver makes the result canonical.
    """
    nc, na = c.dim, a.dim
    l1 = np.einsum("ijk,ja,abm->imkb", c.comult, f.matrix, a.mult,
                   optimize=True).reshape(nc * na, nc * na)
    l2 = np.einsum("ijk,kb,abm->imja", c.comult, f.matrix, a.mult,
                   optimize=True).reshape(nc * na, nc * na)
    rhs = convolution_unit(c, a).matrix.reshape(nc * na)
    big = np.concatenate([l1, l2], axis=0)
    rhs2 = np.concatenate([rhs, rhs])
    x = solve(big, rhs2, a.fld)
    if x is None:
        return None
    return LinMapHom(nc, na, x.reshape(nc, na))


def convolution_central_violations(f: LinMapHom, c: CoalgebraData, a: AlgebraData):
    """Violations of centrality of f in Hom(C, A).

    Centrality is linear in the other factor, so it is enough to test
    against the spanning maps E_(i,j): e_i |-> a_j (zero elsewhere).
    Returns a list of (index, lhs, rhs) with index = (i, j, x): the
    spanning map that fails and the C-basis element where it fails.
    """
    out = []
    for i in range(c.dim):
        for j in range(a.dim):
            e = zeros(a.fld, (c.dim, a.dim))
            e[i, j] = a.fld.one()
            em = LinMapHom(c.dim, a.dim, e)
            lhs = convolution(f, em, c, a).matrix
            rhs = convolution(em, f, c, a).matrix
            for x in range(c.dim):
                if not eqarr(lhs[x], rhs[x]):
                    out.append(((i, j, x), tuple(lhs[x]), tuple(rhs[x])))
    return out


# ---------------------------------------------------------------------------
# integrals and stock constructions


def left_integrals(h: HopfAlgebraData) -> SubspaceBasis:
    """The space of left integrals {t : x t = counit(x) t for all x}."""
    n = h.dim
    eye = identity(h.fld, n)
    m = h.mult.transpose(0, 2, 1) - np.einsum("i,jk->ikj", h.counit, eye)
    rows = kernel_basis(m.reshape(n * n, n), h.fld)
    return span(rows, n, h.fld)


def group_algebra(fld: Field, table, inverse=None, labels=None) -> HopfAlgebraData:
    """The Hopf algebra of a finite group given by its index table.

    Args:
        table: table[i][j] = index of the product of elements i and j.
        inverse: optional list of inverse indices; computed and checked
            against the table when omitted.

    Raises NonGroupTable unless the table is a genuine group: closed,
    associative, with two-sided identity and inverses.
    """
    n = len(table)
    for i, row in enumerate(table):
        if len(row) != n:
            raise NonGroupTable(f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise NonGroupTable(f"table[{i}][{j}] = {v!r} is not an index")
    for i, j, k in iproduct(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise NonGroupTable(f"associativity fails at ({i}, {j}, {k})")
    ident = None
    for e in range(n):
        if all(table[e][j] == j and table[j][e] == j for j in range(n)):
            ident = e
            break
    if ident is None:
        raise NonGroupTable("no two-sided identity element")
    inv = [None] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == ident and table[j][i] == ident:
                inv[i] = j
                break
        if inv[i] is None:
            raise NonGroupTable(f"element {i} has no inverse")
    if inverse is not None and list(inverse) != inv:
        raise NonGroupTable(f"declared inverses {list(inverse)} != computed {inv}")

    one, zero = fld.one(), fld.zero()
    mult = zeros(fld, (n, n, n))
    comult = zeros(fld, (n, n, n))
    for i, j in iproduct(range(n), repeat=2):
        mult[i, j, table[i][j]] = one
    unit = zeros(fld, (n,))
    unit[ident] = one
    for i in range(n):
        comult[i, i, i] = one
    counit = arr(fld, [1] * n)
    antipode = zeros(fld, (n, n))
    for i in range(n):
        antipode[i, inv[i]] = one
    if labels is None:
        labels = tuple(f"g{i}" for i in range(n))
    return HopfAlgebraData(
        AlgebraData(fld, n, mult, unit, tuple(labels)),
        CoalgebraData(fld, n, comult, counit, tuple(labels)),
        antipode,
    )


def dual_hopf(h: HopfAlgebraData) -> HopfAlgebraData:
    """The dual Hopf algebra on the dual basis.

    Multiplication of functionals transposes the coproduct and vice
    versa; the antipode transposes.  Duality swaps commutative and
    cocommutative, which is how a non-cocommutative sample (functions on
    a nonabelian group) is produced from a group algebra.
    """
    n = h.dim
    mult = np.ascontiguousarray(h.comult.transpose(1, 2, 0))
    comult = np.ascontiguousarray(h.mult.transpose(2, 0, 1))
    return HopfAlgebraData(
        AlgebraData(h.fld, n, mult, h.counit.copy(), h.labels),
        CoalgebraData(h.fld, n, comult, h.unit.copy(), h.labels),
        np.ascontiguousarray(h.antipode.T),
    )


def function_algebra(a: AlgebraData, npoints: int) -> AlgebraData:
    """The algebra of A-valued functions on ``npoints`` points,
    i.e. the direct product of ``npoints`` copies of A.

    Basis index (s, i) -> s * a.dim + i for point s and A-basis i.
    """
    n = a.dim
    d = npoints * n
    mult = zeros(a.fld, (d, d, d))
    for s in range(npoints):
        for i, j, k in iproduct(range(n), repeat=3):
            if a.mult[i, j, k] != 0:
                mult[s * n + i, s * n + j, s * n + k] = a.mult[i, j, k]
    unit = zeros(a.fld, (d,))
    for s in range(npoints):
        for i in range(n):
            unit[s * n + i] = a.unit[i]
    return AlgebraData(a.fld, d, mult, unit)
