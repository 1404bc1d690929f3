"""Partial crossed products.

Inside the full tensor square A (x) H carrying the twisted product

    (a (x) h)(b (x) l) = a (h_1 . b) w(h_2, l_1) (x) h_3 l_2

the crossed product is the span of the elements a (h_1 . 1) (x) h_2.
This module builds that span, the structure constants of the product on
it, the natural right coaction of H, its coinvariants, the embedding of
the base algebra, and the canonical Galois-type map on the balanced
tensor square.

Basis bookkeeping: the ambient space A (x) H is indexed row-major, so
the pair (i, p) sits at position i * dim(H) + p and a pure tensor is a
Kronecker product of coordinate vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .checks import CheckReport, ReportBuilder
from .errors import ClosureViolation, CoinvariantsMismatch, PreconditionError
from .hopf import AlgebraData, HopfAlgebraData, LinMapHom, split, verify_algebra
from .linalg import (QuotientSpace, SubspaceBasis, coords_in, identity, is_zero,
                     kernel_basis, kron, quotient, rank, span, zeros)
from .partial import (GlobalTwistedAction, TwistedPartialAction,
                      verify_crossed_conditions, verify_global,
                      verify_twisted_partial)


def ambient_product_tensor(hopf: HopfAlgebraData, alg: AlgebraData,
                           action: np.ndarray, cocycle: np.ndarray) -> np.ndarray:
    """Structure tensor of the twisted product on all of A (x) H."""
    d3 = split(hopf.coalgebra, 3)
    na, nh = alg.dim, hopf.dim
    t = np.einsum("pabc,qde,ajx,ixy,bdz,yzw,cet->ipjqwt",
                  d3, hopf.comult, action, alg.mult, cocycle, alg.mult,
                  hopf.mult, optimize=True)
    n = na * nh
    return t.reshape(n, n, n)


@dataclass(frozen=True)
class CrossedProductAlgebra:
    """A crossed product presented on an echelon basis of its span.

    Attributes:
        hopf, base: the inputs.
        basis: the span of the generators inside A (x) H.
        algebra: structure constants of the product on that basis.
        ambient_product: the product tensor on all of A (x) H.
        iota: matrix of the base-algebra embedding a |-> a (x) 1.
        coaction: matrix of x |-> x_(0) (x) x_(1), shaped
            (dim, dim * dim H) with column index k * dim(H) + s.
    """

    hopf: HopfAlgebraData
    base: AlgebraData
    basis: SubspaceBasis
    algebra: AlgebraData
    ambient_product: np.ndarray
    iota: np.ndarray
    coaction: np.ndarray

    @property
    def fld(self):
        return self.algebra.fld

    @property
    def dim(self):
        return self.algebra.dim

    def multiply(self, x, y):
        return self.algebra.mul(x, y)

    def embed_base(self, a):
        return a @ self.iota

    def to_ambient(self, x):
        return x @ self.basis.rows


def _build(hopf: HopfAlgebraData, alg: AlgebraData, action: np.ndarray,
           cocycle: np.ndarray, cls=None) -> 'CrossedProductAlgebra':
    cls = cls or CrossedProductAlgebra
    fld = alg.fld
    na, nh = alg.dim, hopf.dim
    n = na * nh
    e = np.einsum("ija,j->ia", action, alg.unit)
    gens = np.einsum("jpt,px,ixm->ijmt", hopf.comult, e, alg.mult,
                     optimize=True).reshape(na * nh, n)
    basis = span(gens, n, fld)
    d = basis.dim
    amb = ambient_product_tensor(hopf, alg, action, cocycle)

    table = zeros(fld, (d, d, d))
    for s in range(d):
        for u in range(d):
            prod = np.einsum("a,b,abc->c", basis.rows[s], basis.rows[u], amb)
            c = coords_in(basis, prod)
            if c is None:
                raise ClosureViolation(
                    f"product of crossed basis elements {s} and {u} leaves the span")
            table[s, u] = c

    unit_c = coords_in(basis, kron(alg.unit, hopf.unit))
    if unit_c is None:
        raise ClosureViolation("the unit of A (x) H is not inside the span")
    algebra = AlgebraData(fld, d, table, unit_c)

    iota = zeros(fld, (na, d))
    for i in range(na):
        vec = zeros(fld, (n,))
        for p in range(nh):
            vec[i * nh + p] = hopf.unit[p]
        c = coords_in(basis, vec)
        if c is None:
            raise ClosureViolation(f"base element {i} (x) 1 is not inside the span")
        iota[i] = c

    coaction = zeros(fld, (d, d * nh))
    for r in range(d):
        amb_r = basis.rows[r].reshape(na, nh)
        # apply id (x) comult, then express the first two legs on the basis
        trip = np.einsum("mp,pts->mts", amb_r, hopf.comult)
        for s2 in range(nh):
            c = coords_in(basis, trip[:, :, s2].reshape(n))
            if c is None:
                raise ClosureViolation(
                    f"coaction of basis element {r} leaves the span")
            for k in range(d):
                coaction[r, k * nh + s2] = c[k]

    return cls(hopf, alg, basis, algebra, amb, iota, coaction)


class GlobalCrossedProduct(CrossedProductAlgebra):
    """Crossed product of a global twisted action; the span is the full
    tensor square, so ``basis.rows`` is the identity permutation of the
    ambient coordinates."""


def build_partial_crossed(tpa: TwistedPartialAction,
                          check: bool = True) -> CrossedProductAlgebra:
    """Build the crossed product of a twisted partial action.  With
    ``check`` the crossed-product conditions are verified first and a
    PreconditionError raised when they fail."""
    if check:
        rep = verify_twisted_partial(tpa).merged(verify_crossed_conditions(tpa))
        if not rep.passed:
            raise PreconditionError(
                "input fails the crossed product conditions: " + rep.summary())
    return _build(tpa.hopf, tpa.alg, tpa.action, tpa.cocycle)


def build_global_crossed(g: GlobalTwistedAction,
                         check: bool = True) -> GlobalCrossedProduct:
    """Crossed product of a global twisted action.  When the axioms hold
    the span is all of B (x) H."""
    if check:
        rep = verify_global(g)
        if not rep.passed:
            raise PreconditionError(
                "input fails the global twisted action axioms: " + rep.summary())
    return _build(g.hopf, g.alg, g.action, g.twist, cls=GlobalCrossedProduct)


def verify_assoc_unital(cp: CrossedProductAlgebra) -> CheckReport:
    """Associativity and both unit laws of the crossed product table
    alone, with no embedding checks."""
    rb = ReportBuilder("crossed product table")
    rb.absorb(verify_algebra(cp.algebra), "")
    return rb.build()


def verify_crossed(cp: CrossedProductAlgebra) -> CheckReport:
    """Associativity and unitality of the crossed product table, plus
    multiplicativity and unitality of the base embedding."""
    rb = ReportBuilder("crossed product")
    rb.absorb(verify_algebra(cp.algebra), "")
    lhs = np.einsum("ijm,mk->ijk", cp.base.mult, cp.iota, optimize=True)
    rhs = np.einsum("ix,jy,xyk->ijk", cp.iota, cp.iota, cp.algebra.mult,
                    optimize=True)
    rb.compare("base_embedding_multiplicative", lhs, rhs)
    rb.compare("base_embedding_unital",
               (cp.base.unit @ cp.iota).reshape(1, -1),
               cp.algebra.unit.reshape(1, -1))
    inj = rank(cp.iota, cp.fld) == cp.base.dim
    rb.require("base_embedding_injective", inj,
               lhs=(rank(cp.iota, cp.fld),), rhs=(cp.base.dim,))
    return rb.build()


def verify_coaction(cp: CrossedProductAlgebra) -> CheckReport:
    """The comodule axioms for the coaction: counit law and
    coassociativity, plus multiplicativity (the product is a comodule
    algebra map) and unit colinearity."""
    rb = ReportBuilder("coaction")
    d, nh = cp.dim, cp.hopf.dim
    co = cp.coaction.reshape(d, d, nh)
    rb.compare("counit_law",
               np.einsum("rks,s->rk", co, cp.hopf.counit),
               identity(cp.fld, d))
    lhs = np.einsum("rks,stu->rktu", co, cp.hopf.comult,
                    optimize=True).reshape(d, d * nh * nh)
    rhs = np.einsum("rms,mkt->rkts", co, co,
                    optimize=True).reshape(d, d * nh * nh)
    rb.compare("coassociativity", rhs, lhs)
    lhs = np.einsum("xym,mks->xyks", cp.algebra.mult, co,
                    optimize=True).reshape(d, d, d * nh)
    rhs = np.einsum("xas,ybt,abk,stu->xyku", co, co, cp.algebra.mult,
                    cp.hopf.mult, optimize=True).reshape(d, d, d * nh)
    rb.compare("coaction_multiplicative", lhs, rhs)
    rb.compare("unit_coinvariant",
               (cp.algebra.unit @ cp.coaction).reshape(1, -1),
               kron(cp.algebra.unit, cp.hopf.unit).reshape(1, -1))
    return rb.build()


def comodule_coaction(cp: CrossedProductAlgebra):
    """The coaction packaged as a linear map R -> R (x) H together with
    its coinvariant subspace and a report covering the comodule axioms
    and whether the coinvariants are exactly the embedded base.

    Returns (map, coinvariants, report).
    """
    rho = LinMapHom(cp.dim, cp.dim * cp.hopf.dim, cp.coaction)
    coin = coinvariants(cp)
    rep = verify_coaction(cp).merged(verify_coinvariants_are_base(cp))
    return rho, coin, rep


def coinvariants(cp: CrossedProductAlgebra) -> SubspaceBasis:
    """Elements x with coaction x (x) 1, as a subspace of the crossed
    product in its own basis."""
    d, nh = cp.dim, cp.hopf.dim
    m = cp.coaction.copy().reshape(d, d, nh)
    for r in range(d):
        for s in range(nh):
            m[r, r, s] = m[r, r, s] - cp.hopf.unit[s]
    rows = kernel_basis(m.reshape(d, d * nh).T, cp.fld)
    return span(rows, d, cp.fld)


def base_image(cp: CrossedProductAlgebra) -> SubspaceBasis:
    return span(cp.iota, cp.dim, cp.fld)


def verify_coinvariants_are_base(cp: CrossedProductAlgebra) -> CheckReport:
    rb = ReportBuilder("coinvariants")
    coin = coinvariants(cp)
    base = base_image(cp)
    rb.require("coinvariants_equal_base_image", coin == base,
               lhs=(coin.dim,), rhs=(base.dim,))
    if coin != base:
        rb.note("coinvariant subspace differs from the embedded base algebra")
    return rb.build()


# ---------------------------------------------------------------------------
# balanced tensor square and the canonical map


def balanced_tensor_square(cp: CrossedProductAlgebra) -> QuotientSpace:
    """The quotient of R (x) R by the base-balancing relations
    x iota(a) (x) y - x (x) iota(a) y over all basis triples."""
    d = cp.dim
    na = cp.base.dim
    rels = zeros(cp.fld, (d * d * na, d * d))
    r = 0
    for x in range(d):
        ex = zeros(cp.fld, (d,))
        ex[x] = cp.fld.one()
        for a in range(na):
            xa = cp.multiply(ex, cp.iota[a])
            for y in range(d):
                ey = zeros(cp.fld, (d,))
                ey[y] = cp.fld.one()
                ay = cp.multiply(cp.iota[a], ey)
                rels[r] = kron(xa, ey) - kron(ex, ay)
                r += 1
    return quotient(d * d, rels, cp.fld)


@dataclass(frozen=True)
class CanonicalMapResult:
    quotient_dim: int
    target_dim: int
    rank: int
    balanced: bool
    injective: bool
    surjective: bool

    @property
    def bijective(self):
        return self.injective and self.surjective


def canonical_map(cp: CrossedProductAlgebra):
    """The map x (x) y |-> x y_(0) (x) y_(1) from the balanced tensor
    square of the crossed product to (crossed product) (x) H.

    Returns (result, matrix, quotient): the rank statistics, the matrix
    of the induced map on the quotient, and the quotient itself.
    ``balanced`` records whether the ambient map killed every balancing
    relation, which the theory guarantees and the code re-checks.

    Raises CoinvariantsMismatch when the coinvariants of the coaction
    are not exactly the embedded base algebra, since the balanced tensor
    square is only the right source space in that case.
    """
    coin = coinvariants(cp)
    base = base_image(cp)
    if coin != base:
        raise CoinvariantsMismatch(
            f"coinvariants (dim {coin.dim}) differ from the embedded base "
            f"(dim {base.dim})")
    d, nh = cp.dim, cp.hopf.dim
    co = cp.coaction.reshape(d, d, nh)
    camb = np.einsum("yms,xmk->xyks", co, cp.algebra.mult,
                     optimize=True).reshape(d * d, d * nh)
    q = balanced_tensor_square(cp)
    balanced = is_zero(np.asarray(q.relations.rows @ camb)) if q.relations.rows.size else True
    mq = q.section @ camb
    rk = rank(mq, cp.fld)
    res = CanonicalMapResult(
        quotient_dim=q.dim,
        target_dim=d * nh,
        rank=rk,
        balanced=bool(balanced),
        injective=rk == q.dim,
        surjective=rk == d * nh,
    )
    return res, mq, q
