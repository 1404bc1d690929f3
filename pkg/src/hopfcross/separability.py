"""Partially cleft sections, centralizer identities, and separability
idempotents for crossed products.

A cleft datum is a pair of convolution maps gamma, gamma': H -> R into
a crossed product, where gamma is colinear for the coaction, gamma' is
colinear for the flipped coaction through the antipode, and their
convolution product lands in the embedded base.  The default datum
sends h to the class of (h_1 . 1) (x) h_2 and composes with the
antipode for gamma'.

From a cleft datum, a left integral t and a suitable central c, the
separability element of the extension is

    sum  gamma'(u_1) iota(c) iota(S(u_2) . 1) (x) gamma(u_3),  u = S(t),

read in the balanced tensor square of R over the embedded base.  The
code builds it exactly and checks the two separability conditions on
basis elements.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .checks import CheckReport, ReportBuilder
from .crossed import (CrossedProductAlgebra, balanced_tensor_square,
                      base_image, build_global_crossed, build_partial_crossed,
                      canonical_map, coinvariants)
from .errors import (CoinvariantsMismatch, NormalizationFailed, NotCentral,
                     NotCocommutative, NotIntegral, PreconditionError)
from .hopf import (LinMapHom, convolution_central_violations, is_cocommutative,
                   left_integrals, split, tensor_square_coalgebra)
from .linalg import QuotientSpace, coords_in, is_zero, solve, span, zeros
from .partial import GlobalTwistedAction, TwistedPartialAction


@dataclass(frozen=True)
class CleftData:
    """A crossed product with a section/cosection pair.

    ``action`` keeps the measuring of the base algebra; the centralizer
    and separability formulas quantify over terms like S(h) . 1 that
    cannot be recovered from the maps alone.
    """

    cp: CrossedProductAlgebra
    gamma: np.ndarray          # (dim H, dim R)
    gamma_prime: np.ndarray
    action: np.ndarray         # (dim H, dim A, dim A)

    @property
    def fld(self):
        return self.cp.fld


def default_cleft(tpa, cp: CrossedProductAlgebra | None = None) -> CleftData:
    """The unit section gamma(h) = class of (h_1 . 1) (x) h_2, with
    gamma' = gamma after the antipode.  Accepts partial or global data
    and builds the matching crossed product when none is supplied."""
    h, a = tpa.hopf, tpa.alg
    if cp is None:
        if isinstance(tpa, GlobalTwistedAction):
            cp = build_global_crossed(tpa)
        else:
            cp = build_partial_crossed(tpa)
    action = tpa.action if isinstance(tpa, TwistedPartialAction) else tpa.action
    e = np.einsum("ija,j->ia", action, a.unit)
    amb = np.einsum("jpq,px->jxq", h.comult, e).reshape(h.dim, a.dim * h.dim)
    gamma = zeros(a.fld, (h.dim, cp.dim))
    for j in range(h.dim):
        c = coords_in(cp.basis, amb[j])
        if c is None:
            raise ValueError(f"unit section of basis element {j} left the span")
        gamma[j] = c
    return CleftData(cp, gamma, h.antipode @ gamma, action)


def _conv_product(cd: CleftData) -> np.ndarray:
    """(gamma * gamma')(h) on the Hopf basis, valued in the crossed
    product."""
    h = cd.cp.hopf
    return np.einsum("ipq,pk,qm,kms->is", h.comult, cd.gamma, cd.gamma_prime,
                     cd.cp.algebra.mult, optimize=True)


def verify_partially_cleft(cd: CleftData) -> CheckReport:
    """The defining conditions of a partially cleft extension.

    Raises CoinvariantsMismatch when the coinvariants of the coaction
    are not the embedded base, since the notion is only about such
    extensions.  Then checks the value at 1, colinearity of the section,
    antipode-twisted colinearity of the cosection, that gamma * gamma'
    lands in the embedded base, centrality of its two-argument extension
    in the convolution algebra, and commutation with the base.
    """
    cp = cd.cp
    h = cp.hopf
    fld = cp.fld
    coin = coinvariants(cp)
    base = base_image(cp)
    if coin != base:
        raise CoinvariantsMismatch(
            f"coinvariants (dim {coin.dim}) differ from the embedded base "
            f"(dim {base.dim})")
    rb = ReportBuilder("partially cleft extension")
    rb.compare("unit_value", (h.unit @ cd.gamma).reshape(1, -1),
               cp.algebra.unit.reshape(1, -1))
    d, nh = cp.dim, h.dim
    co = cp.coaction.reshape(d, d, nh)
    lhs = np.einsum("jm,mks->jks", cd.gamma, co, optimize=True)
    rhs = np.einsum("jpq,pk->jkq", h.comult, cd.gamma)
    rb.compare("section_colinear", lhs, rhs)
    lhs = np.einsum("jm,mks->jks", cd.gamma_prime, co, optimize=True)
    rhs = np.einsum("jpq,qk,ps->jks", h.comult, cd.gamma_prime, h.antipode,
                    optimize=True)
    rb.compare("cosection_colinear", lhs, rhs)
    q = _conv_product(cd)
    qa = zeros(fld, (nh, cp.base.dim))
    in_base = True
    for i in range(nh):
        c = solve(cp.iota.T, q[i], fld)
        ok = c is not None
        rb.require("product_valued_in_base", ok, index=(i,),
                   lhs=tuple(q[i]), rhs=("inside the embedded base",))
        if ok:
            qa[i] = c
        else:
            in_base = False
    if in_base:
        # centrality lives in the convolution algebra of maps into the
        # base, so the product is pulled back through the embedding
        q2 = np.einsum("ijt,ty->ijy", h.mult, qa).reshape(nh * nh,
                                                          cp.base.dim)
        viols = convolution_central_violations(
            LinMapHom(nh * nh, cp.base.dim, q2),
            tensor_square_coalgebra(h.coalgebra), cp.base)
        for idx, lv, rv in viols:
            rb.require("product_convolution_central", False, index=idx,
                       lhs=lv, rhs=rv)
        if not viols:
            rb.require("product_convolution_central", True)
    else:
        rb.note("centrality of the section product was skipped because the "
                "product does not land in the embedded base")
    lhs = np.einsum("is,at,stu->iau", q, cp.iota, cp.algebra.mult,
                    optimize=True)
    rhs = np.einsum("is,at,tsu->iau", q, cp.iota, cp.algebra.mult,
                    optimize=True)
    rb.compare("product_commutes_with_base", lhs, rhs)
    return rb.build()


def centralizer(cp: CrossedProductAlgebra):
    """The centralizer of the embedded base inside the crossed product,
    as a subspace in crossed-product coordinates."""
    d, na = cp.dim, cp.base.dim
    diff = cp.algebra.mult - cp.algebra.mult.transpose(1, 0, 2)
    m = np.einsum("aj,ijk->aki", cp.iota, diff, optimize=True).reshape(na * d, d)
    from .linalg import kernel_basis
    return span(kernel_basis(m, cp.fld), d, cp.fld)


def verify_centralizer_identity(cd: CleftData, c: np.ndarray) -> CheckReport:
    """For cocommutative H and c centralizing the base, conjugating c by
    the cosection/section pair

        sum gamma'(h_1) c iota(S(h_2) . 1) gamma(h_3)

    equals the antipode-swapped conjugation
    sum gamma(S(h_2)) c gamma'(S(h_1)), and when c lies in the base it
    also equals iota(S(h) . c).

    Raises NotCocommutative or NotCentral when the hypotheses fail.
    """
    cp = cd.cp
    h = cp.hopf
    fld = cp.fld
    if not is_cocommutative(h.coalgebra):
        raise NotCocommutative("the coproduct is not cocommutative")
    cen = centralizer(cp)
    c = np.asarray(c)
    if coords_in(cen, c) is None:
        raise NotCentral("the element does not centralize the embedded base")
    e = np.einsum("ija,j->ia", cd.action, cp.base.unit)
    iota_es = (h.antipode @ e) @ cp.iota
    s3 = split(h.coalgebra, 3)
    mult = cp.algebra.mult
    t1 = np.einsum("pa,b,abm->pm", cd.gamma_prime, c, mult, optimize=True)
    t2 = np.einsum("pm,qc,mcn->pqn", t1, iota_es, mult, optimize=True)
    t3 = np.einsum("pqn,rd,ndk->pqrk", t2, cd.gamma, mult, optimize=True)
    e1 = np.einsum("ipqr,pqrk->ik", s3, t3)
    gs = h.antipode @ cd.gamma
    gps = h.antipode @ cd.gamma_prime
    t = np.einsum("qa,b,abm->qm", gs, c, mult, optimize=True)
    e2 = np.einsum("ipq,qm,pd,mdk->ik", h.comult, t, gps, mult, optimize=True)
    rb = ReportBuilder("centralizer conjugation")
    rb.compare("conjugation_equals_swapped", e1, e2)
    c_a = solve(cp.iota.T, c, fld)
    if c_a is None:
        rb.note("the element is outside the embedded base, so the comparison "
                "with the measured value does not apply")
    else:
        acted = np.einsum("ij,b,jba->ia", h.antipode, c_a, cd.action,
                          optimize=True)
        rb.compare("conjugation_equals_action", e2, acted @ cp.iota)
    return rb.build()


@dataclass(frozen=True)
class BalancedTensorElement:
    """An element of the balanced tensor square of a crossed product
    over its base, kept both as quotient coordinates and as a lift on
    the plain tensor square (row-major pair indexing)."""

    coordinates: np.ndarray
    lift: np.ndarray


def separability_idempotent(cd: CleftData, t: np.ndarray, c: np.ndarray):
    """The candidate separability element built from a left integral t
    and a base element c, as an element of the balanced tensor square.

    Preconditions, each raising its own error: the coproduct must be
    cocommutative, the cleft data must pass its own verification, t must
    be a nonzero left integral, c must be central in the base algebra,
    and t . c = sum t_i (h_i . c) must be the base unit.

    Returns (element, report); the report covers the two separability
    conditions for the element and whether the canonical Galois map of
    the crossed product is bijective, which the separability theory
    presumes and which can genuinely fail.
    """
    cp = cd.cp
    h = cp.hopf
    fld = cp.fld
    if not is_cocommutative(h.coalgebra):
        raise NotCocommutative("the coproduct is not cocommutative")
    cleft = verify_partially_cleft(cd)
    if not cleft.passed:
        raise PreconditionError(
            "the section pair is not partially cleft: " + cleft.summary())
    t = np.asarray(t)
    integrals = left_integrals(h)
    if is_zero(t) or coords_in(integrals, t) is None:
        raise NotIntegral("the chosen element is not a nonzero left integral")
    c = np.asarray(c)
    a = cp.base
    if not np.array_equal(np.einsum("b,bjk->jk", c, a.mult),
                          np.einsum("b,jbk->jk", c, a.mult)):
        raise NotCentral("the chosen element is not central in the base")
    normalized = np.einsum("i,b,iba->a", t, c, cd.action)
    if not np.array_equal(normalized, a.unit):
        raise NormalizationFailed(
            f"the integral does not collapse the element to the unit: got "
            f"{tuple(normalized)}")

    u = t @ h.antipode
    w = np.einsum("i,ipqr->pqr", u, split(h.coalgebra, 3))
    e = np.einsum("ija,j->ia", cd.action, a.unit)
    iota_es = (h.antipode @ e) @ cp.iota
    iota_c = c @ cp.iota
    mult = cp.algebra.mult
    first = np.einsum("pa,b,abm,qc,mcn->pqn", cd.gamma_prime, iota_c, mult,
                      iota_es, mult, optimize=True)
    d = cp.dim
    lift = np.einsum("pqr,pqy,rz->yz", w, first, cd.gamma,
                     optimize=True).reshape(d * d)
    q = balanced_tensor_square(cp)
    elem = BalancedTensorElement(q.project(lift), lift)

    rb = ReportBuilder("separability element construction")
    rb.require("normalization", True,
               lhs=tuple(normalized), rhs=tuple(a.unit))
    res, _, _ = canonical_map(cp)
    rb.require("canonical_map_bijective", res.bijective,
               lhs=(res.quotient_dim, res.rank), rhs=(res.target_dim,))
    rb.absorb(check_separable_extension(cd, elem), "")
    return elem, rb.build()


def check_separable_extension(cd: CleftData,
                              elem: BalancedTensorElement) -> CheckReport:
    """The two separability conditions for an element of the balanced
    tensor square: it commutes with every ring element across the two
    legs, and multiplication collapses it to the unit.  A third derived
    identity checks idempotency under the factorwise product."""
    cp = cd.cp
    d = cp.dim
    q = balanced_tensor_square(cp)
    rb = ReportBuilder("separability conditions")
    lift = np.asarray(elem.lift).reshape(d, d)
    rb.compare("lift_projects_to_coordinates",
               q.project(elem.lift).reshape(1, -1),
               np.asarray(elem.coordinates).reshape(1, -1))
    mult = cp.algebra.mult
    left = np.einsum("ab,xac->xcb", lift, mult, optimize=True)
    right = np.einsum("ab,bxc->xac", lift, mult, optimize=True)
    for x in range(d):
        rb.require("two_sided_translation",
                   np.array_equal(q.project(left[x].reshape(d * d)),
                                  q.project(right[x].reshape(d * d))),
                   index=(x,),
                   lhs=tuple(q.project(left[x].reshape(d * d))),
                   rhs=tuple(q.project(right[x].reshape(d * d))))
    collapsed = np.einsum("ab,abc->c", lift, mult)
    rb.compare("multiplication_collapse", collapsed.reshape(1, -1),
               cp.algebra.unit.reshape(1, -1))
    squared = np.einsum("yz,ab,yac,bzd->cd", lift, lift, mult, mult,
                        optimize=True)
    rb.compare("collapse_idempotent",
               q.project(squared.reshape(d * d)).reshape(1, -1),
               np.asarray(elem.coordinates).reshape(1, -1))
    return rb.build()
