"""Gauge transformations of twisted partial actions.

A gauge is a map v: H -> A with v(1) = 1 that is invertible inside the
ideal of the convolution algebra Hom(H, A) whose local unit is
e(h) = h . 1.  Conjugating the action and cocycle by such a v gives a
new twisted partial action with the same crossed-product theory, and
the two crossed products are isomorphic.

A map and its weak inverse are stored together in a GaugePair; the
``fully_invertible`` flag records the special case where the inverse is
a true convolution inverse (against the counit unit), which happens
exactly when e itself is the counit unit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .checks import CheckReport, ReportBuilder
from .crossed import CrossedProductAlgebra, build_partial_crossed
from .errors import CompositeNotGauge
from .hopf import LinMapHom, convolution, convolution_unit, split
from .linalg import coords_in, identity, rank, solve, zeros
from .partial import (TwistedPartialAction, unit_translates,
                      verify_crossed_conditions)


@dataclass(frozen=True)
class GaugePair:
    """A gauge map v together with its weak convolution inverse."""

    v: np.ndarray           # (dim H, dim A)
    v_inv: np.ndarray
    fully_invertible: bool


def weak_conv_inverse(v: np.ndarray, tpa: TwistedPartialAction) -> GaugePair | None:
    """Solve for the weak convolution inverse of v relative to the
    corner with local unit e(h) = h . 1: an u with v * u = u * v = e,
    u = u * e = e * u, and u(1) = 1.

    Returns the GaugePair, or None when v(1) is not the unit of A or no
    such u exists.  The solution, when it exists, is unique, so the
    deterministic solver returns the canonical one.
    """
    h, a = tpa.hopf, tpa.alg
    fld = a.fld
    nh, na = h.dim, a.dim
    v = np.asarray(v)
    if not np.array_equal(h.unit @ v, a.unit):
        return None
    e = unit_translates(tpa)
    nun = nh * na
    right_mul = np.einsum("ijl,jy,ybk->iklb", h.comult, v, a.mult,
                          optimize=True).reshape(nun, nun)
    left_mul = np.einsum("ijl,ly,byk->ikjb", h.comult, v, a.mult,
                         optimize=True).reshape(nun, nun)
    absorb_r = np.einsum("ijl,lz,yzk->ikjy", h.comult, e, a.mult,
                         optimize=True).reshape(nun, nun)
    absorb_l = np.einsum("ijl,jy,yzk->iklz", h.comult, e, a.mult,
                         optimize=True).reshape(nun, nun)
    at_one = np.einsum("l,kb->klb", h.unit, identity(fld, na)).reshape(na, nun)
    eye = identity(fld, nun)
    big = np.concatenate([right_mul, left_mul, eye - absorb_r, eye - absorb_l,
                          at_one], axis=0)
    erow = e.reshape(nun)
    rhs = np.concatenate([erow, erow, zeros(fld, (nun,)), zeros(fld, (nun,)),
                          a.unit])
    x = solve(big, rhs, fld)
    if x is None:
        return None
    u = x.reshape(nh, na)
    cu = convolution_unit(h.coalgebra, a).matrix
    fully = (np.array_equal(convolution(LinMapHom(nh, na, v),
                                        LinMapHom(nh, na, u),
                                        h.coalgebra, a).matrix, cu)
             and np.array_equal(convolution(LinMapHom(nh, na, u),
                                            LinMapHom(nh, na, v),
                                            h.coalgebra, a).matrix, cu))
    return GaugePair(v, u, fully)


def gauge_action(pair: GaugePair, tpa: TwistedPartialAction) -> np.ndarray:
    """The conjugated action h . a = v(h_1)(h_2 . a)v'(h_3)."""
    h, a = tpa.hopf, tpa.alg
    s3 = split(h.coalgebra, 3)
    return np.einsum("ipqr,px,qay,xyA,rw,Awk->iak",
                     s3, pair.v, tpa.action, a.mult, pair.v_inv, a.mult,
                     optimize=True)


def gauge_cocycle(pair: GaugePair, tpa: TwistedPartialAction) -> np.ndarray:
    """The conjugated cocycle
    w(h, g) = v(h_1)(h_2 . v(g_1)) w(h_3, g_2) v'(h_4 g_3)."""
    h, a = tpa.hopf, tpa.alg
    s4 = split(h.coalgebra, 4)
    s3 = split(h.coalgebra, 3)
    return np.einsum("ipqrs,jabc,px,aA,qAy,xyB,rbz,BzC,sct,tw,CwD->ijD",
                     s4, s3, pair.v, pair.v, tpa.action, a.mult, tpa.cocycle,
                     a.mult, h.mult, pair.v_inv, a.mult, optimize=True)


def gauge_transform(pair: GaugePair, tpa: TwistedPartialAction) -> TwistedPartialAction:
    return TwistedPartialAction(tpa.hopf, tpa.alg,
                                gauge_action(pair, tpa),
                                gauge_cocycle(pair, tpa))


def verify_gauge_composition(outer: GaugePair, inner: GaugePair,
                             tpa: TwistedPartialAction) -> CheckReport:
    """Gauging by ``inner`` and then by ``outer`` is the same as gauging
    once by the convolution product outer * inner, whose weak inverse is
    inner' * outer'.

    Raises CompositeNotGauge when the convolution product fails to be a
    gauge for the action (its candidate inverse does not satisfy the
    weak-inverse equations).  Otherwise reports the comparison of the
    two-step and one-step transforms.
    """
    h, a = tpa.hopf, tpa.alg
    nh, na = h.dim, a.dim
    comp = convolution(LinMapHom(nh, na, outer.v), LinMapHom(nh, na, inner.v),
                       h.coalgebra, a).matrix
    cand = convolution(LinMapHom(nh, na, inner.v_inv),
                       LinMapHom(nh, na, outer.v_inv), h.coalgebra, a).matrix
    pair = weak_conv_inverse(comp, tpa)
    if pair is None:
        raise CompositeNotGauge(
            "the convolution product of the two gauges has no weak inverse")
    rb = ReportBuilder("gauge composition")
    rb.compare("composite_inverse_is_swapped_product", pair.v_inv, cand)
    step = gauge_transform(inner, tpa)
    two = gauge_transform(outer, step)
    one = gauge_transform(pair, tpa)
    rb.compare("composite_action_matches", one.action, two.action)
    rb.compare("composite_cocycle_matches", one.cocycle, two.cocycle)
    return rb.build()


def gauge_crossed_iso(pair: GaugePair, tpa: TwistedPartialAction,
                      original_cp: CrossedProductAlgebra | None = None,
                      gauged_cp: CrossedProductAlgebra | None = None):
    """The isomorphism from the crossed product of the gauged action to
    the crossed product of the original, class of a (x) h |->
    class of a v(h_1) (x) h_2.

    Returns (matrix, report).  The report checks multiplicativity, unit
    preservation, bijectivity, and that the companion map built from the
    weak inverse is a two-sided inverse.  A note records the verdict on
    the same formula read in the opposite direction, which fails in
    general.
    """
    h, a = tpa.hopf, tpa.alg
    fld = a.fld
    nh, na = h.dim, a.dim
    cp = original_cp if original_cp is not None else build_partial_crossed(tpa)
    gt = gauge_transform(pair, tpa)
    cpv = gauged_cp if gauged_cp is not None else build_partial_crossed(gt)
    rb = ReportBuilder("gauge isomorphism of crossed products")

    def induced(src, dst, f):
        amb = np.einsum("pqt,qx,ixm->ipmt", h.comult, f, a.mult,
                        optimize=True).reshape(na * nh, na * nh)
        mat = zeros(fld, (src.dim, dst.dim))
        for x in range(src.dim):
            c = coords_in(dst.basis, src.basis.rows[x] @ amb)
            if c is None:
                return None
            mat[x] = c
        return mat

    phi = induced(cpv, cp, pair.v)
    if phi is None:
        rb.require("lands_in_target_span", False)
        return zeros(fld, (cpv.dim, cp.dim)), rb.build()
    rb.require("lands_in_target_span", True)
    lhs = np.einsum("xym,ms->xys", cpv.algebra.mult, phi, optimize=True)
    rhs = np.einsum("xs,yt,stu->xyu", phi, phi, cp.algebra.mult, optimize=True)
    rb.compare("multiplicative", lhs, rhs)
    rb.compare("unital", (cpv.algebra.unit @ phi).reshape(1, -1),
               cp.algebra.unit.reshape(1, -1))
    rb.require("bijective",
               cpv.dim == cp.dim and rank(phi, fld) == cp.dim,
               lhs=(rank(phi, fld),), rhs=(cp.dim,))
    psi = induced(cp, cpv, pair.v_inv)
    if psi is None:
        rb.require("inverse_lands_in_source_span", False)
    else:
        rb.compare("inverse_after_map", phi @ psi, identity(fld, cpv.dim))
        rb.compare("map_after_inverse", psi @ phi, identity(fld, cp.dim))

    fwd = induced(cp, cpv, pair.v)
    if fwd is None:
        rb.note("the same formula read from the original crossed product "
                "does not even land in the gauged one")
    else:
        ok = np.array_equal(
            np.einsum("xym,ms->xys", cp.algebra.mult, fwd, optimize=True),
            np.einsum("xs,yt,stu->xyu", fwd, fwd, cpv.algebra.mult,
                      optimize=True))
        if not ok:
            rb.note("the same formula read from the original crossed product "
                    "is not multiplicative; only the stated direction is")
    return phi, rb.build()


def verify_equisatisfiability(tpa: TwistedPartialAction,
                              pair: GaugePair) -> CheckReport:
    """The crossed-product conditions hold for the original data exactly
    when they hold for the gauged data, identity by identity."""
    before = verify_crossed_conditions(tpa)
    after = verify_crossed_conditions(gauge_transform(pair, tpa))
    rb = ReportBuilder("gauge equisatisfiability")
    for name in ("cocycle_normalized_left", "cocycle_normalized_right",
                 "twisted_module", "cocycle_identity"):
        rb.require(f"{name}_agrees",
                   before.identity_passed(name) == after.identity_passed(name),
                   lhs=(before.identity_passed(name),),
                   rhs=(after.identity_passed(name),))
    return rb.build()
