"""Morita context between a partial crossed product and the crossed
product of its enveloping action.

Write R for the partial crossed product and S for the global one.  The
embedding sends the class of a (x) h to theta(a) (x) h; its image is a
(non-unital in general) subalgebra of S.  The connecting bimodules live
inside S:

* M is the span of theta(a) (x) h, a right S-module and a left R-module
  through the embedding;
* N is the span of (h_1 > theta(a)) (x) h_2 with > the global action, a
  left S-module and a right R-module.

Both pairings are multiplication in S: one lands in S, the other must
land in the embedded copy of R.  Everything below is verified on basis
elements; surjectivity of the pairings is computed and reported but not
folded into pass/fail, since it genuinely fails on some inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .checks import CheckReport, ReportBuilder
from .crossed import (CrossedProductAlgebra, GlobalCrossedProduct,
                      build_global_crossed, build_partial_crossed)
from .globalize import EnvelopingAction
from .linalg import SubspaceBasis, coords_in, identity, kron, rank, span, zeros


def phi_embed(env: EnvelopingAction,
              partial_cp: CrossedProductAlgebra | None = None,
              global_cp: GlobalCrossedProduct | None = None):
    """The algebra map from the partial crossed product into the global
    one induced by the base embedding, as a matrix on the chosen bases.

    Returns (matrix, report); the report checks multiplicativity,
    preservation of the unit, and injectivity.
    """
    tpa = env.source
    r = partial_cp if partial_cp is not None else build_partial_crossed(tpa)
    s = global_cp if global_cp is not None else build_global_crossed(env.glob)
    fld = tpa.fld
    nh = tpa.hopf.dim
    amb = kron(env.theta, identity(fld, nh))
    phi = zeros(fld, (r.dim, s.dim))
    rb = ReportBuilder("crossed product embedding")
    for x in range(r.dim):
        c = coords_in(s.basis, r.basis.rows[x] @ amb)
        if c is None:
            rb.require("lands_in_global_span", False, index=(x,))
            return phi, rb.build()
        phi[x] = c
    rb.require("lands_in_global_span", True)
    lhs = np.einsum("xym,ms->xys", r.algebra.mult, phi, optimize=True)
    rhs = np.einsum("xs,yt,stu->xyu", phi, phi, s.algebra.mult, optimize=True)
    rb.compare("multiplicative", lhs, rhs)
    # the embedding is not unital: the base unit goes to the corner
    # idempotent tensor the Hopf unit, a local unit on the image
    one = r.algebra.unit @ phi
    rb.compare("unit_maps_to_idempotent",
               s.multiply(one, one).reshape(1, -1), one.reshape(1, -1))
    lhs = np.einsum("s,xt,stu->xu", one, phi, s.algebra.mult, optimize=True)
    rb.compare("unit_local_left", lhs, phi)
    rhs = np.einsum("xt,s,tsu->xu", phi, one, s.algebra.mult, optimize=True)
    rb.compare("unit_local_right", rhs, phi)
    rb.require("injective", rank(phi, fld) == r.dim,
               lhs=(rank(phi, fld),), rhs=(r.dim,))
    return phi, rb.build()


def build_M(env: EnvelopingAction,
            global_cp: GlobalCrossedProduct | None = None) -> SubspaceBasis:
    """The span of theta(a) (x) h inside the global crossed product."""
    s = global_cp if global_cp is not None else build_global_crossed(env.glob)
    nh = env.source.hopf.dim
    fld = env.source.fld
    amb_rows = kron(env.theta, identity(fld, nh))
    rows = _to_sub_coords(s, amb_rows, "generator of the first bimodule")
    return span(rows, s.dim, fld)


def build_N(env: EnvelopingAction,
            global_cp: GlobalCrossedProduct | None = None) -> SubspaceBasis:
    """The span of (h_1 > theta(a)) (x) h_2 inside the global crossed
    product, with > the global action."""
    s = global_cp if global_cp is not None else build_global_crossed(env.glob)
    tpa = env.source
    fld = tpa.fld
    nh, nb = tpa.hopf.dim, env.glob.alg.dim
    amb_rows = np.einsum("iB,pqr,qBC->ipCr", env.theta, tpa.hopf.comult,
                         env.glob.action, optimize=True)
    amb_rows = amb_rows.reshape(tpa.alg.dim * nh, nb * nh)
    rows = _to_sub_coords(s, amb_rows, "generator of the second bimodule")
    return span(rows, s.dim, fld)


def _to_sub_coords(s: CrossedProductAlgebra, amb_rows, what):
    out = []
    for i, row in enumerate(amb_rows):
        c = coords_in(s.basis, row)
        if c is None:
            raise ValueError(f"{what} {i} is outside the crossed product span")
        out.append(c)
    return np.array(out, dtype=object)


@dataclass(frozen=True)
class MoritaContextData:
    """The two rings, the connecting matrix, and the two bimodules, all
    expressed on the basis of the global crossed product."""

    env: EnvelopingAction
    partial_cp: CrossedProductAlgebra
    global_cp: GlobalCrossedProduct
    phi: np.ndarray                # (dim R, dim S)
    phi_report: CheckReport
    bimodule_m: SubspaceBasis
    bimodule_n: SubspaceBasis


def morita_context(env: EnvelopingAction) -> MoritaContextData:
    r = build_partial_crossed(env.source)
    s = build_global_crossed(env.glob)
    phi, prep = phi_embed(env, r, s)
    return MoritaContextData(env, r, s, phi, prep,
                             build_M(env, s), build_N(env, s))


def _prod(s: CrossedProductAlgebra, a, b):
    """All pairwise products of the rows of a and b; the last axis is
    the output coordinate."""
    return np.einsum("ai,bj,ijk->abk", a, b, s.algebra.mult, optimize=True)


def _rmul(s: CrossedProductAlgebra, ab, c):
    """Right-multiply a table of pairwise products by a third family."""
    return np.einsum("abk,cj,kjm->abcm", ab, c, s.algebra.mult, optimize=True)


def _lmul(s: CrossedProductAlgebra, a, bc):
    """Left-multiply a table of pairwise products by a first family."""
    return np.einsum("ai,bck,ikm->abcm", a, bc, s.algebra.mult, optimize=True)


def verify_module_structures(ctx: MoritaContextData) -> CheckReport:
    """Closure of each bimodule under both ring actions, the unit laws,
    and compatibility of the two actions on each bimodule."""
    rb = ReportBuilder("bimodule structures")
    rb.absorb(ctx.phi_report, "embedding.")
    s = ctx.global_cp
    fld = s.fld
    m, n = ctx.bimodule_m, ctx.bimodule_n
    s_eye = identity(fld, s.dim)
    r_img = ctx.phi

    def closed(name, prods, sub):
        ok = True
        p, q, _ = prods.shape
        for a in range(p):
            for b in range(q):
                if coords_in(sub, prods[a, b]) is None:
                    ok = False
                    rb.require(name, False, index=(a, b),
                               lhs=tuple(prods[a, b]),
                               rhs=("inside the bimodule",))
        if ok:
            rb.require(name, True)

    ms = _prod(s, m.rows, s_eye)
    rm = _prod(s, r_img, m.rows)
    sn = _prod(s, s_eye, n.rows)
    nr = _prod(s, n.rows, r_img)
    closed("m_closed_right_ring", ms, m)
    closed("m_closed_left_embedded", rm, m)
    closed("n_closed_left_ring", sn, n)
    closed("n_closed_right_embedded", nr, n)

    one_r = ctx.partial_cp.algebra.unit @ ctx.phi
    one_s = s.algebra.unit
    mult = s.algebra.mult
    rb.compare("m_unit_left_embedded",
               np.einsum("i,bj,ijk->bk", one_r, m.rows, mult, optimize=True),
               m.rows)
    rb.compare("m_unit_right_ring",
               np.einsum("bi,j,ijk->bk", m.rows, one_s, mult, optimize=True),
               m.rows)
    rb.compare("n_unit_left_ring",
               np.einsum("i,bj,ijk->bk", one_s, n.rows, mult, optimize=True),
               n.rows)
    rb.compare("n_unit_right_embedded",
               np.einsum("bi,j,ijk->bk", n.rows, one_r, mult, optimize=True),
               n.rows)

    rb.compare("m_actions_compatible",
               _rmul(s, rm, s_eye), _lmul(s, r_img, ms))
    rb.compare("n_actions_compatible",
               _rmul(s, sn, r_img), _lmul(s, s_eye, nr))
    return rb.build()


@dataclass(frozen=True)
class MoritaPairingResult:
    report: CheckReport
    sigma_rank: int
    tau_rank: int
    sigma_surjective: bool
    tau_surjective: bool


def verify_morita_pairings(ctx: MoritaContextData) -> MoritaPairingResult:
    """The two pairings of the context: n (x) m |-> nm into the global
    ring and m (x) n |-> mn into the embedded partial ring.

    Verifies balancedness over the respective rings, that the second
    pairing lands in the embedded copy, and the two mixed associativity
    laws.  Surjectivity of each pairing is computed from the rank of the
    span of basis products and reported without affecting pass/fail.
    """
    rb = ReportBuilder("context pairings")
    s = ctx.global_cp
    fld = s.fld
    m, n = ctx.bimodule_m, ctx.bimodule_n
    phi_image = span(ctx.phi, s.dim, fld)
    r_img = ctx.phi
    s_eye = identity(fld, s.dim)

    mn = _prod(s, m.rows, n.rows)
    nm = _prod(s, n.rows, m.rows)
    ok = True
    for i in range(m.dim):
        for j in range(n.dim):
            if coords_in(phi_image, mn[i, j]) is None:
                ok = False
                rb.require("tau_lands_in_embedded", False, index=(i, j),
                           lhs=tuple(mn[i, j]),
                           rhs=("inside the embedded ring",))
    if ok:
        rb.require("tau_lands_in_embedded", True)

    nr = _prod(s, n.rows, r_img)
    rm = _prod(s, r_img, m.rows)
    ms = _prod(s, m.rows, s_eye)
    sn = _prod(s, s_eye, n.rows)
    rb.compare("sigma_balanced_over_embedded",
               _rmul(s, nr, m.rows), _lmul(s, n.rows, rm))
    rb.compare("tau_balanced_over_ring",
               _rmul(s, ms, n.rows), _lmul(s, m.rows, sn))
    rb.compare("mixed_associativity_ring_side",
               _rmul(s, nm, n.rows), _lmul(s, n.rows, mn))
    rb.compare("mixed_associativity_embedded_side",
               _rmul(s, mn, m.rows), _lmul(s, m.rows, nm))

    sigma_rank = span(nm.reshape(-1, s.dim), s.dim, fld).dim
    tau_rank = span(mn.reshape(-1, s.dim), s.dim, fld).dim
    sigma_surj = sigma_rank == s.dim
    tau_surj = tau_rank == phi_image.dim
    rb.note(f"first pairing spans {sigma_rank} of {s.dim} ring dimensions"
            + (" (surjective)" if sigma_surj else " (not surjective)"))
    rb.note(f"second pairing spans {tau_rank} of {phi_image.dim} embedded "
            "dimensions" + (" (surjective)" if tau_surj else " (not surjective)"))
    return MoritaPairingResult(rb.build(), sigma_rank, tau_rank,
                               sigma_surj, tau_surj)
