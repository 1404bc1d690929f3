"""Twisted partial actions of a Hopf algebra on a unital algebra, their
global counterparts, and the passage from a global action to the partial
action it induces on a central idempotent corner.

A twisted partial action is stored as two tensors over the base field:

* ``action[i, j, k]``: coefficient of ``a_k`` in ``h_i . a_j``;
* ``cocycle[i, j, :]``: the algebra element ``w(h_i, h_j)``.

The verifiers never assume anything; each identity is expanded on all
basis tuples and failures are listed per tuple.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .checks import CheckReport, ReportBuilder
from .errors import ClosureViolation, NotCentralIdempotent, PreconditionError
from .hopf import (AlgebraData, HopfAlgebraData, LinMapHom,
                   convolution_central_violations, split, tensor_square_coalgebra)
from .linalg import SubspaceBasis, coords_in, identity, solve, span, zeros


@dataclass(frozen=True)
class TwistedPartialAction:
    hopf: HopfAlgebraData
    alg: AlgebraData
    action: np.ndarray        # (dim H, dim A, dim A)
    cocycle: np.ndarray       # (dim H, dim H, dim A)

    def __post_init__(self):
        nh, na = self.hopf.dim, self.alg.dim
        assert self.action.shape == (nh, na, na)
        assert self.cocycle.shape == (nh, nh, na)

    @property
    def fld(self):
        return self.alg.fld

    def act(self, h, a):
        return np.einsum("i,j,ijk->k", h, a, self.action)


@dataclass(frozen=True)
class GlobalTwistedAction:
    """An everywhere-defined twisted action: the Hopf algebra measures the
    whole algebra and the twist is a plain convolution cocycle."""

    hopf: HopfAlgebraData
    alg: AlgebraData
    action: np.ndarray        # (dim H, dim B, dim B)
    twist: np.ndarray         # (dim H, dim H, dim B)

    def __post_init__(self):
        nh, nb = self.hopf.dim, self.alg.dim
        assert self.action.shape == (nh, nb, nb)
        assert self.twist.shape == (nh, nh, nb)

    @property
    def fld(self):
        return self.alg.fld

    def act(self, h, b):
        return np.einsum("i,j,ijk->k", h, b, self.action)


def unit_translates(tpa) -> np.ndarray:
    """The matrix of h |-> h . 1, one row per Hopf basis element.

    Works for both partial and global data (for global data the rows are
    counit multiples of the unit whenever the axioms hold).
    """
    return np.einsum("ija,j->ia", tpa.action, tpa.alg.unit)


def unit_translate_map(tpa) -> tuple[LinMapHom, CheckReport]:
    """h |-> h . 1 as a map H -> A, together with a report on whether it
    is central in the convolution algebra Hom(H, A), a standing
    assumption of the gauge theory."""
    e = unit_translates(tpa)
    f = LinMapHom(tpa.hopf.dim, tpa.alg.dim, e)
    rb = ReportBuilder("unit translate map")
    viols = convolution_central_violations(f, tpa.hopf.coalgebra, tpa.alg)
    for idx, lhs, rhs in viols:
        rb.require("central_in_convolution", False, index=idx, lhs=lhs, rhs=rhs)
    if not viols:
        rb.require("central_in_convolution", True)
    return f, rb.build()


# ---------------------------------------------------------------------------
# shared identity kernels


def _twisted_module_sides(hopf, action, cocycle, mult_a):
    lhs = np.einsum("ipq,jrs,rax,pxy,qsz,yzk->ijak",
                    hopf.comult, hopf.comult, action, action, cocycle, mult_a,
                    optimize=True)
    rhs = np.einsum("ipq,jrs,pry,qst,taz,yzk->ijak",
                    hopf.comult, hopf.comult, cocycle, hopf.mult, action, mult_a,
                    optimize=True)
    return lhs, rhs


def _cocycle_identity_sides(hopf, action, cocycle, mult_a):
    lhs = np.einsum("ipq,jrs,nuv,rux,pxy,svt,qtz,yzk->ijnk",
                    hopf.comult, hopf.comult, hopf.comult,
                    cocycle, action, hopf.mult, cocycle, mult_a,
                    optimize=True)
    rhs = np.einsum("ipq,jrs,pry,qst,tnz,yzk->ijnk",
                    hopf.comult, hopf.comult, cocycle, hopf.mult, cocycle, mult_a,
                    optimize=True)
    return lhs, rhs


# ---------------------------------------------------------------------------
# partial-side verifiers


def verify_partial_module_algebra(hopf: HopfAlgebraData, alg: AlgebraData,
                                  action: np.ndarray) -> CheckReport:
    """Untwisted partial action axioms: the Hopf unit acts as the
    identity, the action splits over products, and the composition rule
    h . (g . a) = (h_1 . 1)((h_2 g) . a)."""
    rb = ReportBuilder("partial module algebra")
    rb.compare("unit_acts_trivially",
               np.einsum("i,ijk->jk", hopf.unit, action),
               identity(alg.fld, alg.dim))
    lhs = np.einsum("abm,imk->iabk", alg.mult, action, optimize=True)
    rhs = np.einsum("ipq,pax,qby,xyk->iabk", hopf.comult, action, action,
                    alg.mult, optimize=True)
    rb.compare("action_multiplicative", lhs, rhs)
    e = np.einsum("ija,j->ia", action, alg.unit)
    lhs = np.einsum("gax,ixk->igak", action, action, optimize=True)
    rhs = np.einsum("ipq,py,qgt,tak,ykz->igaz", hopf.comult, e, hopf.mult,
                    action, alg.mult, optimize=True)
    rb.compare("partial_composition", lhs, rhs)
    return rb.build()


def verify_twisted_partial(tpa: TwistedPartialAction) -> CheckReport:
    """The defining axioms of a twisted partial action.

    Checked per basis tuple: the Hopf unit acts as the identity, the
    action splits over products through the coproduct, the twisted
    module identity, and absorption of the cocycle by its own right
    translate.
    """
    rb = ReportBuilder("twisted partial action")
    h, a = tpa.hopf, tpa.alg
    rb.compare("unit_acts_trivially",
               np.einsum("i,ijk->jk", h.unit, tpa.action),
               identity(a.fld, a.dim))
    lhs = np.einsum("abm,imk->iabk", a.mult, tpa.action, optimize=True)
    rhs = np.einsum("ipq,pax,qby,xyk->iabk", h.comult, tpa.action, tpa.action,
                    a.mult, optimize=True)
    rb.compare("action_multiplicative", lhs, rhs)
    lhs, rhs = _twisted_module_sides(h, tpa.action, tpa.cocycle, a.mult)
    rb.compare("twisted_module", lhs, rhs)
    e = unit_translates(tpa)
    rhs = np.einsum("ipq,jrs,pry,qst,tz,yzk->ijk",
                    h.comult, h.comult, tpa.cocycle, h.mult, e, a.mult,
                    optimize=True)
    rb.compare("cocycle_right_absorption", tpa.cocycle, rhs)
    return rb.build()


def verify_absorption(tpa: TwistedPartialAction) -> CheckReport:
    """Two consequences of the axioms, checked directly: the cocycle
    absorbs a nested action on the unit from the left, and absorbs a
    plain action on the unit from the left."""
    rb = ReportBuilder("cocycle absorption")
    h, a = tpa.hopf, tpa.alg
    e = unit_translates(tpa)
    rhs = np.einsum("ipq,jrs,rx,pxy,qsz,yzk->ijk",
                    h.comult, h.comult, e, tpa.action, tpa.cocycle, a.mult,
                    optimize=True)
    rb.compare("absorption_nested", tpa.cocycle, rhs)
    rhs = np.einsum("ipq,py,qjz,yzk->ijk", h.comult, e, tpa.cocycle, a.mult,
                    optimize=True)
    rb.compare("absorption_left", tpa.cocycle, rhs)
    return rb.build()


def verify_crossed_conditions(tpa: TwistedPartialAction) -> CheckReport:
    """The conditions under which the crossed product is associative and
    unital: cocycle normalization, the twisted module identity, and the
    partial 2-cocycle identity."""
    rb = ReportBuilder("crossed product conditions")
    h, a = tpa.hopf, tpa.alg
    e = unit_translates(tpa)
    rb.compare("cocycle_normalized_left",
               np.einsum("i,ijk->jk", h.unit, tpa.cocycle), e)
    rb.compare("cocycle_normalized_right",
               np.einsum("j,ijk->ik", h.unit, tpa.cocycle), e)
    lhs, rhs = _twisted_module_sides(h, tpa.action, tpa.cocycle, a.mult)
    rb.compare("twisted_module", lhs, rhs)
    lhs, rhs = _cocycle_identity_sides(h, tpa.action, tpa.cocycle, a.mult)
    rb.compare("cocycle_identity", lhs, rhs)
    return rb.build()


def trivial_cocycle_report(tpa: TwistedPartialAction) -> CheckReport:
    """Whether the cocycle is the one induced by the action alone, in
    both equivalent phrasings: w(h, l) = h . (l . 1) and
    w(h, l) = (h_1 . 1)((h_2 l) . 1)."""
    rb = ReportBuilder("trivial cocycle")
    h, a = tpa.hopf, tpa.alg
    e = unit_translates(tpa)
    rb.compare("trivial_cocycle_nested",
               tpa.cocycle,
               np.einsum("jx,ixk->ijk", e, tpa.action))
    rb.compare("trivial_cocycle_product",
               tpa.cocycle,
               np.einsum("ipq,py,qjt,tz,yzk->ijk", h.comult, e, h.mult, e,
                         a.mult, optimize=True))
    return rb.build()


def is_trivial_cocycle(tpa: TwistedPartialAction) -> bool:
    return trivial_cocycle_report(tpa).passed


# ---------------------------------------------------------------------------
# global-side verifier and induction


def verify_global(g: GlobalTwistedAction) -> CheckReport:
    """Axioms of a global twisted action: unit action, multiplicativity,
    preservation of the unit, twist normalization, the module
    compatibility, and the 2-cocycle identity for the twist."""
    rb = ReportBuilder("global twisted action")
    h, b = g.hopf, g.alg
    rb.compare("unit_acts_trivially",
               np.einsum("i,ijk->jk", h.unit, g.action),
               identity(b.fld, b.dim))
    lhs = np.einsum("abm,imk->iabk", b.mult, g.action, optimize=True)
    rhs = np.einsum("ipq,pax,qby,xyk->iabk", h.comult, g.action, g.action,
                    b.mult, optimize=True)
    rb.compare("action_multiplicative", lhs, rhs)
    rb.compare("unit_preserved",
               np.einsum("ija,j->ia", g.action, b.unit),
               np.einsum("i,a->ia", h.counit, b.unit))
    eps_unit = np.einsum("i,a->ia", h.counit, b.unit)
    rb.compare("twist_normalized_left",
               np.einsum("i,ijk->jk", h.unit, g.twist), eps_unit)
    rb.compare("twist_normalized_right",
               np.einsum("j,ijk->ik", h.unit, g.twist), eps_unit)
    lhs, rhs = _twisted_module_sides(h, g.action, g.twist, b.mult)
    rb.compare("twisted_module", lhs, rhs)
    lhs, rhs = _cocycle_identity_sides(h, g.action, g.twist, b.mult)
    rb.compare("twist_cocycle_identity", lhs, rhs)
    return rb.build()


def central_idempotent_report(alg: AlgebraData, e: np.ndarray) -> CheckReport:
    rb = ReportBuilder("central idempotent")
    rb.compare("idempotent", alg.mul(e, e).reshape(1, -1), e.reshape(1, -1))
    lhs = np.einsum("x,xjk->jk", e, alg.mult)
    rhs = np.einsum("x,jxk->jk", e, alg.mult)
    rb.compare("central", lhs, rhs)
    return rb.build()


def corner_twist(g: GlobalTwistedAction, e: np.ndarray) -> np.ndarray:
    """The twist the corner of e inherits from a global twisted action:
    (h_1 . e) u(h_2, l_1) ((h_3 l_2) . e) with h . b = e (h > b),
    returned in ambient coordinates as a (dim H, dim H, dim B) tensor.
    """
    b = g.alg
    ea = np.einsum("pjb,j->pb", g.action, e)
    ea = np.einsum("x,pb,xbc->pc", e, ea, b.mult)
    s3 = split(g.hopf.coalgebra, 3)
    return np.einsum("ipqr,juv,rvt,py,quz,yzw,tx,wxc->ijc",
                     s3, g.hopf.comult, g.hopf.mult,
                     ea, g.twist, b.mult, ea, b.mult, optimize=True)


@dataclass(frozen=True)
class InducedPartialAction:
    """A partial action cut out of a global one by a central idempotent.

    ``carrier`` embeds the corner subalgebra back into the ambient
    algebra; ``tpa`` is the induced twisted partial action on it.
    """

    tpa: TwistedPartialAction
    carrier: SubspaceBasis
    idempotent: np.ndarray


def induce_partial(g: GlobalTwistedAction, e: np.ndarray,
                   check: bool = True) -> InducedPartialAction:
    """Restrict a global twisted action to the corner of a central
    idempotent e: the corner algebra is eB, the partial action is
    h . a = e (h > a), and the partial cocycle is
    (h_1 . e) u(h_2, l_1) ((h_3 l_2) . e).

    Raises NotCentralIdempotent if e is not a central idempotent, and
    ClosureViolation if some induced value escapes the corner (which
    cannot happen when the global axioms hold).  With ``check`` the
    result is also run through verify_twisted_partial.
    """
    b = g.alg
    fld = b.fld
    cr = central_idempotent_report(b, e)
    if not cr.passed:
        raise NotCentralIdempotent(
            "corner generator is not a central idempotent: " + cr.summary())
    rows = np.einsum("i,ijk->jk", e, b.mult).T  # row j = e * b_j
    carrier = span(rows, b.dim, fld)
    na = carrier.dim
    sect = carrier.rows

    def corner_coords(vec, what):
        c = coords_in(carrier, vec)
        if c is None:
            raise ClosureViolation(f"{what} is not inside the corner subalgebra")
        return c

    unit_a = corner_coords(e, "the idempotent itself")
    mult_a = zeros(fld, (na, na, na))
    for i in range(na):
        for j in range(na):
            mult_a[i, j] = corner_coords(b.mul(sect[i], sect[j]),
                                         f"product of corner basis {i}, {j}")
    alg_a = AlgebraData(fld, na, mult_a, unit_a)

    nh = g.hopf.dim
    acted = np.einsum("jb,pbc->pjc", sect, g.action)  # h_p > (corner basis j)
    action_a = zeros(fld, (nh, na, na))
    for p in range(nh):
        for j in range(na):
            v = np.einsum("x,b,xbc->c", e, acted[p, j], b.mult)
            action_a[p, j] = corner_coords(v, f"induced action at ({p}, {j})")

    omega_b = corner_twist(g, e)
    cocycle_a = zeros(fld, (nh, nh, na))
    for i in range(nh):
        for j in range(nh):
            cocycle_a[i, j] = corner_coords(omega_b[i, j],
                                            f"induced cocycle at ({i}, {j})")
    tpa = TwistedPartialAction(g.hopf, alg_a, action_a, cocycle_a)
    if check:
        rep = verify_twisted_partial(tpa)
        if not rep.passed:
            raise PreconditionError(
                "induced data fails the partial axioms: " + rep.summary())
    return InducedPartialAction(tpa, carrier, np.asarray(e))


# ---------------------------------------------------------------------------
# symmetry: convolution invertibility of the cocycle inside its corner


@dataclass(frozen=True)
class CocycleInverse:
    exists: bool
    inverse: np.ndarray | None    # (dim H, dim H, dim A) when it exists
    report: CheckReport


def verify_symmetric(tpa: TwistedPartialAction) -> CocycleInverse:
    """Symmetry of a twisted partial action: the cocycle must be
    convolution-invertible inside the corner ideal of Hom(H (x) H, A)
    whose local unit is f1 * f2, where f1(h, k) = (h . 1) eps(k) and
    f2(h, k) = (hk) . 1.

    Checks, in order: centrality of f1 and f2 against the spanning set
    of the convolution algebra; the factorization
    h . (k . 1) = (h_1 . 1)((h_2 k) . 1); then solves for an inverse w'
    with w * w' = w' * w = f1 * f2 and the ideal-membership constraints
    w' = (f1 * f2) * w' = w' * (f1 * f2) stacked into the same linear
    system.  The input is not assumed to satisfy any axiom.
    """
    h, a = tpa.hopf, tpa.alg
    fld = a.fld
    nh, na = h.dim, a.dim
    c2 = tensor_square_coalgebra(h.coalgebra)
    n2 = nh * nh
    e = unit_translates(tpa)
    rb = ReportBuilder("symmetric twisted partial action")

    f1 = np.einsum("iy,j->ijy", e, h.counit).reshape(n2, na)
    f2 = np.einsum("ijt,ty->ijy", h.mult, e).reshape(n2, na)
    for name, f in (("unit_factor_central", f1), ("product_factor_central", f2)):
        viols = convolution_central_violations(LinMapHom(n2, na, f), c2, a)
        for idx, lhs, rhs in viols:
            rb.require(name, False, index=idx, lhs=lhs, rhs=rhs)
        if not viols:
            rb.require(name, True)

    lhs3 = np.einsum("jy,iyk->ijk", e, tpa.action)
    rhs3 = np.einsum("ipq,py,qjt,tz,yzk->ijk", h.comult, e, h.mult, e, a.mult,
                     optimize=True)
    rb.compare("unit_action_factorizes", lhs3, rhs3)

    def conv(x, y):
        return np.einsum("ipr,py,rz,yzc->ic", c2.comult, x, y, a.mult,
                         optimize=True)

    corner = conv(f1, f2)
    w = tpa.cocycle.reshape(n2, na)
    nun = n2 * na
    left_by = lambda f: np.einsum("ipr,py,yzc->icrz", c2.comult, f, a.mult,
                                  optimize=True).reshape(nun, nun)
    right_by = lambda f: np.einsum("ipr,rz,yzc->icpy", c2.comult, f, a.mult,
                                   optimize=True).reshape(nun, nun)
    eye = identity(fld, nun)
    big = np.concatenate([
        left_by(w),
        right_by(w),
        eye - left_by(corner),
        eye - right_by(corner),
    ], axis=0)
    rhs = np.concatenate([corner.reshape(nun), corner.reshape(nun),
                          zeros(fld, (nun,)), zeros(fld, (nun,))])
    x = solve(big, rhs, fld)
    if x is None:
        rb.require("inverse_exists", False,
                   lhs=("no solution",), rhs=("two-sided corner inverse",))
        return CocycleInverse(False, None, rb.build())
    rb.require("inverse_exists", True)
    wp = x.reshape(n2, na)
    rb.compare("left_inverse", conv(w, wp), corner)
    rb.compare("right_inverse", conv(wp, w), corner)
    rb.compare("ideal_member_left", conv(corner, wp), wp)
    rb.compare("ideal_member_right", conv(wp, corner), wp)
    rep = rb.build()
    return CocycleInverse(rep.passed, wp.reshape(nh, nh, na), rep)
