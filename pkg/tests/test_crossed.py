"""Crossed products: structure constants, coaction, coinvariants and
the canonical Galois-type map.

The full multiplication table of the main fixture's crossed product was
worked out by hand in the ambient tensor square and is pinned below.
"""

import dataclasses

import numpy as np
import pytest

from hopfcross.errors import CoinvariantsMismatch
from hopfcross.fields import Field
from hopfcross.fixtures import (c3_partial, cocycle_pair, cyclic_table,
                                degenerate_swap, product_field_algebra,
                                trivial_partial)
from hopfcross.crossed import (balanced_tensor_square, base_image,
                               build_global_crossed, build_partial_crossed,
                               canonical_map, coinvariants, comodule_coaction,
                               verify_assoc_unital, verify_coaction,
                               verify_coinvariants_are_base, verify_crossed)
from hopfcross.hopf import group_algebra
from hopfcross.linalg import arr, eqarr, kron, zeros
from hopfcross.partial import GlobalTwistedAction

QQ = Field.rationals()
F5 = Field.prime(5)


def basis_vec(cp, i):
    v = zeros(cp.fld, (cp.dim,))
    v[i] = cp.fld.one()
    return v


def test_main_fixture_dimension_and_basis():
    cp = build_partial_crossed(c3_partial())
    assert cp.dim == 4
    # echelon basis of the span of a (x) (h . 1)h inside A (x) H,
    # ambient column index = base index * 3 + group power
    expect = arr(QQ, [
        [1, 0, 0, 0, 0, 0],   # u1 (x) 1
        [0, 0, 1, 0, 0, 0],   # u1 (x) g^2
        [0, 0, 0, 1, 0, 0],   # u2 (x) 1
        [0, 0, 0, 0, 1, 0],   # u2 (x) g
    ])
    assert eqarr(cp.basis.rows, expect)


def test_main_fixture_multiplication_table():
    cp = build_partial_crossed(c3_partial())
    nonzero = {
        (0, 0): 0, (0, 1): 1, (1, 2): 1, (1, 3): 0,
        (2, 2): 2, (2, 3): 3, (3, 0): 3, (3, 1): 2,
    }
    for i in range(4):
        for j in range(4):
            got = cp.multiply(basis_vec(cp, i), basis_vec(cp, j))
            want = zeros(QQ, (4,))
            if (i, j) in nonzero:
                want[nonzero[(i, j)]] = QQ.one()
            assert eqarr(got, want), f"product {i} * {j}"
    assert eqarr(cp.algebra.unit, arr(QQ, [1, 0, 1, 0]))


@pytest.mark.parametrize("tpa,dim", [
    (c3_partial(), 4),
    (cocycle_pair(1), 2),
    (cocycle_pair(5), 2),
    (trivial_partial(), 1),
    (degenerate_swap(), 1),
    (c3_partial(F5), 4),
])
def test_crossed_dimensions_and_axioms(tpa, dim):
    cp = build_partial_crossed(tpa)
    assert cp.dim == dim
    assert verify_assoc_unital(cp).passed
    assert verify_crossed(cp).passed
    assert verify_coaction(cp).passed


def test_square_root_presentation():
    # base field extended by a square root of lam: x * x = lam * 1
    lam = QQ.coerce(5)
    cp = build_partial_crossed(cocycle_pair(5))
    one, x = basis_vec(cp, 0), basis_vec(cp, 1)
    assert eqarr(cp.multiply(x, x), lam * one)
    assert eqarr(cp.multiply(one, x), x)


def test_global_crossed_with_trivial_data_is_tensor_product():
    h = group_algebra(QQ, cyclic_table(3))
    b = product_field_algebra(QQ, 2)
    act = np.empty((3, 2, 2), dtype=object)
    for i in range(3):
        act[i] = arr(QQ, [[1, 0], [0, 1]])
    u = np.empty((3, 3, 2), dtype=object)
    for i in range(3):
        for j in range(3):
            u[i, j] = b.unit
    cp = build_global_crossed(GlobalTwistedAction(h, b, act, u))
    assert cp.dim == 6
    for i in range(2):
        for hh in range(3):
            for j in range(2):
                for ll in range(3):
                    got = cp.algebra.mult[i * 3 + hh, j * 3 + ll]
                    assert eqarr(got, kron(b.mult[i, j], h.mult[hh, ll]))


def test_base_embedding_is_unital_and_injective():
    cp = build_partial_crossed(c3_partial())
    rep = verify_crossed(cp)
    assert rep.identity_passed("base_embedding_multiplicative")
    assert rep.identity_passed("base_embedding_unital")
    assert rep.identity_passed("base_embedding_injective")
    assert eqarr(cp.embed_base(c3_partial().alg.unit), cp.algebra.unit)


def test_to_ambient_of_basis_vectors():
    cp = build_partial_crossed(c3_partial())
    for i in range(cp.dim):
        assert eqarr(cp.to_ambient(basis_vec(cp, i)), cp.basis.rows[i])


@pytest.mark.parametrize("tpa,coin_dim", [
    (c3_partial(), 2),
    (cocycle_pair(1), 1),
    (degenerate_swap(), 1),
])
def test_coinvariants_are_the_embedded_base(tpa, coin_dim):
    cp = build_partial_crossed(tpa)
    coin = coinvariants(cp)
    assert coin.dim == coin_dim
    assert coin == base_image(cp)
    assert verify_coinvariants_are_base(cp).passed


def test_comodule_coaction_bundle():
    cp = build_partial_crossed(c3_partial())
    rho, coin, rep = comodule_coaction(cp)
    assert rho.matrix.shape == (4, 12)
    assert coin.dim == 2
    assert rep.passed


def test_balanced_tensor_square_dims():
    assert balanced_tensor_square(build_partial_crossed(c3_partial())).dim == 8
    assert balanced_tensor_square(build_partial_crossed(cocycle_pair(1))).dim == 4
    assert balanced_tensor_square(build_partial_crossed(degenerate_swap())).dim == 1


def test_canonical_map_bijective_for_square_root_pair():
    res, mat, q = canonical_map(build_partial_crossed(cocycle_pair(1)))
    assert res.balanced
    assert (res.quotient_dim, res.target_dim, res.rank) == (4, 4, 4)
    assert res.bijective


def test_canonical_map_injective_not_surjective_for_main_fixture():
    res, mat, q = canonical_map(build_partial_crossed(c3_partial()))
    assert res.balanced
    assert (res.quotient_dim, res.target_dim, res.rank) == (8, 12, 8)
    assert res.injective and not res.surjective


def test_canonical_map_degenerate_case():
    res, mat, q = canonical_map(build_partial_crossed(degenerate_swap()))
    assert (res.quotient_dim, res.target_dim, res.rank) == (1, 2, 1)
    assert res.injective and not res.surjective


def test_canonical_map_rejects_doctored_coaction():
    cp = build_partial_crossed(cocycle_pair(1))
    # pretend every element is coinvariant
    fake = zeros(QQ, (2, 4))
    for r in range(2):
        fake[r] = kron(basis_vec(cp, r), cp.hopf.unit)
    doctored = dataclasses.replace(cp, coaction=fake)
    with pytest.raises(CoinvariantsMismatch):
        canonical_map(doctored)
