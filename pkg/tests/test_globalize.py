"""Enveloping actions: construction, verification, and the exact
round trip back through the corner restriction.

The enveloping algebra of the main fixture is three orthogonal
idempotents permuted cyclically; its multiplication table and the
embedding matrix are pinned from a hand computation.
"""

import dataclasses

import numpy as np
import pytest

from hopfcross.errors import HopfcrossError, PreconditionError
from hopfcross.fields import Field
from hopfcross.fixtures import (c3_partial, cocycle_pair, cyclic_table,
                                degenerate_swap, product_field_algebra,
                                sym3_table)
from hopfcross.globalize import (EnvelopingAction, globalize_group_partial,
                                 verify_enveloping, verify_induced_matches)
from hopfcross.hopf import dual_hopf, group_algebra
from hopfcross.linalg import arr, eqarr, identity, span, zeros
from hopfcross.partial import (GlobalTwistedAction, TwistedPartialAction,
                               induce_partial)

QQ = Field.rationals()
F5 = Field.prime(5)


def test_main_fixture_enveloping_structure(c3_env):
    env = c3_env
    # ambient = functions from the group to the base, carrier = the
    # span of the translated embeddings, glob.alg = that span as an
    # algebra in its own right
    assert env.ambient.dim == 6
    assert env.carrier.dim == 3
    assert env.glob.alg.dim == 3
    # three orthogonal idempotents summing to the unit
    b = env.glob.alg
    for i in range(3):
        for j in range(3):
            e_i = identity(QQ, 3)[i]
            e_j = identity(QQ, 3)[j]
            expect = e_i if i == j else zeros(QQ, (3,))
            assert eqarr(b.mul(e_i, e_j), expect)
    assert eqarr(b.unit, arr(QQ, [1, 1, 1]))
    # the group acts by cyclically shifting the idempotents
    for g in range(3):
        m = zeros(QQ, (3, 3))
        for i in range(3):
            m[i, (i + g) % 3] = QQ.one()
        assert eqarr(env.glob.action[g], m)
    assert eqarr(env.theta, arr(QQ, [[1, 0, 0], [0, 1, 0]]))
    assert eqarr(env.theta_one, arr(QQ, [1, 1, 0]))


def test_main_fixture_carrier_inside_function_space(c3_env):
    # ambient functions G -> A, column index g * dim(A) + a
    expect = arr(QQ, [
        [1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [0, 0, 1, 0, 0, 1],
    ])
    assert eqarr(c3_env.carrier.rows, expect)


def test_main_fixture_enveloping_passes(c3_env):
    assert verify_enveloping(c3_env).passed
    assert verify_induced_matches(c3_env).passed


def test_round_trip_recovers_source_exactly(c3_env):
    ind = induce_partial(c3_env.glob, c3_env.theta_one)
    src = c3_partial()
    assert eqarr(ind.tpa.action, src.action)
    assert eqarr(ind.tpa.cocycle, src.cocycle)


def test_degenerate_swap_globalizes_to_two_blocks():
    env = globalize_group_partial(degenerate_swap())
    assert env.glob.alg.dim == 2
    assert eqarr(env.theta, arr(QQ, [[1, 0]]))
    assert eqarr(env.glob.action[1], arr(QQ, [[0, 1], [1, 0]]))
    assert verify_enveloping(env).passed
    assert verify_induced_matches(env).passed


def test_globalization_over_prime_field():
    env = globalize_group_partial(c3_partial(F5))
    assert env.glob.alg.dim == 3
    assert verify_enveloping(env).passed
    assert verify_induced_matches(env).passed


def test_already_global_data_is_its_own_envelope():
    h = group_algebra(QQ, cyclic_table(3))
    b = product_field_algebra(QQ, 3)
    act = np.empty((3, 3, 3), dtype=object)
    for g in range(3):
        m = zeros(QQ, (3, 3))
        for i in range(3):
            m[i, (i + g) % 3] = QQ.one()
        act[g] = m
    u = np.empty((3, 3, 3), dtype=object)
    for i in range(3):
        for j in range(3):
            u[i, j] = b.unit
    glob = GlobalTwistedAction(h, b, act, u)
    src = induce_partial(glob, b.unit).tpa
    env = EnvelopingAction(source=src, ambient=b,
                           carrier=span(identity(QQ, 3), 3, QQ),
                           glob=glob, theta=identity(QQ, 3))
    assert verify_enveloping(env).passed
    assert verify_induced_matches(env).passed


def test_embedding_that_misses_translates_is_rejected():
    # swap the first two blocks of a three block algebra and embed into
    # the swapped pair only: the orbit of the image never reaches the
    # third block, so the translates cannot span
    h = group_algebra(QQ, [[0, 1], [1, 0]])
    b = product_field_algebra(QQ, 3)
    act = np.empty((2, 3, 3), dtype=object)
    act[0] = identity(QQ, 3)
    act[1] = arr(QQ, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    u = np.empty((2, 2, 3), dtype=object)
    for i in range(2):
        for j in range(2):
            u[i, j] = b.unit
    glob = GlobalTwistedAction(h, b, act, u)
    src = induce_partial(glob, arr(QQ, [1, 0, 0])).tpa
    env = EnvelopingAction(source=src, ambient=b,
                           carrier=span(identity(QQ, 3), 3, QQ),
                           glob=glob, theta=arr(QQ, [[1, 0, 0]]))
    rep = verify_enveloping(env)
    assert not rep.identity_passed("translates_span")
    assert rep.identity_passed("action_intertwines")


def rejected(env):
    try:
        if not verify_enveloping(env).passed:
            return True
        return not verify_induced_matches(env).passed
    except HopfcrossError:
        return True


def test_every_theta_mutation_is_rejected(c3_env):
    env = c3_env
    for i in range(env.theta.shape[0]):
        for j in range(env.theta.shape[1]):
            old = env.theta[i, j]
            for nv in {QQ.zero(), QQ.one(), old + QQ.one()} - {old}:
                th = env.theta.copy()
                th[i, j] = nv
                assert rejected(dataclasses.replace(env, theta=th)), \
                    f"theta mutant at ({i},{j}) -> {nv} not caught"


def test_every_degenerate_twist_and_action_mutation_is_rejected():
    env = globalize_group_partial(degenerate_swap())
    for field in ("twist", "action"):
        t = getattr(env.glob, field)
        for idx in np.ndindex(t.shape):
            old = t[idx]
            for nv in {QQ.zero(), QQ.one(), old + QQ.one()} - {old}:
                t2 = t.copy()
                t2[idx[:-1]] = t[idx[:-1]].copy()
                t2[idx] = nv
                mut = dataclasses.replace(
                    env, glob=dataclasses.replace(env.glob, **{field: t2}))
                assert rejected(mut), f"{field} mutant at {idx} -> {nv} not caught"


def test_nontrivial_cocycle_is_out_of_scope():
    with pytest.raises(PreconditionError):
        globalize_group_partial(cocycle_pair(5))


def test_non_group_hopf_is_rejected():
    ds3 = dual_hopf(group_algebra(QQ, sym3_table()))
    b1 = product_field_algebra(QQ, 1)
    act = np.empty((6, 1, 1), dtype=object)
    coc = np.empty((6, 6, 1), dtype=object)
    for i in range(6):
        act[i, 0, 0] = ds3.counit[i]
        for j in range(6):
            coc[i, j, 0] = ds3.counit[i] * ds3.counit[j]
    with pytest.raises(PreconditionError):
        globalize_group_partial(TwistedPartialAction(ds3, b1, act, coc))
