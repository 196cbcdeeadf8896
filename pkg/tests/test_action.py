"""Groupoid actions: laws, the action <-> coaction dictionary, fixed
rings, the Frobenius system, and the concrete Morita data."""

import pytest

from weakgalois.exactla import GF, QQ, Matrix
from weakgalois.groupoid import cyclic_group
from weakgalois.action import (GModuleAlgebra, Q_and_morita, action_can,
                               action_to_comodule, comodule_to_action,
                               dual_ring_basis, fixed_ring, frobenius_system,
                               idempotent_decomposition)
from conftest import diag_algebra, swap_action, transport_action


@pytest.mark.parametrize("make", [lambda: transport_action(2),
                                  lambda: swap_action()])
def test_action_laws(make):
    ma = make()
    assert ma.verify() == []
    assert all(ma.unit_laws_check().values())


def test_invalid_action_detected():
    # g does not act multiplicatively on k x k
    G = cyclic_group(2)
    A = diag_algebra(2)
    bad = Matrix(QQ, [[QQ.zero, QQ.one], [QQ.one, QQ.one]], 2)
    ma = GModuleAlgebra(A, G, [Matrix.identity(QQ, 2), bad])
    assert ma.verify()


def test_dictionary_round_trip():
    ma = transport_action(2)
    ca = action_to_comodule(ma)
    ma2 = comodule_to_action(ca, ma.G)
    assert all(a == b for a, b in zip(ma.act, ma2.act))


def test_idempotent_decomposition_transport():
    dec = idempotent_decomposition(transport_action(2))
    assert [blk.dim for (_, _, blk) in dec] == [1, 1]


def test_idempotent_decomposition_swap():
    dec = idempotent_decomposition(swap_action())
    assert [blk.dim for (_, _, blk) in dec] == [2]


@pytest.mark.parametrize("make", [lambda: transport_action(2),
                                  lambda: swap_action()])
def test_fixed_ring_dimension_one(make):
    assert fixed_ring(make()).dim == 1


@pytest.mark.parametrize("make", [lambda: transport_action(2),
                                  lambda: swap_action()])
def test_canonical_map_bijective(make):
    ma = make()
    cm = action_can(ma, fixed_ring(ma))
    assert cm.is_bijective


@pytest.mark.parametrize("make,dim", [(lambda: transport_action(2), 4),
                                      (lambda: swap_action(), 4)])
def test_dual_ring_basis(make, dim):
    drb = dual_ring_basis(make())
    assert drb.dim == dim


@pytest.mark.parametrize("make", [lambda: transport_action(2),
                                  lambda: swap_action()])
def test_frobenius_system(make):
    # construction asserts both defining identities with zero residual
    fs = frobenius_system(make())
    assert len(fs.e_pairs) == make().G.n_morphisms


@pytest.mark.parametrize("make", [lambda: transport_action(2),
                                  lambda: swap_action()])
def test_Q_and_morita_strict(make):
    ma = make()
    out = Q_and_morita(ma, fixed_ring(ma))
    assert out["Q_dim"] == ma.A.dim
    assert out["tau_surjective"] and out["mu_surjective"]
    assert out["is_strict"]
    # the witness solves the surjectivity criterion
    a = out["witness"]
    total = [sum((m.apply(a)[i] for m in ma.act), ma.field.zero)
             for i in range(ma.A.dim)]
    assert total == ma.A.unit


def test_trivial_action_not_strict():
    G = cyclic_group(2)
    I = Matrix.identity(QQ, 1)
    ma = GModuleAlgebra(diag_algebra(1), G, [I, I])
    out = Q_and_morita(ma, fixed_ring(ma))
    assert out["tau_surjective"]          # 2a = 1 solvable over Q
    assert not out["mu_surjective"]
    assert not out["is_strict"]


def test_trivial_action_tau_fails_mod_2():
    f2 = GF(2)
    G = cyclic_group(2)
    I = Matrix.identity(f2, 1)
    ma = GModuleAlgebra(diag_algebra(1, f2), G, [I, I])
    out = Q_and_morita(ma, fixed_ring(ma))
    assert not out["tau_surjective"]
    assert out["witness"] is None
