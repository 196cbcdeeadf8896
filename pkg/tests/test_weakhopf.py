"""Weak Hopf algebra axioms, projections, and the kG / Gk constructors."""

import pytest

from weakgalois.exactla import GF, QQ, Matrix, unit_vec
from weakgalois.groupoid import (cyclic_group, disjoint_union, pair_groupoid)
from weakgalois.weakhopf import (FinCoalgebra, WeakHopfAlgebra,
                                 dual_groupoid_algebra, groupoid_algebra,
                                 pairing_check, verify_weak_bialgebra)

GROUPOIDS = {
    "trivial": pair_groupoid(1),
    "C2": cyclic_group(2),
    "C3": cyclic_group(3),
    "P2": pair_groupoid(2),
    "P3": pair_groupoid(3),
    "C2+P2": disjoint_union(cyclic_group(2), pair_groupoid(2)),
}


@pytest.mark.parametrize("name", sorted(GROUPOIDS))
@pytest.mark.parametrize("construct", [groupoid_algebra,
                                       dual_groupoid_algebra])
def test_axiom_suite(name, construct):
    h = construct(GROUPOIDS[name], QQ)
    assert h.verify() == []


def test_verify_detects_broken_counit():
    g = pair_groupoid(2)
    h = groupoid_algebra(g, QQ)
    broken = WeakHopfAlgebra(
        h.alg, FinCoalgebra(QQ, h.dim, h.coalg.delta, [QQ.zero] * h.dim),
        h.S)
    bad = verify_weak_bialgebra(broken)
    assert bad
    assert any("counit" in msg for msg in bad)


def test_projection_formula_on_kG():
    g = pair_groupoid(2)
    h = groupoid_algebra(g, QQ)
    PiL, _, _, _ = h.projections()
    for m in range(g.n_morphisms):
        target_id = g.identity[g.target(m)]
        assert PiL.col(m) == unit_vec(QQ, h.dim, target_id)


@pytest.mark.parametrize("name", sorted(GROUPOIDS))
def test_target_subalgebra_dimension(name):
    g = GROUPOIDS[name]
    HL, HR = groupoid_algebra(g, QQ).targets()
    assert HL.dim == g.n_objects
    assert HR.dim == g.n_objects


def test_ordinary_bialgebra_projection_rank():
    h = groupoid_algebra(cyclic_group(2), QQ)
    PiL, _, _, _ = h.projections()
    assert PiL.rank() == 1


def test_trivial_groupoid_gives_the_field():
    h = groupoid_algebra(pair_groupoid(1), QQ)
    assert h.dim == 1
    assert h.alg.unit == [QQ.one]


def test_kP2_delta_of_unit():
    g = pair_groupoid(2)
    h = groupoid_algebra(g, QQ)
    n = h.dim
    expected = {}
    for x in g.identities():
        expected[x * n + x] = QQ.one
    assert h.delta1() == expected


def test_dual_C2_delta():
    g = cyclic_group(2)
    d = dual_groupoid_algebra(g, QQ)
    n = d.dim
    # Delta(v_e) = v_e (x) v_e + v_g (x) v_g (identity e = index 0)
    assert d.coalg.delta[0] == {0 * n + 0: QQ.one, 1 * n + 1: QQ.one}


def test_dual_P2_counit_support():
    g = pair_groupoid(2)
    d = dual_groupoid_algebra(g, QQ)
    ids = set(g.identities())
    for m in range(d.dim):
        assert d.coalg.eps[m] == (QQ.one if m in ids else QQ.zero)


@pytest.mark.parametrize("name", sorted(GROUPOIDS))
def test_pairing(name):
    g = GROUPOIDS[name]
    assert pairing_check(groupoid_algebra(g, QQ),
                         dual_groupoid_algebra(g, QQ)) == []


def test_pairing_detects_mismatch():
    h = groupoid_algebra(pair_groupoid(2), QQ)
    d = dual_groupoid_algebra(cyclic_group(4), QQ)
    assert pairing_check(h, d)


@pytest.mark.parametrize("name", sorted(GROUPOIDS))
def test_antipode_involutive_on_kG(name):
    h = groupoid_algebra(GROUPOIDS[name], QQ)
    assert h.S * h.S == Matrix.identity(QQ, h.dim)


def test_axiom_suite_mod_5():
    for g in (pair_groupoid(2), cyclic_group(3)):
        assert groupoid_algebra(g, GF(5)).verify() == []
        assert dual_groupoid_algebra(g, GF(5)).verify() == []
