"""Groupoid gradings, the grading <-> coaction dictionary, and the
strongly-graded equivalence harness."""

import pytest

from weakgalois.exactla import QQ
from weakgalois.groupoid import cyclic_group, disjoint_union, pair_groupoid
from weakgalois.graded import (comodule_to_grading, grading_to_comodule,
                               is_strongly_graded, regular_graded_module,
                               theorem35_harness)
from conftest import dual_numbers_graded, kG_self_grading, matrix_units_graded

GROUPOIDS = {
    "trivial": pair_groupoid(1),
    "C2": cyclic_group(2),
    "C3": cyclic_group(3),
    "P2": pair_groupoid(2),
    "P3": pair_groupoid(3),
    "C2+P2": disjoint_union(cyclic_group(2), pair_groupoid(2)),
}


def test_matrix_units_grading_valid():
    ga = matrix_units_graded(2)
    assert ga.verify() == []
    assert regular_graded_module(ga).verify() == []


def test_dictionary_round_trip():
    ga = matrix_units_graded(2)
    ca = grading_to_comodule(ga)
    assert ca.verify() == []
    ga2 = comodule_to_grading(ca, ga.G)
    assert all(a == b for a, b in zip(ga.components, ga2.components))


@pytest.mark.parametrize("n", [2, 3])
def test_matrix_units_strongly_graded(n):
    sg, witness = is_strongly_graded(matrix_units_graded(n))
    assert sg
    assert witness is None


def test_dual_numbers_not_strongly_graded():
    sg, witness = is_strongly_graded(dual_numbers_graded())
    assert not sg
    # A_x A_x = 0 inside the one-dimensional odd component
    assert witness == (1, 1, 0, 1)


@pytest.mark.parametrize("n", [2, 3])
def test_harness_matrix_units_all_true(n):
    res = theorem35_harness(matrix_units_graded(n))
    assert res["verdicts"] == {"strongly_graded": True,
                               "can_bijective": True,
                               "can_surjective": True}
    assert res["coinvariants_dim"] == n
    assert all(res["sampled_equivalence"].values())


def test_harness_dual_numbers_all_false():
    res = theorem35_harness(dual_numbers_graded())
    assert res["verdicts"] == {"strongly_graded": False,
                               "can_bijective": False,
                               "can_surjective": False}
    assert res["image_dim"] == 3
    assert res["carrier_dim"] == 4
    # the coring sample detects the failure; the regular sample cannot
    assert res["sampled_equivalence"]["counit_on_regular"]
    assert not res["sampled_equivalence"]["counit_on_coring"]
    assert res["sampled_equivalence"]["unit_on_T"]
    assert res["sampled_equivalence"]["unit_on_A"]


@pytest.mark.parametrize("name", sorted(GROUPOIDS))
def test_harness_kG_self_grading_all_true(name):
    g = GROUPOIDS[name]
    res = theorem35_harness(kG_self_grading(g))
    assert res["verdicts"] == {"strongly_graded": True,
                               "can_bijective": True,
                               "can_surjective": True}
    assert res["coinvariants_dim"] == g.n_objects
