"""Groupoid constructors and law validation."""

import pytest

from weakgalois.groupoid import (Groupoid, cyclic_group, disjoint_union,
                                 from_group, pair_groupoid)


def test_trivial_groupoid():
    g = pair_groupoid(1)
    assert g.n_objects == 1
    assert g.n_morphisms == 1
    assert g.validate() == []


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pair_groupoid_counts(n):
    g = pair_groupoid(n)
    assert g.n_morphisms == n * n
    assert len(g.identities()) == n
    assert g.validate() == []


def test_pair_groupoid_rejects_zero():
    with pytest.raises(ValueError):
        pair_groupoid(0)


def test_pair_groupoid_composition():
    g = pair_groupoid(2)
    # morphism (i,j): j -> i has index 2i + j; (i,j)(j,l) = (i,l)
    ij = lambda i, j: 2 * i + j
    assert g.compose[(ij(0, 1), ij(1, 0))] == ij(0, 0)
    assert (ij(0, 1), ij(0, 1)) not in g.compose
    assert g.inverse[ij(0, 1)] == ij(1, 0)


@pytest.mark.parametrize("n,count", [(2, 2), (3, 3)])
def test_cyclic_groups(n, count):
    g = cyclic_group(n)
    assert g.n_objects == 1
    assert g.n_morphisms == count
    assert g.validate() == []


def test_from_group_rejects_non_groups():
    with pytest.raises(ValueError):
        from_group([[0, 0], [0, 0]])      # no inverses
    with pytest.raises(ValueError):
        from_group([[0, 1], [1, 1]])      # not associative / no inverse


def test_disjoint_union_counts():
    g = disjoint_union(cyclic_group(2), pair_groupoid(2))
    assert g.n_objects == 3
    assert g.n_morphisms == 6
    assert g.validate() == []


def test_inverse_involution():
    for g in [cyclic_group(3), pair_groupoid(3),
              disjoint_union(cyclic_group(2), pair_groupoid(2))]:
        for m in range(g.n_morphisms):
            assert g.inverse[g.inverse[m]] == m


def test_validate_reports_bad_inverse():
    g = cyclic_group(3)
    broken = Groupoid(g.n_objects, g.morphisms, g.compose,
                      [0, 1, 2], g.identity)   # identity map is not inverse
    bad = broken.validate()
    assert bad
    assert any("m^-1" in msg for msg in bad)
