"""Exact linear algebra kernel: frozen small examples and properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakgalois.exactla import (GF, QQ, Matrix, Subspace, kron,
                                quotient_by, unit_vec, zero_vec)


def qmat(rows):
    return Matrix(QQ, [[Fraction(x) for x in r] for r in rows],
                  len(rows[0]) if rows else 0)


def test_rref_identity():
    m = Matrix.identity(QQ, 2)
    r, pivots = m.rref()
    assert r == m
    assert list(pivots) == [0, 1]


def test_rref_rank_one():
    r, pivots = qmat([[2, 4], [1, 2]]).rref()
    assert r == qmat([[1, 2], [0, 0]])
    assert list(pivots) == [0]


def test_rref_mod_2():
    f = GF(2)
    m = Matrix(f, [[f.from_int(1), f.from_int(1)],
                   [f.from_int(1), f.from_int(0)]], 2)
    r, pivots = m.rref()
    assert r == Matrix.identity(f, 2)
    assert list(pivots) == [0, 1]


def test_kernel_image_solve():
    assert Matrix.identity(QQ, 3).kernel().dim == 0
    im = qmat([[1], [1]]).image()
    assert im.dim == 1
    assert im.contains([Fraction(1), Fraction(1)])
    assert qmat([[2]]).solve([Fraction(1)]) == [Fraction(1, 2)]
    assert qmat([[1], [1]]).solve([Fraction(1), Fraction(2)]) is None


def test_inverse():
    m = qmat([[1, 2], [3, 5]])
    assert m * m.inverse() == Matrix.identity(QQ, 2)
    with pytest.raises(ValueError):
        qmat([[1, 1], [1, 1]]).inverse()


def test_quotient_dims():
    q = quotient_by(Subspace.zero(QQ, 3), 3)
    assert q.dim == 3
    assert q.projection_matrix() == Matrix.identity(QQ, 3)
    q = quotient_by(Subspace.full(QQ, 3), 3)
    assert q.dim == 0
    rel = Subspace.from_spanning(QQ, 4, [
        [Fraction(1), Fraction(-1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1), Fraction(-1)]])
    q = quotient_by(rel, 4)
    assert q.dim == 2


def test_quotient_section_projection():
    rel = Subspace.from_spanning(QQ, 3, [
        [Fraction(1), Fraction(1), Fraction(0)]])
    q = quotient_by(rel, 3)
    v = [Fraction(2), Fraction(5), Fraction(-1)]
    back = q.lift(q.project(v))
    diff = [a - b for a, b in zip(v, back)]
    assert rel.contains(diff)


def test_kron():
    assert kron(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)) == \
        Matrix.identity(QQ, 6)
    swap = qmat([[0, 1], [1, 0]])
    assert kron(swap, Matrix.identity(QQ, 1)) == swap
    # basis ordering (v_i (x) w_j) with i outer
    assert kron(qmat([[1, 2]]), Matrix(QQ, [[Fraction(3)], [Fraction(4)]], 1)) \
        == qmat([[3, 6], [4, 8]])


def _random_matrix(field, entries, nrows, ncols):
    return Matrix(field, [[field.from_int(entries[i * ncols + j])
                           for j in range(ncols)] for i in range(nrows)],
                  ncols)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4),
       st.lists(st.integers(-5, 5), min_size=16, max_size=16),
       st.sampled_from(["Q", "F5"]))
def test_rank_nullity(nrows, ncols, entries, fieldname):
    field = QQ if fieldname == "Q" else GF(5)
    m = _random_matrix(field, entries, nrows, ncols)
    assert m.kernel().dim + m.image().dim == ncols


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4),
       st.lists(st.integers(-5, 5), min_size=16, max_size=16))
def test_rref_idempotent(nrows, ncols, entries):
    m = _random_matrix(QQ, entries, nrows, ncols)
    r, _ = m.rref()
    r2, _ = r.rref()
    assert r == r2


def test_subspace_membership_and_coordinates():
    s = Subspace.from_spanning(QQ, 3, [
        [Fraction(1), Fraction(0), Fraction(1)],
        [Fraction(0), Fraction(1), Fraction(1)],
        [Fraction(1), Fraction(1), Fraction(2)]])
    assert s.dim == 2
    v = [Fraction(2), Fraction(3), Fraction(5)]
    assert s.contains(v)
    coords = s.coordinates(v)
    rebuilt = zero_vec(QQ, 3)
    for c, b in zip(coords, s.basis):
        rebuilt = [x + c * y for x, y in zip(rebuilt, b)]
    assert rebuilt == v
    assert not s.contains(unit_vec(QQ, 3, 0))
