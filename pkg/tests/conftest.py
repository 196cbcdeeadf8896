"""Shared constructors for the worked examples used across the suite."""

from weakgalois.exactla import QQ, Matrix, Subspace, unit_vec
from weakgalois.groupoid import cyclic_group, pair_groupoid
from weakgalois.weakhopf import FinAlgebra
from weakgalois.graded import GradedAlgebra
from weakgalois.action import GModuleAlgebra


def matrix_units_algebra(n, field=QQ):
    """M_n(k) on the matrix units E_ab, basis index n*a + b."""
    dim = n * n
    table = {}
    for a in range(n):
        for b in range(n):
            for d in range(n):
                table[(n * a + b, n * b + d)] = {n * a + d: field.one}
    unit = [field.zero] * dim
    for a in range(n):
        unit[n * a + a] = field.one
    return FinAlgebra(field, dim, table, unit)


def matrix_units_graded(n, field=QQ):
    """M_n(k) graded by the pair groupoid: E_ab in degree (a,b)."""
    A = matrix_units_algebra(n, field)
    G = pair_groupoid(n)
    comps = [Subspace.from_spanning(field, n * n,
                                    [unit_vec(field, n * n, m)])
             for m in range(n * n)]
    return GradedAlgebra(A, G, comps)


def dual_numbers_graded(field=QQ):
    """k[x]/(x^2) with x in the odd degree of the Z/2 grading."""
    A = FinAlgebra(field, 2,
                   {(0, 0): {0: field.one}, (0, 1): {1: field.one},
                    (1, 0): {1: field.one}},
                   [field.one, field.zero])
    G = cyclic_group(2)
    comps = [Subspace.from_spanning(field, 2, [unit_vec(field, 2, j)])
             for j in range(2)]
    return GradedAlgebra(A, G, comps)


def kG_self_grading(g, field=QQ):
    """kG graded by its own morphism degrees."""
    from weakgalois.weakhopf import groupoid_algebra
    h = groupoid_algebra(g, field)
    comps = [Subspace.from_spanning(field, h.dim,
                                    [unit_vec(field, h.dim, m)])
             for m in range(h.dim)]
    return GradedAlgebra(h.alg, g, comps)


def diag_algebra(n, field=QQ):
    """k^n with componentwise multiplication."""
    return FinAlgebra(field, n, {(i, i): {i: field.one} for i in range(n)},
                      [field.one] * n)


def transport_action(n, field=QQ):
    """Pair groupoid moving the coordinates of k^n: (i,j) sends e_j to e_i."""
    G = pair_groupoid(n)
    A = diag_algebra(n, field)
    act = []
    for m, (src, tgt) in enumerate(G.morphisms):
        M = Matrix.zeros(field, n, n)
        M.rows[tgt][src] = field.one
        act.append(M)
    return GModuleAlgebra(A, G, act)


def swap_action(field=QQ):
    """Z/2 exchanging the two factors of k x k."""
    G = cyclic_group(2)
    A = diag_algebra(2, field)
    swap = Matrix(field, [[field.zero, field.one],
                          [field.one, field.zero]], 2)
    return GModuleAlgebra(A, G, [Matrix.identity(field, 2), swap])
