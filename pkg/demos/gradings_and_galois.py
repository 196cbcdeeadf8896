"""A matrix algebra graded by the pair groupoid is a Galois extension of
its diagonal; the dual numbers graded by Z/2 are the standard
counterexample.

Run:  python3 demos/gradings_and_galois.py
"""

from weakgalois import (FinAlgebra, GradedAlgebra, QQ, Subspace,
                        canonical_map, coinvariants, cyclic_group,
                        grading_to_comodule, is_strongly_graded,
                        pair_groupoid, theorem35_harness)


def unit_vec(n, i):
    v = [QQ.zero] * n
    v[i] = QQ.one
    return v


def matrix_units_graded(n):
    """M_n(k) with E_ab in degree (a,b) of the pair groupoid."""
    dim = n * n
    table = {(n * a + b, n * b + d): {n * a + d: QQ.one}
             for a in range(n) for b in range(n) for d in range(n)}
    unit = [QQ.zero] * dim
    for a in range(n):
        unit[n * a + a] = QQ.one
    A = FinAlgebra(QQ, dim, table, unit)
    comps = [Subspace.from_spanning(QQ, dim, [unit_vec(dim, m)])
             for m in range(dim)]
    return GradedAlgebra(A, pair_groupoid(n), comps)


ga = matrix_units_graded(2)
print("M_2(k) graded by the pair groupoid; violations: %r" % ga.verify())

ca = grading_to_comodule(ga)
T = coinvariants(ca)
print("coinvariants = diagonal, dim %d" % T.dim)

cm = canonical_map(ca, T, T=T)
print("canonical map: tensor dim %d -> coring dim %d, bijective: %s"
      % (cm.tensor.dim, cm.carrier.dim, cm.is_bijective))

res = theorem35_harness(ga)
print("equivalence verdicts:", res["verdicts"])
print("sampled adjunction maps:", res["sampled_equivalence"])

print("\n--- the counterexample ---")
# k[x]/(x^2) with x in odd degree
A = FinAlgebra(QQ, 2, {(0, 0): {0: QQ.one}, (0, 1): {1: QQ.one},
                       (1, 0): {1: QQ.one}}, [QQ.one, QQ.zero])
comps = [Subspace.from_spanning(QQ, 2, [unit_vec(2, j)]) for j in range(2)]
ga = GradedAlgebra(A, cyclic_group(2), comps)

sg, witness = is_strongly_graded(ga)
print("k[x]/(x^2) with odd x: strongly graded %s, witness %s" % (sg, witness))
res = theorem35_harness(ga)
print("equivalence verdicts:", res["verdicts"])
print("image dim %d < coring dim %d" % (res["image_dim"], res["carrier_dim"]))
print("the coring sample detects it:", res["sampled_equivalence"])
