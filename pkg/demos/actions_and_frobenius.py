"""A groupoid acting on a product of fields: fixed ring, Galois property,
the Frobenius system of the dual ring, and the Morita data.

Run:  python3 demos/actions_and_frobenius.py
"""

from weakgalois import (FinAlgebra, GModuleAlgebra, Matrix, QQ,
                        Q_and_morita, action_can, dual_ring_basis,
                        fixed_ring, frobenius_system, pair_groupoid)

# k x k with the pair groupoid transporting coordinates: (i,j) sends
# e_j to e_i and kills the rest
n = 2
G = pair_groupoid(n)
A = FinAlgebra(QQ, n, {(i, i): {i: QQ.one} for i in range(n)},
               [QQ.one] * n)
act = []
for src, tgt in G.morphisms:
    M = Matrix.zeros(QQ, n, n)
    M.rows[tgt][src] = QQ.one
    act.append(M)
ma = GModuleAlgebra(A, G, act)

print("pair groupoid transporting the coordinates of k x k")
print("action law violations: %r" % ma.verify())

T = fixed_ring(ma)
print("fixed ring dim %d (the diagonal)" % T.dim)

cm = action_can(ma, T)
print("canonical map bijective:", cm.is_bijective)

drb = dual_ring_basis(ma)
print("dual ring dim %d with generator product table verified" % drb.dim)

fs = frobenius_system(ma, drb)
print("frobenius system: %d casimir terms, both identities exact"
      % len(fs.e_pairs))

out = Q_and_morita(ma, T)
print("dim Q = %d = dim A; strict context: %s" % (out["Q_dim"],
                                                  out["is_strict"]))
print("surjectivity witness a with sum of orbit translates = 1:",
      out["witness"])
