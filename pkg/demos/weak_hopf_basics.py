"""Build the two weak Hopf algebras attached to a finite groupoid and
inspect their structure.

Run:  python3 demos/weak_hopf_basics.py
"""

from weakgalois import (QQ, dual_groupoid_algebra, groupoid_algebra,
                        pair_groupoid, pairing_check)

g = pair_groupoid(2)
print("pair groupoid on 2 objects: %d morphisms, identities %s"
      % (g.n_morphisms, g.identities()))

h = groupoid_algebra(g, QQ)
print("\nkG: dim %d, axiom violations: %r" % (h.dim, h.verify()))
print("unit =", h.alg.unit)
print("Delta(1) as a sparse tensor:", h.delta1())

HL, HR = h.targets()
print("target subalgebra dim %d (= number of objects)" % HL.dim)

d = dual_groupoid_algebra(g, QQ)
print("\nGk: dim %d, axiom violations: %r" % (d.dim, d.verify()))
print("counit vector:", d.coalg.eps)

print("\nduality between kG and Gk:", pairing_check(h, d) or "ok")
