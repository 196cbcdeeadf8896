"""Finite-dimensional algebras, coalgebras and weak Hopf algebras.

Algebras are given by sparse structure constants, coalgebras by the
comultiplication on basis elements (a sparse vector in H (x) H under the
global tensor ordering) together with the counit.  All axiom checks are
exhaustive over basis tuples and exact; a structure may be built
unverified so tests can construct deliberate counterexamples.
"""

from __future__ import annotations

from .exactla import (Matrix, Subspace, sp_add, sp_to_dense, unit_vec,
                      zero_vec)
from .groupoid import Groupoid


class FinAlgebra:
    """Associative unital algebra via structure constants.

    ``table[(i, j)]`` is the sparse expansion of e_i e_j; missing keys
    mean the product is zero.
    """

    def __init__(self, field, dim, table, unit, labels=None):
        self.field = field
        self.dim = dim
        self.table = {k: dict(v) for k, v in table.items() if v}
        self.unit = list(unit)
        self.labels = labels or ["e%d" % i for i in range(dim)]
        self._mult_matrix = None

    def basis_product(self, i, j):
        return self.table.get((i, j), {})

    def mul_sparse(self, du, dv):
        out = {}
        for i, a in du.items():
            for j, b in dv.items():
                c = a * b
                if c:
                    for k, s in self.basis_product(i, j).items():
                        sp_add(out, k, c * s)
        return out

    def mul(self, u, v):
        du = {i: c for i, c in enumerate(u) if c}
        dv = {j: c for j, c in enumerate(v) if c}
        return sp_to_dense(self.field, self.mul_sparse(du, dv), self.dim)

    def left_mult_matrix(self, v):
        """Matrix of w -> v.w."""
        cols = [self.mul(v, unit_vec(self.field, self.dim, j))
                for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, self.dim)

    def right_mult_matrix(self, v):
        """Matrix of w -> w.v."""
        cols = [self.mul(unit_vec(self.field, self.dim, j), v)
                for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, self.dim)

    def mult_matrix(self):
        """The multiplication as a dim x dim^2 matrix, tensor-ordered."""
        if self._mult_matrix is None:
            n = self.dim
            m = Matrix.zeros(self.field, n, n * n)
            for (i, j), prod in self.table.items():
                for k, c in prod.items():
                    m.rows[k][i * n + j] = c
            self._mult_matrix = m
        return self._mult_matrix

    def verify(self):
        """Associativity and unit laws on all basis tuples."""
        bad = []
        n = self.dim
        for i in range(n):
            for j in range(n):
                eij = self.basis_product(i, j)
                for l in range(n):
                    lhs = self.mul_sparse(eij, {l: self.field.one})
                    rhs = self.mul_sparse({i: self.field.one},
                                          self.basis_product(j, l))
                    if lhs != rhs:
                        bad.append("associativity fails on (%s,%s,%s)"
                                   % (self.labels[i], self.labels[j], self.labels[l]))
        du = {i: c for i, c in enumerate(self.unit) if c}
        for i in range(n):
            ei = {i: self.field.one}
            if self.mul_sparse(du, ei) != ei or self.mul_sparse(ei, du) != ei:
                bad.append("unit law fails on %s" % self.labels[i])
        return bad

    def is_unital_subring(self, sub: Subspace):
        """1 in sub and sub closed under multiplication."""
        if not sub.contains(self.unit):
            return False
        for u in sub.basis:
            for v in sub.basis:
                if not sub.contains(self.mul(u, v)):
                    return False
        return True

    def subalgebra(self, sub: Subspace):
        """Structure constants of a unital subring on sub's echelon basis."""
        if not self.is_unital_subring(sub):
            raise ValueError("subspace is not a unital subring")
        d = sub.dim
        table = {}
        for i in range(d):
            for j in range(d):
                prod = sub.coordinates(self.mul(sub.basis[i], sub.basis[j]))
                table[(i, j)] = {k: c for k, c in enumerate(prod) if c}
        unit = sub.coordinates(self.unit)
        return FinAlgebra(self.field, d, table, unit)


class FinCoalgebra:
    """Coassociative counital coalgebra.

    ``delta[i]`` is the sparse vector of Delta(e_i) in H (x) H;
    ``eps`` is the dense row of counit values on the basis.
    """

    def __init__(self, field, dim, delta, eps):
        self.field = field
        self.dim = dim
        self.delta = [dict(d) for d in delta]
        self.eps = list(eps)

    def delta_sparse(self, dv):
        out = {}
        for i, c in dv.items():
            for k, s in self.delta[i].items():
                sp_add(out, k, c * s)
        return out

    def delta_vec(self, v):
        return sp_to_dense(self.field, self.delta_sparse(
            {i: c for i, c in enumerate(v) if c}), self.dim * self.dim)

    def eps_sparse(self, dv):
        s = self.field.zero
        for i, c in dv.items():
            s = s + c * self.eps[i]
        return s

    def delta_matrix(self):
        n = self.dim
        m = Matrix.zeros(self.field, n * n, n)
        for j, d in enumerate(self.delta):
            for k, c in d.items():
                m.rows[k][j] = c
        return m

    def verify(self):
        bad = []
        n = self.dim
        one = self.field.one
        for i in range(n):
            # (Delta (x) id) Delta vs (id (x) Delta) Delta, sparse in H^3
            lhs, rhs = {}, {}
            for ab, c in self.delta[i].items():
                a, b = divmod(ab, n)
                for xy, s in self.delta[a].items():
                    sp_add(lhs, xy * n + b, c * s)
                for xy, s in self.delta[b].items():
                    sp_add(rhs, a * n * n + xy, c * s)
            if lhs != rhs:
                bad.append("coassociativity fails on basis %d" % i)
            left, right = {}, {}
            for ab, c in self.delta[i].items():
                a, b = divmod(ab, n)
                sp_add(left, b, c * self.eps[a])
                sp_add(right, a, c * self.eps[b])
            if left != {i: one} or right != {i: one}:
                bad.append("counit law fails on basis %d" % i)
        return bad


def _tensor_mul(alg, n, dx, dy):
    """Product of sparse elements of H (x) H (componentwise algebra)."""
    out = {}
    for ab, c in dx.items():
        a, b = divmod(ab, n)
        for cd, s in dy.items():
            cc, d = divmod(cd, n)
            coeff = c * s
            for p, u in alg.basis_product(a, cc).items():
                for q, v in alg.basis_product(b, d).items():
                    sp_add(out, p * n + q, coeff * u * v)
    return out


class WeakBialgebra:
    """Algebra + coalgebra satisfying the weak compatibility axioms."""

    def __init__(self, alg: FinAlgebra, coalg: FinCoalgebra):
        if alg.dim != coalg.dim or alg.field != coalg.field:
            raise ValueError("algebra/coalgebra dimension or field mismatch")
        self.alg = alg
        self.coalg = coalg
        self.field = alg.field
        self.dim = alg.dim
        self._delta1 = None

    def delta1(self):
        """Sparse Delta(1) in H (x) H."""
        if self._delta1 is None:
            self._delta1 = self.coalg.delta_sparse(
                {i: c for i, c in enumerate(self.alg.unit) if c})
        return self._delta1

    def verify(self):
        bad = self.alg.verify()
        bad += self.coalg.verify()
        if bad:
            return bad
        n = self.dim
        alg, coalg = self.alg, self.coalg
        one = self.field.one
        # Delta multiplicative
        for i in range(n):
            for j in range(n):
                lhs = coalg.delta_sparse(alg.basis_product(i, j))
                rhs = _tensor_mul(alg, n, coalg.delta[i], coalg.delta[j])
                if lhs != rhs:
                    bad.append("Delta(e%d e%d) != Delta(e%d)Delta(e%d)" % (i, j, i, j))
        # weak comultiplicativity of the unit (both bracketings)
        d1 = self.delta1()
        dd1 = {}
        for ab, c in d1.items():
            a, b = divmod(ab, n)
            for xy, s in coalg.delta[a].items():
                sp_add(dd1, xy * n + b, c * s)
        rhs1, rhs2 = {}, {}
        for ab, c in d1.items():
            a, b = divmod(ab, n)
            for cd, s in d1.items():
                cc, d = divmod(cd, n)
                coeff = c * s
                for k, u in alg.basis_product(b, cc).items():
                    sp_add(rhs1, a * n * n + k * n + d, coeff * u)
                for k, u in alg.basis_product(cc, b).items():
                    sp_add(rhs2, a * n * n + k * n + d, coeff * u)
        if dd1 != rhs1:
            bad.append("weak unit axiom (ordered) fails")
        if dd1 != rhs2:
            bad.append("weak unit axiom (opposite order) fails")
        # weak multiplicativity of the counit on all basis triples
        for h in range(n):
            for k in range(n):
                dk = coalg.delta[k]
                for l in range(n):
                    lhs = coalg.eps_sparse(alg.mul_sparse(
                        alg.basis_product(h, k), {l: one}))
                    mid = self.field.zero
                    swp = self.field.zero
                    for ab, c in dk.items():
                        k1, k2 = divmod(ab, n)
                        mid = mid + c * coalg.eps_sparse(alg.basis_product(h, k1)) \
                            * coalg.eps_sparse(alg.basis_product(k2, l))
                        swp = swp + c * coalg.eps_sparse(alg.basis_product(h, k2)) \
                            * coalg.eps_sparse(alg.basis_product(k1, l))
                    if lhs != mid:
                        bad.append("weak counit axiom fails on (%d,%d,%d)" % (h, k, l))
                    if lhs != swp:
                        bad.append("weak counit axiom (swapped) fails on (%d,%d,%d)"
                                   % (h, k, l))
        return bad

    # -- source/target projections ----------------------------------------

    def projections(self):
        """The four idempotents (Pi_L, Pi_R, Pi_L_bar, Pi_R_bar)."""
        n = self.dim
        alg, coalg = self.alg, self.coalg
        PiL = Matrix.zeros(self.field, n, n)
        PiR = Matrix.zeros(self.field, n, n)
        PiLbar = Matrix.zeros(self.field, n, n)
        PiRbar = Matrix.zeros(self.field, n, n)
        d1 = self.delta1()
        for h in range(n):
            for ab, c in d1.items():
                a, b = divmod(ab, n)
                # Pi_L(h) = eps(1_(1) h) 1_(2)
                e = coalg.eps_sparse(alg.basis_product(a, h))
                if e:
                    PiL.rows[b][h] = PiL.rows[b][h] + c * e
                # Pi_R(h) = 1_(1) eps(h 1_(2))
                e = coalg.eps_sparse(alg.basis_product(h, b))
                if e:
                    PiR.rows[a][h] = PiR.rows[a][h] + c * e
                # Pi_L_bar(h) = 1_(1) eps(1_(2) h)
                e = coalg.eps_sparse(alg.basis_product(b, h))
                if e:
                    PiLbar.rows[a][h] = PiLbar.rows[a][h] + c * e
                # Pi_R_bar(h) = eps(h 1_(1)) 1_(2)
                e = coalg.eps_sparse(alg.basis_product(h, a))
                if e:
                    PiRbar.rows[b][h] = PiRbar.rows[b][h] + c * e
        return PiL, PiR, PiLbar, PiRbar

    def targets(self):
        """(H^L, H^R) as subspaces, with the image identities asserted."""
        PiL, PiR, PiLbar, PiRbar = self.projections()
        for P in (PiL, PiR, PiLbar, PiRbar):
            assert P * P == P, "projection is not idempotent"
        HL = PiL.column_space()
        HR = PiR.column_space()
        assert HL == PiRbar.column_space(), "Im(Pi_L) != Im(Pi_R_bar)"
        assert HR == PiLbar.column_space(), "Im(Pi_R) != Im(Pi_L_bar)"
        return HL, HR


class WeakHopfAlgebra(WeakBialgebra):
    """Weak bialgebra with an antipode matrix S."""

    def __init__(self, alg, coalg, S: Matrix):
        super().__init__(alg, coalg)
        if S.nrows != self.dim or S.ncols != self.dim:
            raise ValueError("antipode has wrong shape")
        self.S = S

    def verify(self):
        bad = super().verify()
        if bad:
            return bad
        n = self.dim
        alg, coalg = self.alg, self.coalg
        PiL, PiR, _, _ = self.projections()
        for h in range(n):
            lhs_l = zero_vec(self.field, n)
            lhs_r = zero_vec(self.field, n)
            for ab, c in coalg.delta[h].items():
                a, b = divmod(ab, n)
                ea = unit_vec(self.field, n, a)
                eb = unit_vec(self.field, n, b)
                lhs_l = [x + c * y for x, y in
                         zip(lhs_l, alg.mul(ea, self.S.col(b)))]
                lhs_r = [x + c * y for x, y in
                         zip(lhs_r, alg.mul(self.S.col(a), eb))]
            if lhs_l != PiL.col(h):
                bad.append("antipode axiom h_(1)S(h_(2)) = Pi_L(h) fails on basis %d" % h)
            if lhs_r != PiR.col(h):
                bad.append("antipode axiom S(h_(1))h_(2) = Pi_R(h) fails on basis %d" % h)
            # S(h_(1)) h_(2) S(h_(3)) = S(h)
            acc = zero_vec(self.field, n)
            for ab, c in coalg.delta[h].items():
                a, b = divmod(ab, n)
                for cd, s in coalg.delta[a].items():
                    h1, h2 = divmod(cd, n)
                    term = alg.mul(alg.mul(self.S.col(h1),
                                           unit_vec(self.field, n, h2)),
                                   self.S.col(b))
                    acc = [x + (c * s) * y for x, y in zip(acc, term)]
            if acc != self.S.col(h):
                bad.append("antipode axiom S(h_(1))h_(2)S(h_(3)) = S(h) fails on basis %d" % h)
        return bad


def verify_weak_bialgebra(w: WeakBialgebra):
    return w.verify()


# ---------------------------------------------------------------------------
# constructors from groupoids


def groupoid_algebra(g: Groupoid, field) -> WeakHopfAlgebra:
    """kG: basis u_s indexed by morphisms, u_s u_t = u_{st} when composable."""
    g.require_valid()
    n = g.n_morphisms
    table = {}
    for s in range(n):
        for t in range(n):
            st = g.compose.get((s, t))
            if st is not None:
                table[(s, t)] = {st: field.one}
    unit = zero_vec(field, n)
    for e in g.identities():
        unit[e] = field.one
    alg = FinAlgebra(field, n, table, unit,
                     labels=["u_%s" % g.name_of(m) for m in range(n)])
    delta = [{m * n + m: field.one} for m in range(n)]
    eps = [field.one] * n
    coalg = FinCoalgebra(field, n, delta, eps)
    S = Matrix.zeros(field, n, n)
    for m in range(n):
        S.rows[g.inverse[m]][m] = field.one
    return WeakHopfAlgebra(alg, coalg, S)


def dual_groupoid_algebra(g: Groupoid, field) -> WeakHopfAlgebra:
    """Gk = (kG)^*: basis v_s dual to u_s, pointwise product,
    comultiplication dual to composition."""
    g.require_valid()
    n = g.n_morphisms
    table = {(s, s): {s: field.one} for s in range(n)}
    unit = [field.one] * n
    alg = FinAlgebra(field, n, table, unit,
                     labels=["v_%s" % g.name_of(m) for m in range(n)])
    delta = [dict() for _ in range(n)]
    for (t, r), s in g.compose.items():
        sp_add(delta[s], t * n + r, field.one)
    idset = set(g.identities())
    eps = [field.one if m in idset else field.zero for m in range(n)]
    coalg = FinCoalgebra(field, n, delta, eps)
    S = Matrix.zeros(field, n, n)
    for m in range(n):
        S.rows[g.inverse[m]][m] = field.one
    return WeakHopfAlgebra(alg, coalg, S)


def pairing_check(h: WeakHopfAlgebra, d: WeakHopfAlgebra):
    """Check that d is the dual of h under <v_s, u_t> = delta_{s,t}.

    Returns a list of violated dualities (empty means ok).
    """
    if h.dim != d.dim or h.field != d.field:
        return ["dimension or field mismatch between the pair"]
    n = h.dim
    bad = []
    for s in range(n):
        for a in range(n):
            for b in range(n):
                # <Delta_d(v_s), u_a (x) u_b> vs <v_s, u_a u_b>
                lhs = d.coalg.delta[s].get(a * n + b, h.field.zero)
                rhs = h.alg.basis_product(a, b).get(s, h.field.zero)
                if lhs != rhs:
                    bad.append("comultiplication of basis %d is not dual to "
                               "the product on (%d,%d)" % (s, a, b))
    for s in range(n):
        for t in range(n):
            for a in range(n):
                # <v_s v_t, u_a> vs <v_s (x) v_t, Delta_h(u_a)>
                lhs = d.alg.basis_product(s, t).get(a, h.field.zero)
                rhs = h.coalg.delta[a].get(s * n + t, h.field.zero)
                if lhs != rhs:
                    bad.append("product (%d,%d) is not dual to the "
                               "comultiplication on %d" % (s, t, a))
    for s in range(n):
        # eps_d(v_s) = <v_s, 1_h>, <1_d, u_s> = eps_h(u_s)
        if d.coalg.eps[s] != h.alg.unit[s]:
            bad.append("counit of the dual disagrees with the unit on %d" % s)
        if d.alg.unit[s] != h.coalg.eps[s]:
            bad.append("unit of the dual disagrees with the counit on %d" % s)
    if d.S.transpose() != h.S:
        bad.append("antipodes are not mutually transpose")
    return bad
