"""Finite groupoids: validated composition/inverse tables and constructors.

Composition convention, inherited by every other module: ``compose(s, t)``
is "t then s" and is defined exactly when ``target(t) == source(s)``.
Object and morphism ids are dense integers; names are metadata only.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Groupoid:
    n_objects: int
    # per-morphism (source object, target object)
    morphisms: list
    # (s, t) -> st, present exactly when composable
    compose: dict
    inverse: list
    # object -> its identity morphism
    identity: list
    object_names: list = field(default=None)
    morphism_names: list = field(default=None)

    @property
    def n_morphisms(self):
        return len(self.morphisms)

    def source(self, m):
        return self.morphisms[m][0]

    def target(self, m):
        return self.morphisms[m][1]

    def composable(self, s, t):
        """Whether the product s.t ("t then s") is defined."""
        return self.target(t) == self.source(s)

    def is_identity(self, m):
        s, t = self.morphisms[m]
        return s == t and self.identity[s] == m

    def identities(self):
        return list(self.identity)

    def name_of(self, m):
        if self.morphism_names:
            return self.morphism_names[m]
        return "m%d" % m

    def validate(self):
        """Return a list of violated-law descriptions (empty means ok)."""
        bad = []
        n = self.n_morphisms
        for s in range(n):
            for t in range(n):
                defined = (s, t) in self.compose
                if defined != self.composable(s, t):
                    bad.append("compose(%s,%s) %s defined but morphisms are %scomposable"
                               % (self.name_of(s), self.name_of(t),
                                  "is" if defined else "is not",
                                  "" if self.composable(s, t) else "not "))
                    continue
                if defined:
                    st = self.compose[(s, t)]
                    if self.source(st) != self.source(t) or self.target(st) != self.target(s):
                        bad.append("source/target of %s.%s inconsistent"
                                   % (self.name_of(s), self.name_of(t)))
        if bad:
            return bad
        # associativity over all composable triples
        for s in range(n):
            for t in range(n):
                if (s, t) not in self.compose:
                    continue
                st = self.compose[(s, t)]
                for u in range(n):
                    if (t, u) not in self.compose:
                        continue
                    tu = self.compose[(t, u)]
                    if self.compose[(st, u)] != self.compose[(s, tu)]:
                        bad.append("associativity fails on (%s,%s,%s)"
                                   % (self.name_of(s), self.name_of(t), self.name_of(u)))
        for x in range(self.n_objects):
            e = self.identity[x]
            if self.morphisms[e] != (x, x):
                bad.append("identity of object %d has wrong source/target" % x)
        for m in range(n):
            s, t = self.morphisms[m]
            if self.compose.get((self.identity[t], m)) != m:
                bad.append("left identity law fails for %s" % self.name_of(m))
            if self.compose.get((m, self.identity[s])) != m:
                bad.append("right identity law fails for %s" % self.name_of(m))
            inv = self.inverse[m]
            if self.morphisms[inv] != (t, s):
                bad.append("inverse of %s has wrong source/target" % self.name_of(m))
            elif self.compose.get((m, inv)) != self.identity[t]:
                bad.append("m . m^-1 != id_target for %s" % self.name_of(m))
            elif self.compose.get((inv, m)) != self.identity[s]:
                bad.append("m^-1 . m != id_source for %s" % self.name_of(m))
        return bad

    def require_valid(self):
        bad = self.validate()
        if bad:
            raise ValueError("invalid groupoid: " + "; ".join(bad))


def pair_groupoid(n: int) -> Groupoid:
    """Objects 0..n-1, one morphism (i,j): j -> i, (i,j).(j,l) = (i,l)."""
    if n < 1:
        raise ValueError("pair groupoid needs at least one object")
    idx = {}
    morphisms = []
    names = []
    for i in range(n):
        for j in range(n):
            idx[(i, j)] = len(morphisms)
            morphisms.append((j, i))
            names.append("(%d,%d)" % (i, j))
    compose = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                compose[(idx[(i, j)], idx[(j, l)])] = idx[(i, l)]
    # inverse of (i,j): j -> i is (j,i): i -> j
    inverse = [idx[(src, tgt)] for (src, tgt) in morphisms]
    identity = [idx[(i, i)] for i in range(n)]
    return Groupoid(n, morphisms, compose, inverse, identity,
                    morphism_names=names)


def from_group(table) -> Groupoid:
    """One-object groupoid from a group multiplication table.

    ``table[i][j]`` is the product i.j; the table is checked to be a group.
    """
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise ValueError("malformed multiplication table")
    # identity
    e = None
    for i in range(n):
        if all(table[i][j] == j and table[j][i] == j for j in range(n)):
            e = i
            break
    if e is None:
        raise ValueError("multiplication table has no identity")
    for i in range(n):
        for j in range(n):
            for l in range(n):
                if table[table[i][j]][l] != table[i][table[j][l]]:
                    raise ValueError("multiplication table is not associative")
    inverse = [None] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == e and table[j][i] == e:
                inverse[i] = j
    if any(v is None for v in inverse):
        raise ValueError("multiplication table has a non-invertible element")
    compose = {(i, j): table[i][j] for i in range(n) for j in range(n)}
    morphisms = [(0, 0)] * n
    return Groupoid(1, morphisms, compose, inverse, [e])


def cyclic_group(n: int) -> Groupoid:
    """Z/n as a one-object groupoid."""
    if n < 1:
        raise ValueError("n must be positive")
    return from_group([[(i + j) % n for j in range(n)] for i in range(n)])


def disjoint_union(g1: Groupoid, g2: Groupoid) -> Groupoid:
    no, nm = g1.n_objects, g1.n_morphisms
    morphisms = list(g1.morphisms) + [(s + no, t + no) for (s, t) in g2.morphisms]
    compose = dict(g1.compose)
    for (s, t), st in g2.compose.items():
        compose[(s + nm, t + nm)] = st + nm
    inverse = list(g1.inverse) + [m + nm for m in g2.inverse]
    identity = list(g1.identity) + [m + nm for m in g2.identity]
    return Groupoid(no + g2.n_objects, morphisms, compose, inverse, identity)
