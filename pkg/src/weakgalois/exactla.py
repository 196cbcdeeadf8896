"""Exact dense linear algebra over Q and prime fields F_p.

Everything downstream (weak Hopf axiom checks, canonical maps, Morita
contexts) reduces to rank / kernel / quotient computations done here.
No floating point is used anywhere; scalars are `fractions.Fraction`
or residues mod a prime.

Tensor convention, used globally: the basis of V (x) W is ordered
(v_i (x) w_j) with i outer and j inner, i.e. index = i * dim(W) + j.
"""

from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(ValueError):
    """Operands live over different scalar fields."""


class InconsistencyError(Exception):
    """Two computations that must agree by theorem disagreed.

    This always indicates a library bug, never bad input."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Fp:
    """Residue mod a prime, stored in [0, p)."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def __add__(self, other):
        return Fp(self.val + other.val, self.p)

    def __sub__(self, other):
        return Fp(self.val - other.val, self.p)

    def __mul__(self, other):
        return Fp(self.val * other.val, self.p)

    def __truediv__(self, other):
        return Fp(self.val * pow(other.val, -1, self.p), self.p)

    def __neg__(self):
        return Fp(-self.val, self.p)

    def __eq__(self, other):
        return isinstance(other, Fp) and self.p == other.p and self.val == other.val

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "%d" % self.val


class RationalField:
    name = "rationals"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def parse(self, s):
        return Fraction(str(s))

    def to_str(self, x):
        return str(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rationals")


class PrimeField:
    def __init__(self, p):
        if not is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        self.p = p
        self.name = "GF(%d)" % p
        self.zero = Fp(0, p)
        self.one = Fp(1, p)

    def from_int(self, n):
        return Fp(n, self.p)

    def parse(self, s):
        if isinstance(s, int):
            return Fp(s, self.p)
        s = str(s)
        if "/" in s:
            a, b = s.split("/")
            return Fp(int(a), self.p) / Fp(int(b), self.p)
        return Fp(int(s), self.p)

    def to_str(self, x):
        return str(x.val)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()

_gf_cache = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


# ---------------------------------------------------------------------------
# vectors (plain lists of scalars)

def zero_vec(field, n):
    return [field.zero] * n


def unit_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * a for a in v]


def vec_is_zero(v):
    return not any(v)


def kron_vec(field, u, v):
    """(u (x) v) under the global ordering: index = i * len(v) + j."""
    out = []
    zero = field.zero
    zeros = [zero] * len(v)
    for a in u:
        if a:
            out.extend(a * b for b in v)
        else:
            out.extend(zeros)
    return out


def sp_add(d, k, c):
    """Accumulate c into sparse dict d at key k, dropping zeros."""
    if not c:
        return
    cur = d.get(k)
    if cur is None:
        d[k] = c
    else:
        s = cur + c
        if s:
            d[k] = s
        else:
            del d[k]


def sp_to_dense(field, d, n):
    v = [field.zero] * n
    for k, c in d.items():
        v[k] = c
    return v


def sp_from_dense(v):
    return {i: c for i, c in enumerate(v) if c}


def sp_equal(d1, d2):
    return d1 == d2


# ---------------------------------------------------------------------------


class Matrix:
    """Dense matrix over an exact field; rows of lists.

    A linear map V -> W is a Matrix with nrows = dim W, ncols = dim V.
    """

    __slots__ = ("field", "nrows", "ncols", "rows", "_rref")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            for r in self.rows:
                if len(r) != self.ncols:
                    raise ValueError("ragged rows")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs explicit ncols")
            self.ncols = ncols
        self._rref = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[field.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[field.one if i == j else field.zero for j in range(n)]
                           for i in range(n)], n)

    @classmethod
    def from_cols(cls, field, cols, nrows):
        m = cls.zeros(field, nrows, len(cols))
        for j, c in enumerate(cols):
            for i, x in enumerate(c):
                m.rows[i][j] = x
        return m

    @classmethod
    def from_function(cls, field, nrows, ncols, f):
        return cls(field, [[f(i, j) for j in range(ncols)] for i in range(nrows)], ncols)

    def copy(self):
        return Matrix(self.field, self.rows, self.ncols)

    # -- basic algebra -----------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatchError("mixed scalar fields")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __add__(self, other):
        self._check(other)
        return Matrix(self.field, [vec_add(a, b) for a, b in zip(self.rows, other.rows)],
                      self.ncols)

    def __sub__(self, other):
        self._check(other)
        return Matrix(self.field, [vec_sub(a, b) for a, b in zip(self.rows, other.rows)],
                      self.ncols)

    def __neg__(self):
        return Matrix(self.field, [[-x for x in r] for r in self.rows], self.ncols)

    def scale(self, c):
        return Matrix(self.field, [vec_scale(c, r) for r in self.rows], self.ncols)

    def __mul__(self, other):
        """Matrix product (composition of linear maps)."""
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %dx%d * %dx%d"
                             % (self.nrows, self.ncols, other.nrows, other.ncols))
        zero = self.field.zero
        out = [[zero] * other.ncols for _ in range(self.nrows)]
        orows = other.rows
        for i, arow in enumerate(self.rows):
            orow = out[i]
            for k, a in enumerate(arow):
                if a:
                    brow = orows[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] = orow[j] + a * b
        return Matrix(self.field, out, other.ncols)

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        zero = self.field.zero
        out = [zero] * self.nrows
        for i, row in enumerate(self.rows):
            s = zero
            for a, b in zip(row, vec):
                if a and b:
                    s = s + a * b
            out[i] = s
        return out

    def apply_sparse(self, sp):
        """Apply to a sparse dict vector; returns a sparse dict."""
        out = {}
        for j, c in sp.items():
            for i, row in enumerate(self.rows):
                a = row[j]
                if a:
                    sp_add(out, i, a * c)
        return out

    def col(self, j):
        return [r[j] for r in self.rows]

    def cols(self):
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix(self.field, [list(c) for c in zip(*self.rows)] if self.nrows else [],
                      self.nrows)

    def kron(self, other):
        """Kronecker product under the global tensor ordering."""
        self._check(other)
        zero = self.field.zero
        rn, cn = other.nrows, other.ncols
        out = [[zero] * (self.ncols * cn) for _ in range(self.nrows * rn)]
        for i, arow in enumerate(self.rows):
            for j, a in enumerate(arow):
                if a:
                    for k, brow in enumerate(other.rows):
                        orow = out[i * rn + k]
                        base = j * cn
                        for l, b in enumerate(brow):
                            if b:
                                orow[base + l] = a * b
        return Matrix(self.field, out, self.ncols * cn)

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    # -- elimination -------------------------------------------------------

    def rref(self):
        """Reduced row echelon form and the pivot column list."""
        if self._rref is not None:
            return self._rref
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            # find a pivot row
            pr = None
            for i in range(r, self.nrows):
                if rows[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            pv = rows[r][c]
            if pv != self.field.one:
                rows[r] = [x / pv for x in rows[r]]
            prow = rows[r]
            for i in range(self.nrows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        self._rref = (Matrix(self.field, rows, self.ncols), tuple(pivots))
        return self._rref

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Null space {v | M v = 0} as a Subspace of k^ncols."""
        R, pivots = self.rref()
        pivset = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivset]
        basis = []
        for j in free:
            v = [self.field.zero] * self.ncols
            v[j] = self.field.one
            for r, p in enumerate(pivots):
                x = R.rows[r][j]
                if x:
                    v[p] = -x
            basis.append(v)
        return Subspace.from_spanning(self.field, self.ncols, basis)

    def column_space(self):
        """Image of the map, as a Subspace of k^nrows."""
        return Subspace.from_spanning(self.field, self.nrows, self.cols())

    image = column_space

    def solve(self, b):
        """One solution of M x = b, or None if inconsistent."""
        aug = Matrix(self.field, [row + [bi] for row, bi in zip(self.rows, b)],
                     self.ncols + 1)
        R, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [self.field.zero] * self.ncols
        for r, p in enumerate(pivots):
            x[p] = R.rows[r][self.ncols]
        return x

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("not square")
        n = self.nrows
        aug = Matrix(self.field,
                     [self.rows[i] + Matrix.identity(self.field, n).rows[i]
                      for i in range(n)], 2 * n)
        R, pivots = aug.rref()
        if list(pivots) != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(self.field, [R.rows[i][n:] for i in range(n)], n)

    def __repr__(self):
        return "Matrix(%dx%d over %r)" % (self.nrows, self.ncols, self.field)


class Subspace:
    """Subspace of k^ambient, basis kept in reduced echelon form."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, ambient, basis, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, [], [])

    @classmethod
    def full(cls, field, ambient):
        return cls.from_spanning(field, ambient,
                                 Matrix.identity(field, ambient).rows)

    @classmethod
    def from_spanning(cls, field, ambient, vectors):
        sub = cls.zero(field, ambient)
        for v in vectors:
            sub._insert(list(v))
        return sub

    def _insert(self, v):
        """Reduce v against the basis; extend the basis if independent."""
        v = self.reduce(v)
        lead = None
        for j, x in enumerate(v):
            if x:
                lead = j
                break
        if lead is None:
            return False
        pv = v[lead]
        if pv != self.field.one:
            v = [x / pv for x in v]
        # back-reduce existing rows at the new pivot column
        for row in self.basis:
            x = row[lead]
            if x:
                for j in range(self.ambient):
                    row[j] = row[j] - x * v[j]
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < lead:
            pos += 1
        self.basis.insert(pos, v)
        self.pivots.insert(pos, lead)
        return True

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, v):
        """Residual of v after subtracting its span component."""
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            x = v[p]
            if x:
                for j in range(self.ambient):
                    if row[j]:
                        v[j] = v[j] - x * row[j]
        return v

    def contains(self, v):
        return vec_is_zero(self.reduce(v))

    def coordinates(self, v):
        """Coordinates of v in the echelon basis; None if v is outside."""
        coords = [v[p] for p in self.pivots]
        if not vec_is_zero(self.reduce(v)):
            return None
        return coords

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient == other.ambient and self.pivots == other.pivots
                and self.basis == other.basis)

    def is_contained_in(self, other):
        return all(other.contains(v) for v in self.basis)

    def add(self, other):
        return Subspace.from_spanning(self.field, self.ambient,
                                      self.basis + other.basis)

    def inclusion(self):
        """ambient x dim matrix whose columns are the basis vectors."""
        return Matrix.from_cols(self.field, self.basis, self.ambient)

    def __repr__(self):
        return "Subspace(dim %d of k^%d)" % (self.dim, self.ambient)


class QuotientSpace:
    """k^ambient modulo a relations subspace, with projection and section.

    Quotient coordinates are the non-pivot ambient coordinates of the
    relations' echelon basis; projection o section = identity and the
    kernel of the projection is exactly the relations subspace.
    """

    __slots__ = ("field", "ambient", "relations", "free", "dim")

    def __init__(self, relations: Subspace):
        self.field = relations.field
        self.ambient = relations.ambient
        self.relations = relations
        pivset = set(relations.pivots)
        self.free = [j for j in range(self.ambient) if j not in pivset]
        self.dim = len(self.free)

    def project(self, v):
        r = self.relations.reduce(v)
        return [r[j] for j in self.free]

    def lift(self, q):
        v = [self.field.zero] * self.ambient
        for x, j in zip(q, self.free):
            v[j] = x
        return v

    def projection_matrix(self):
        return Matrix.from_cols(self.field,
                                [self.project(unit_vec(self.field, self.ambient, j))
                                 for j in range(self.ambient)], self.dim)

    def section_matrix(self):
        return Matrix.from_cols(self.field,
                                [self.lift(unit_vec(self.field, self.dim, j))
                                 for j in range(self.dim)], self.ambient)

    def __repr__(self):
        return "QuotientSpace(k^%d / dim-%d relations)" % (self.ambient,
                                                           self.relations.dim)


def quotient_by(relations: Subspace, ambient: int) -> QuotientSpace:
    if relations.ambient != ambient:
        raise ValueError("relations live in k^%d, not k^%d"
                         % (relations.ambient, ambient))
    return QuotientSpace(relations)


def rref(m: Matrix):
    return m.rref()


def kernel(m: Matrix) -> Subspace:
    return m.kernel()


def image(m: Matrix) -> Subspace:
    return m.column_space()


def solve(m: Matrix, b):
    return m.solve(b)


def kron(a: Matrix, b: Matrix) -> Matrix:
    return a.kron(b)


def induced_on_quotients(F: Matrix, src: QuotientSpace, dst: QuotientSpace) -> Matrix:
    """Descend an ambient-level map to the quotients.

    Raises if F does not map src relations into dst relations: descending
    is a proof obligation, not an assumption.
    """
    for r in src.relations.basis:
        if not dst.relations.contains(F.apply(r)):
            raise ValueError("map does not descend to the quotient")
    cols = [dst.project(F.apply(src.lift(unit_vec(src.field, src.dim, j))))
            for j in range(src.dim)]
    return Matrix.from_cols(src.field, cols, dst.dim)
