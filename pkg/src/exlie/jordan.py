"""Hermitian 3x3 Jordan algebras over the (complexified) Cayley algebra.

Two coefficient algebras are supported: the full octonions (27-dimensional
Jordan algebra) and the quaternion subalgebra (15-dimensional).  The basis
is ordered E1, E2, E3, then F1(e0..), F2(e0..), F3(e0..), so the
quaternionic subspace of the 27-dimensional algebra is a coordinate mask.

Derivations and the determinant-preserving endomorphism algebra are found
as exact nullspaces of the defining linear conditions; those solvers double
as independent oracles for every dimension claim downstream.
"""

from __future__ import annotations

from functools import lru_cache

from .scalars import QI, qi
from .cayley import Cayley, E as CE
from . import linalg

_Z = qi(0)
_ONE = qi(1)
_HALF = qi("1/2")


class JSpace:
    """Basis/coordinate bookkeeping for J(3, K) with K of dimension ncay."""

    def __init__(self, ncay):
        assert ncay in (4, 8)
        self.ncay = ncay
        self.dim = 3 + 3 * ncay

    def findex(self, slot, i):
        """Index of F_{slot+1}(e_i), slot in 0..2, i < ncay."""
        return 3 + slot * self.ncay + i

    def basis_label(self, idx):
        if idx < 3:
            return "E%d" % (idx + 1)
        slot, i = divmod(idx - 3, self.ncay)
        return "F%d(e%d)" % (slot + 1, i)

    def __repr__(self):
        return "JSpace(dim=%d)" % self.dim


OCT = JSpace(8)
QUAT = JSpace(4)


class Jordan:
    """A Hermitian element: three diagonal scalars plus three Cayley entries."""

    __slots__ = ("space", "xi", "x", "_sc")

    def __init__(self, space, xi, x):
        self.space = space
        self.xi = tuple(qi(v) for v in xi)
        self.x = tuple(x)
        self._sc = None
        assert len(self.xi) == 3 and len(self.x) == 3

    # -- constructors ---------------------------------------------------
    @staticmethod
    def zero(space):
        return Jordan(space, (_Z, _Z, _Z), (Cayley.zero(),) * 3)

    @staticmethod
    def diag(space, a, b, c):
        return Jordan(space, (a, b, c), (Cayley.zero(),) * 3)

    @staticmethod
    def unit(space, idx):
        v = [_Z] * space.dim
        v[idx] = _ONE
        return Jordan.from_coords(space, v)

    @staticmethod
    def e_mat(space, k):
        xi = [_Z, _Z, _Z]
        xi[k] = _ONE
        return Jordan(space, xi, (Cayley.zero(),) * 3)

    @staticmethod
    def f_mat(space, slot, a):
        x = [Cayley.zero()] * 3
        x[slot] = a
        return Jordan(space, (_Z, _Z, _Z), x)

    @staticmethod
    def identity(space):
        return Jordan(space, (_ONE, _ONE, _ONE), (Cayley.zero(),) * 3)

    @staticmethod
    def from_coords(space, coords):
        if isinstance(coords, dict):
            dense = [_Z] * space.dim
            for j, v in coords.items():
                dense[j] = qi(v)
            coords = dense
        xi = coords[:3]
        xs = []
        for slot in range(3):
            cc = [_Z] * 8
            for i in range(space.ncay):
                cc[i] = qi(coords[space.findex(slot, i)])
            xs.append(Cayley(cc))
        return Jordan(space, xi, xs)

    def coords(self):
        out = list(self.xi)
        for slot in range(3):
            c = self.x[slot].c
            if self.space.ncay == 4 and any(c[4:]):
                raise ValueError("non-quaternionic entry in quaternionic algebra")
            out.extend(c[: self.space.ncay])
        return out

    def sparse_coords(self):
        if self._sc is None:
            self._sc = {j: v for j, v in enumerate(self.coords()) if v}
        return self._sc

    # -- linear structure -------------------------------------------------
    def __add__(self, other):
        return Jordan(self.space,
                      [a + b for a, b in zip(self.xi, other.xi)],
                      [a + b for a, b in zip(self.x, other.x)])

    def __sub__(self, other):
        return Jordan(self.space,
                      [a - b for a, b in zip(self.xi, other.xi)],
                      [a - b for a, b in zip(self.x, other.x)])

    def __neg__(self):
        return Jordan(self.space, [-a for a in self.xi], [-a for a in self.x])

    def scale(self, c):
        c = qi(c)
        return Jordan(self.space, [c * a for a in self.xi],
                      [a.scale(c) for a in self.x])

    def tau(self):
        return Jordan(self.space, [a.conj() for a in self.xi],
                      [a.tau() for a in self.x])

    def __eq__(self, other):
        return (isinstance(other, Jordan) and self.xi == other.xi
                and self.x == other.x)

    def __bool__(self):
        return any(self.xi) or any(self.x)

    def __hash__(self):
        return hash((self.xi, self.x))

    def is_quaternionic(self):
        return all(v.is_quaternionic() for v in self.x)

    # -- the algebra -------------------------------------------------------
    def _matrix(self):
        x1, x2, x3 = self.x
        d = [Cayley.scalar(v) for v in self.xi]
        return [[d[0], x3, x2.conj()],
                [x3.conj(), d[1], x1],
                [x2, x1.conj(), d[2]]]

    @staticmethod
    def _from_matrix(space, m):
        xi = (m[0][0].c[0], m[1][1].c[0], m[2][2].c[0])
        return Jordan(space, xi, (m[1][2], m[2][0], m[0][1]))

    def jmul_matrix(self, other):
        """The Jordan product (XY + YX)/2, via the literal matrix product.

        Reference implementation; ``jmul`` runs through the cached structure
        table regenerated from this one and equal to it by construction.
        """
        a, b = self._matrix(), other._matrix()
        out = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                s = Cayley.zero()
                for k in range(3):
                    s = s + a[i][k] * b[k][j] + b[i][k] * a[k][j]
                out[i][j] = s.scale(_HALF)
        return Jordan._from_matrix(self.space, out)

    def jmul(self, other):
        tab = _jmul_table(self.space)
        out = {}
        for i, vi in self.sparse_coords().items():
            for j, vj in other.sparse_coords().items():
                cell = tab[i][j]
                if cell:
                    linalg.vec_iadd(out, cell, vi * vj)
        return Jordan.from_coords(self.space, out)

    def trace(self):
        return self.xi[0] + self.xi[1] + self.xi[2]

    def inner(self, other):
        g = gram_diagonal(self.space)
        a, b = self.sparse_coords(), other.sparse_coords()
        if len(a) > len(b):
            a, b = b, a
        s = _Z
        for i, vi in a.items():
            vj = b.get(i)
            if vj is not None:
                s = s + g[i] * vi * vj
        return s

    def cross(self, other):
        """Freudenthal multiplication
        X x Y = (2 X o Y - tr(X)Y - tr(Y)X + (tr(X)tr(Y) - (X,Y))E)/2."""
        tab = _jmul_table(self.space)
        out = {}
        for i, vi in self.sparse_coords().items():
            for j, vj in other.sparse_coords().items():
                cell = tab[i][j]
                if cell:
                    linalg.vec_iadd(out, cell, vi * vj)
        tx, ty = self.trace(), other.trace()
        for k, v in out.items():
            out[k] = v + v
        linalg.vec_iadd(out, other.sparse_coords(), -tx)
        linalg.vec_iadd(out, self.sparse_coords(), -ty)
        c = tx * ty - self.inner(other)
        if c:
            for k in range(3):
                y = out.get(k, _Z) + c
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
        return Jordan.from_coords(self.space,
                                  {k: _HALF * v for k, v in out.items()})

    def trilinear(self, y, z):
        return self.inner(y.cross(z))

    def det(self):
        return self.trilinear(self, self) / qi(3)

    def __str__(self):
        return "Jordan(xi=%s, x=%s)" % ([str(v) for v in self.xi],
                                        [str(v) for v in self.x])

    __repr__ = __str__


@lru_cache(maxsize=None)
def _jmul_table(space):
    """Structure table of the Jordan product: table[i][j] = coords of b_i o b_j,
    generated once from the literal Hermitian matrix product."""
    basis = [Jordan.unit(space, i) for i in range(space.dim)]
    tab = []
    for i in range(space.dim):
        row = []
        for j in range(space.dim):
            prod = basis[i].jmul_matrix(basis[j])
            row.append({k: v for k, v in enumerate(prod.coords()) if v})
        tab.append(row)
    return tab


@lru_cache(maxsize=None)
def gram_diagonal(space):
    """Inner products (b_i, b_i) of the basis (off-diagonals vanish)."""
    basis = [Jordan.unit(space, i) for i in range(space.dim)]
    tab = _jmul_table(space)
    diag = []
    for i in range(space.dim):
        for j in range(i + 1, space.dim):
            prod = tab[i][j]
            assert not (prod.get(0, _Z) + prod.get(1, _Z) + prod.get(2, _Z))
        d = tab[i][i]
        diag.append(d.get(0, _Z) + d.get(1, _Z) + d.get(2, _Z))
    return tuple(diag)


# ---------------------------------------------------------------------------
# endomorphisms of the Jordan vector space
# ---------------------------------------------------------------------------

class Endo:
    """A sparse linear endomorphism in basis coordinates (rows of columns)."""

    __slots__ = ("space", "rows", "_tphi")

    def __init__(self, space, rows=None):
        self.space = space
        self.rows = rows if rows is not None else {}
        self._tphi = None

    @staticmethod
    def from_images(space, images):
        rows = {}
        for j, img in enumerate(images):
            for i, v in enumerate(img.coords()):
                if v:
                    rows.setdefault(i, {})[j] = v
        return Endo(space, rows)

    @staticmethod
    def from_rule(space, fn):
        return Endo.from_images(space, [fn(Jordan.unit(space, j))
                                        for j in range(space.dim)])

    @staticmethod
    def identity(space):
        return Endo(space, {i: {i: _ONE} for i in range(space.dim)})

    def entry(self, i, j):
        return self.rows.get(i, {}).get(j, _Z)

    def apply_coords(self, coords):
        """coords: sparse dict; returns sparse dict."""
        out = {}
        for i, row in self.rows.items():
            s = _Z
            for j, a in row.items():
                x = coords.get(j)
                if x is not None:
                    s = s + a * x
            if s:
                out[i] = s
        return out

    def apply(self, X):
        return Jordan.from_coords(self.space, self.apply_coords(X.sparse_coords()))

    def compose(self, other):
        """self o other (matrix product)."""
        # build column view of self
        cols = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                cols.setdefault(j, {})[i] = v
        rows = {}
        for i2, row2 in other.rows.items():
            col = cols.get(i2)
            if not col:
                continue
            for j2, v2 in row2.items():
                for i, v in col.items():
                    acc = rows.setdefault(i, {})
                    y = acc.get(j2, _Z) + v * v2
                    if y:
                        acc[j2] = y
                    else:
                        del acc[j2]
        return Endo(self.space, {i: r for i, r in rows.items() if r})

    def commutator(self, other):
        return self.compose(other).add(other.compose(self), qi(-1))

    def add(self, other, c=_ONE):
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            acc = rows.setdefault(i, {})
            for j, v in r.items():
                y = acc.get(j, _Z) + c * v
                if y:
                    acc[j] = y
                else:
                    acc.pop(j, None)
        return Endo(self.space, {i: r for i, r in rows.items() if r})

    def scale(self, c):
        c = qi(c)
        if not c:
            return Endo(self.space, {})
        return Endo(self.space,
                    {i: {j: c * v for j, v in r.items()}
                     for i, r in self.rows.items()})

    def trace(self):
        s = _Z
        for i, row in self.rows.items():
            v = row.get(i)
            if v is not None:
                s = s + v
        return s

    def trace_product(self, other):
        """tr(self o other) without forming the product."""
        s = _Z
        for i, row in self.rows.items():
            for j, v in row.items():
                w = other.rows.get(j, {}).get(i)
                if w is not None:
                    s = s + v * w
        return s

    def transpose_gram(self):
        """Transpose with respect to the trace form: (tphi X, Y) = (X, phi Y)."""
        if self._tphi is not None:
            return self._tphi
        g = gram_diagonal(self.space)
        rows = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                rows.setdefault(j, {})[i] = v * g[i] / g[j]
        self._tphi = Endo(self.space, rows)
        return self._tphi

    def tau_conj(self):
        """tau o self o tau (entrywise complex conjugation)."""
        return Endo(self.space,
                    {i: {j: v.conj() for j, v in r.items()}
                     for i, r in self.rows.items()})

    def flat(self):
        """Sparse vector over entry-index i*dim + j (used by the solvers)."""
        d = self.space.dim
        out = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                out[i * d + j] = v
        return out

    @staticmethod
    def from_flat(space, vec):
        d = space.dim
        rows = {}
        for idx, v in vec.items():
            if v:
                rows.setdefault(idx // d, {})[idx % d] = v
        return Endo(space, rows)

    def __eq__(self, other):
        if not isinstance(other, Endo):
            return NotImplemented
        return linalg.vec_eq(self.flat(), other.flat())

    def __bool__(self):
        return any(any(v for v in r.values()) for r in self.rows.values())

    def nnz(self):
        return sum(len(r) for r in self.rows.values())


_MULT_OP_CACHE = {}


def mult_operator(T):
    """The multiplication operator X -> T o X (memoized per element)."""
    key = (T.space.ncay, T.xi, T.x)
    op = _MULT_OP_CACHE.get(key)
    if op is None:
        tab = _jmul_table(T.space)
        rows = {}
        for j in range(T.space.dim):
            col = {}
            for i, vi in T.sparse_coords().items():
                cell = tab[i][j]
                if cell:
                    linalg.vec_iadd(col, cell, vi)
            for k, v in col.items():
                rows.setdefault(k, {})[j] = v
        op = Endo(T.space, rows)
        _MULT_OP_CACHE[key] = op
    return op


def lift_cayley_map(space, map8):
    """Extend an 8x8 Cayley map entrywise: diagonals fixed, F_k(x) -> F_k(map8 x)."""
    from .cayley import mat_entry

    rows = {}
    for k in range(3):
        rows[k] = {k: _ONE}
    for slot in range(3):
        for j in range(space.ncay):
            cj = space.findex(slot, j)
            for i in range(space.ncay):
                v = mat_entry(map8, i, j)
                if v:
                    rows.setdefault(space.findex(slot, i), {})[cj] = v
    return Endo(space, rows)


def d_triple_endo(space, d1, d2, d3):
    """The so(8)-triple action: diagonal -> 0, F_k(x) -> F_k(D_k x)."""
    from .cayley import mat_entry

    rows = {}
    for slot, d in enumerate((d1, d2, d3)):
        for j in range(space.ncay):
            cj = space.findex(slot, j)
            for i in range(space.ncay):
                v = mat_entry(d, i, j)
                if v:
                    rows.setdefault(space.findex(slot, i), {})[cj] = v
    return Endo(space, rows)


def slot_generator(space, slot, a):
    """A derivation moving the E-plane into the F_{slot+1} line: the
    commutator of the multiplication operators of E_{slot+2} and F_{slot+1}(a),
    scaled by 4 to keep entries integral."""
    ek = Jordan.e_mat(space, (slot + 1) % 3)
    fa = Jordan.f_mat(space, slot, a)
    return mult_operator(ek).commutator(mult_operator(fa)).scale(4)


# ---------------------------------------------------------------------------
# solved subspaces (derivations, determinant-form annihilators)
# ---------------------------------------------------------------------------

class SolvedSpace:
    """A nullspace basis in RREF form, with exact coordinate extraction."""

    def __init__(self, space, vectors, ncols):
        self.space = space
        self.vectors = vectors
        self.ncols = ncols
        pivs = set()
        for v in vectors:
            pass
        # free columns: those where exactly one vector carries a 1 and others 0
        frees = []
        for v in vectors:
            cand = [j for j, x in v.items()
                    if x == _ONE and all(
                        (w is v) or (j not in w) for w in vectors)]
            frees.append(min(cand))
        self.free_cols = frees
        self.members = [Endo.from_flat(space, v) for v in vectors]

    @property
    def dim(self):
        return len(self.vectors)

    def coords(self, endo, check=True):
        return linalg.coords_in_rref_span(endo.flat(), self.vectors,
                                          self.free_cols, check=check)

    def contains(self, endo):
        try:
            self.coords(endo, check=True)
            return True
        except ValueError:
            return False

    def from_coords(self, coords):
        acc = {}
        for c, v in zip(coords, self.vectors):
            linalg.vec_iadd(acc, v, qi(c))
        return Endo.from_flat(self.space, acc)


@lru_cache(maxsize=None)
def _mult_op_matrices(space):
    return [mult_operator(Jordan.unit(space, j)) for j in range(space.dim)]


@lru_cache(maxsize=None)
def derivation_basis(space):
    """All endomorphisms with delta(X o Y) = delta X o Y + X o delta Y."""
    d = space.dim
    ops = _mult_op_matrices(space)
    rows = []
    for i in range(d):
        mi = ops[i]
        for j in range(i, d):
            mj = ops[j]
            prod = mj.apply_coords({i: _ONE})  # coords of b_i o b_j
            for k in range(d):
                row = {}
                for m, v in prod.items():
                    row[k * d + m] = row.get(k * d + m, _Z) + v
                for a, v in _column(mj, k).items():
                    key = a * d + i
                    y = row.get(key, _Z) - v
                    if y:
                        row[key] = y
                    else:
                        row.pop(key, None)
                for a, v in _column(mi, k).items():
                    key = a * d + j
                    y = row.get(key, _Z) - v
                    if y:
                        row[key] = y
                    else:
                        row.pop(key, None)
                if row:
                    rows.append(row)
    vecs = linalg.nullspace_rational_rows(rows, d * d)
    return SolvedSpace(space, vecs, d * d)


def _column(op, k):
    """Row k of a mult-operator as {a: (b_a o b_j)_k} (op = mult by b_j)."""
    return op.rows.get(k, {})


@lru_cache(maxsize=None)
def _trilinear_tensor(space):
    """T[i][(j,k)] dense-ish: (b_i, b_j x b_k) with j <= k, stored sparsely."""
    d = space.dim
    basis = [Jordan.unit(space, i) for i in range(d)]
    g = gram_diagonal(space)
    out = {}
    for j in range(d):
        for k in range(j, d):
            cr = basis[j].cross(basis[k]).coords()
            col = {}
            for i in range(d):
                v = g[i] * cr[i]
                if v:
                    col[i] = v
            if col:
                out[(j, k)] = col
    return out


def _tri(space, i, j, k):
    T = _trilinear_tensor(space)
    a, b = min(j, k), max(j, k)
    return T.get((a, b), {}).get(i, _Z)


@lru_cache(maxsize=None)
def e6_basis(space):
    """All phi with (phi X, X, X) = 0, via the polarized linear condition."""
    d = space.dim
    T = _trilinear_tensor(space)
    rows = []
    for i in range(d):
        for j in range(i, d):
            for k in range(j, d):
                row = {}
                for (p, q, r) in ((i, j, k), (j, i, k), (k, i, j)):
                    a, b = min(q, r), max(q, r)
                    col = T.get((a, b))
                    if not col:
                        continue
                    for m, v in col.items():
                        key = m * d + p
                        y = row.get(key, _Z) + v
                        if y:
                            row[key] = y
                        else:
                            row.pop(key, None)
                if row:
                    rows.append(row)
    vecs = linalg.nullspace_rational_rows(rows, d * d)
    return SolvedSpace(space, vecs, d * d)
