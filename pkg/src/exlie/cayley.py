"""The complexified Cayley algebra (octonions over Q(i)) and its machinery.

Basis e0=1, e1..e7.  Multiplication comes from Cayley-Dickson doubling of
the quaternions, (a + b*e4)(c + d*e4) = (ac - conj(d)b) + (da + b*conj(c))e4,
followed by a sign flip of the e6 basis vector.  That flip is the unique
adjustment under which phi_g2(e1,1) and phi_g2(e2,1) reproduce the 8x8
matrices that anchor every later fixed-point computation; the laws
(alternativity, composition) are unaffected by basis sign changes and are
checked in the test suite.
"""

from __future__ import annotations

from functools import lru_cache

from .scalars import QI, qi
from . import linalg

DIM = 8

# -- multiplication table ----------------------------------------------------

_QT = {}
for _i in range(4):
    _QT[(0, _i)] = (_i, 1)
    _QT[(_i, 0)] = (_i, 1)
for _i in (1, 2, 3):
    _QT[(_i, _i)] = (0, -1)
for _a, _b, _c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
    _QT[(_a, _b)] = (_c, 1)
    _QT[(_b, _a)] = (_c, -1)


def _build_table():
    def qmul(x, y):
        out = [0] * 4
        for i in range(4):
            if x[i]:
                for j in range(4):
                    if y[j]:
                        k, s = _QT[(i, j)]
                        out[k] += s * x[i] * y[j]
        return out

    def qconj(x):
        return [x[0], -x[1], -x[2], -x[3]]

    signs = [1, 1, 1, 1, 1, 1, -1, 1]
    table = [[None] * 8 for _ in range(8)]
    for i in range(8):
        for j in range(8):
            x = [0] * 8
            y = [0] * 8
            x[i] = signs[i]
            y[j] = signs[j]
            a, b = x[:4], x[4:]
            c, d = y[:4], y[4:]
            first = [p - q for p, q in zip(qmul(a, c), qmul(qconj(d), b))]
            second = [p + q for p, q in zip(qmul(d, a), qmul(b, qconj(c)))]
            z = [v * s for v, s in zip(first + second, signs)]
            nz = [k for k, v in enumerate(z) if v]
            assert len(nz) == 1 and abs(z[nz[0]]) == 1
            table[i][j] = (nz[0], z[nz[0]])
    return table


MUL_TABLE = _build_table()

_Z = qi(0)
_ONE = qi(1)


class Cayley:
    """An element of the complexified Cayley algebra: 8 Q(i)-coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = tuple(qi(x) for x in coeffs)
        assert len(c) == 8
        self.c = c

    @staticmethod
    def unit(i):
        return Cayley([_ONE if k == i else _Z for k in range(8)])

    @staticmethod
    def zero():
        return Cayley([_Z] * 8)

    @staticmethod
    def scalar(a):
        v = [_Z] * 8
        v[0] = qi(a)
        return Cayley(v)

    def __add__(self, other):
        return Cayley([a + b for a, b in zip(self.c, other.c)])

    def __sub__(self, other):
        return Cayley([a - b for a, b in zip(self.c, other.c)])

    def __neg__(self):
        return Cayley([-a for a in self.c])

    def scale(self, a):
        a = qi(a)
        return Cayley([a * x for x in self.c])

    def __mul__(self, other):
        out = [_Z] * 8
        for i, x in enumerate(self.c):
            if not x:
                continue
            for j, y in enumerate(other.c):
                if not y:
                    continue
                k, s = MUL_TABLE[i][j]
                out[k] = out[k] + (x * y if s > 0 else -(x * y))
        return Cayley(out)

    def conj(self):
        c = self.c
        return Cayley([c[0]] + [-v for v in c[1:]])

    def tau(self):
        return Cayley([v.conj() for v in self.c])

    def inner(self, other):
        s = _Z
        for a, b in zip(self.c, other.c):
            s = s + a * b
        return s

    def norm_sq(self):
        return (self * self.conj()).c[0]

    def is_quaternionic(self):
        return all(not v for v in self.c[4:])

    def __eq__(self, other):
        return isinstance(other, Cayley) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __str__(self):
        parts = []
        for i, v in enumerate(self.c):
            if v:
                parts.append("(%s)e%d" % (v, i) if i else "(%s)" % v)
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


E = [Cayley.unit(i) for i in range(8)]


def mul(x, y):
    return x * y


def inner(x, y):
    return x.inner(y)


# -- 8x8 matrices over QI ----------------------------------------------------

def mat_vec(m, x):
    out = [_Z] * 8
    for j, v in enumerate(x.c):
        if not v:
            continue
        col = m[j]
        for i in range(8):
            if col[i]:
                out[i] = out[i] + col[i] * v
    return Cayley(out)


def mat_from_images(images):
    """Column-major matrix: m[j][i] = coefficient of e_i in image of e_j."""
    return tuple(tuple(img.c) for img in images)


def mat_entry(m, i, j):
    return m[j][i]


def mat_mul(a, b):
    return mat_from_images([mat_vec(a, mat_vec_b) for mat_vec_b in [Cayley(col) for col in b]])


def mat_eq(a, b):
    return all(mat_entry(a, i, j) == mat_entry(b, i, j) for i in range(8) for j in range(8))


def mat_add(a, b, ca=1, cb=1):
    ca, cb = qi(ca), qi(cb)
    return tuple(tuple(ca * a[j][i] + cb * b[j][i] for i in range(8)) for j in range(8))


def identity_mat():
    return mat_from_images([Cayley.unit(i) for i in range(8)])


def is_skew(m):
    return all(mat_entry(m, i, j) == -mat_entry(m, j, i) for i in range(8) for j in range(8))


def g_so8(a, b):
    """G_ab: e_b -> e_a, e_a -> -e_b, zero elsewhere (skew generator)."""
    imgs = []
    for j in range(8):
        if j == b:
            imgs.append(Cayley.unit(a))
        elif j == a:
            imgs.append(-Cayley.unit(b))
        else:
            imgs.append(Cayley.zero())
    return mat_from_images(imgs)


def so8_combo(pairs):
    """Sum of c*(i G_ab)-style terms: ``pairs`` maps (a,b) -> QI coefficient."""
    acc = [[_Z] * 8 for _ in range(8)]
    for (a, b), c in pairs.items():
        c = qi(c)
        if not c:
            continue
        g = g_so8(a, b)
        for j in range(8):
            for i in range(8):
                if g[j][i]:
                    acc[j][i] = acc[j][i] + c * g[j][i]
    return tuple(tuple(row) for row in acc)


def so8_pairs(m):
    """Inverse of ``so8_combo`` for a skew matrix."""
    if not is_skew(m):
        raise ValueError("matrix is not skew-symmetric")
    out = {}
    for a in range(8):
        for b in range(a + 1, 8):
            v = mat_entry(m, a, b)
            if v:
                out[(a, b)] = v
    return out


# -- the G2-type automorphisms ----------------------------------------------

def quaternion_automorphism(q):
    """m -> q m conj(q) on the quaternion subalgebra (q a unit quaternion)."""
    if not q.is_quaternionic() or q.norm_sq() != _ONE:
        raise ValueError("q must be a unit quaternion")
    qc = q.conj()
    return lambda m: (q * m) * qc


def phi_g2(p, q):
    """The automorphism m + n e4 -> q m conj(q) + (p n conj(q)) e4, as an
    8x8 matrix (p, q unit quaternions)."""
    for u in (p, q):
        if not u.is_quaternionic():
            raise ValueError("phi_g2 requires quaternionic parameters")
        if u.norm_sq() != _ONE:
            raise ValueError("phi_g2 requires unit quaternions")
    e4 = Cayley.unit(4)
    qc = q.conj()
    imgs = []
    for j in range(8):
        x = Cayley.unit(j)
        m = Cayley(list(x.c[:4]) + [_Z] * 4)
        xh = Cayley([_Z] * 4 + list(x.c[4:]))
        n = -(xh * e4)  # (n e4) e4 = -n by alternativity
        assert n.is_quaternionic()
        mm = (q * m) * qc
        nn = (p * n) * qc
        imgs.append(mm + nn * e4)
    return mat_from_images(imgs)


@lru_cache(maxsize=None)
def epsilon_gamma():
    """(eps1, eps2, gamma) = phi_g2(e1,1), phi_g2(e2,1), phi_g2(-1,1)."""
    one = Cayley.scalar(1)
    eps1 = phi_g2(Cayley.unit(1), one)
    eps2 = phi_g2(Cayley.unit(2), one)
    gamma = phi_g2(-one, one)
    return eps1, eps2, gamma


# -- infinitesimal triality ----------------------------------------------

_G_PAIRS = [(a, b) for a in range(8) for b in range(a + 1, 8)]


def _triality_rows():
    """Coefficient rows of the triality linear system.

    Unknowns: 28 entries of D2 then 28 of D3.  Equation for basis pair
    (i, j), component k:  e_i (D2 e_j) - conj(D3 conj(e_i e_j)) = -(D1 e_i) e_j.
    """
    rows = []
    index = {}
    for i in range(8):
        for j in range(8):
            for k in range(8):
                index[(i, j, k)] = len(index)
                rows.append({})
    conj_sign = [1] + [-1] * 7
    for i in range(8):
        ei = Cayley.unit(i)
        for j in range(8):
            m, s = MUL_TABLE[i][j]
            for u, (a, b) in enumerate(_G_PAIRS):
                # D2 part: e_i (G_ab e_j)
                if j == b:
                    prod = ei * Cayley.unit(a)
                elif j == a:
                    prod = -(ei * Cayley.unit(b))
                else:
                    prod = None
                if prod is not None:
                    for k, v in enumerate(prod.c):
                        if v:
                            r = rows[index[(i, j, k)]]
                            r[u] = r.get(u, _Z) + v
                # D3 part: -conj(D3 conj(e_i e_j)); e_i e_j = s e_m
                cm = s * conj_sign[m]
                if m == b:
                    tgt, tsgn = a, cm
                elif m == a:
                    tgt, tsgn = b, -cm
                else:
                    continue
                val = qi(-tsgn * conj_sign[tgt])
                r = rows[index[(i, j, tgt)]]
                r[28 + u] = r.get(28 + u, _Z) + val
    return rows, index


@lru_cache(maxsize=None)
def _triality_solutions():
    rows, index = _triality_rows()
    rhss = []
    for (a, b) in _G_PAIRS:
        g = g_so8(a, b)
        rhs = {}
        for i in range(8):
            gi = mat_vec(g, Cayley.unit(i))
            for j in range(8):
                prod = gi * Cayley.unit(j)
                for k, v in enumerate(prod.c):
                    if v:
                        rhs[index[(i, j, k)]] = -v
        rhss.append(rhs)
    return linalg.solve_exact(rows, rhss, 56)


def triality_companions(d1):
    """Unique (D1, D2, D3) with (D1 x)y + x(D2 y) = conj(D3 conj(xy))."""
    if not is_skew(d1):
        raise ValueError("triality input must be skew-symmetric")
    sols = _triality_solutions()
    acc = {}
    for u, (a, b) in enumerate(_G_PAIRS):
        c = mat_entry(d1, a, b)
        if not c:
            continue
        linalg.vec_iadd(acc, sols[u], c)
    d2_pairs = {}
    d3_pairs = {}
    for u, (a, b) in enumerate(_G_PAIRS):
        v2 = acc.get(u)
        if v2 is not None and v2:
            d2_pairs[(a, b)] = v2
        v3 = acc.get(28 + u)
        if v3 is not None and v3:
            d3_pairs[(a, b)] = v3
    return d1, so8_combo(d2_pairs), so8_combo(d3_pairs)


def triality_identity_holds(d1, d2, d3):
    for i in range(8):
        x = Cayley.unit(i)
        d1x = mat_vec(d1, x)
        for j in range(8):
            y = Cayley.unit(j)
            lhs = d1x * y + x * mat_vec(d2, y)
            rhs = (mat_vec(d3, (x * y).conj())).conj()
            if lhs != rhs:
                return False
    return True
