"""Exact linear algebra over Q and Q(i).

Vectors are sparse dicts ``{index: QI}``; matrices are dicts of rows.
Small systems go through a plain exact row reducer.  The two large
homogeneous systems in the package (the 27-dimensional Jordan solvers,
~10^4 rows x 729 columns) are routed through a modular pivot-detection
pass (numpy, primes below 2^21 so float64 matmul is exact) followed by
rational reconstruction; every reconstructed nullspace vector is then
verified exactly against the original integer rows, so the fast path can
never silently return a wrong answer.
"""

from __future__ import annotations

import numpy as np

from .scalars import QI, Q, qi

ZERO = qi(0)


# ---------------------------------------------------------------------------
# sparse vector helpers (dicts index -> QI)
# ---------------------------------------------------------------------------

def vec_iadd(acc, v, c=None):
    """acc += c*v in place (c a QI or None for 1)."""
    if c is not None and not c:
        return acc
    for j, x in v.items():
        y = acc.get(j, ZERO) + (x if c is None else c * x)
        if y:
            acc[j] = y
        else:
            acc.pop(j, None)
    return acc


def vec_scale(v, c):
    if not c:
        return {}
    return {j: c * x for j, x in v.items()}


def vec_dot(a, b):
    if len(a) > len(b):
        a, b = b, a
    s = ZERO
    for j, x in a.items():
        y = b.get(j)
        if y is not None:
            s = s + x * y
    return s


def vec_eq(a, b):
    return all(not v for v in vec_iadd(dict(a), b, qi(-1)).values())


# ---------------------------------------------------------------------------
# sparse matrices (dict row-index -> {col: QI})
# ---------------------------------------------------------------------------

def rows_apply(rows, vec):
    out = {}
    cols = {}
    for i, r in rows.items():
        for j, v in r.items():
            cols.setdefault(j, {})[i] = v
    for j, x in vec.items():
        col = cols.get(j)
        if col is None:
            continue
        for i, a in col.items():
            y = out.get(i, ZERO) + a * x
            if y:
                out[i] = y
            else:
                out.pop(i, None)
    return out


def rows_mul(a, b):
    """Matrix product a @ b of sparse row-dicts."""
    out = {}
    for i, ra in a.items():
        acc = {}
        for k, v in ra.items():
            rb = b.get(k)
            if rb is None:
                continue
            for j, w in rb.items():
                y = acc.get(j, ZERO) + v * w
                if y:
                    acc[j] = y
                else:
                    del acc[j]
        if acc:
            out[i] = acc
    return out


def rows_add(a, b, c=None):
    out = {i: dict(r) for i, r in a.items()}
    for i, r in b.items():
        acc = out.setdefault(i, {})
        for j, v in r.items():
            y = acc.get(j, ZERO) + (v if c is None else c * v)
            if y:
                acc[j] = y
            else:
                acc.pop(j, None)
    return {i: r for i, r in out.items() if r}


def rows_scale(a, c):
    if not c:
        return {}
    return {i: {j: c * v for j, v in r.items()} for i, r in a.items()}


def rows_eq(a, b):
    keys = set(a) | set(b)
    for i in keys:
        ra, rb = a.get(i, {}), b.get(i, {})
        for j in set(ra) | set(rb):
            if ra.get(j, ZERO) != rb.get(j, ZERO):
                return False
    return True


def rows_commutator(a, b):
    return rows_add(rows_mul(a, b), rows_mul(b, a), qi(-1))


def rows_trace_product(a, b):
    s = ZERO
    for i, ra in a.items():
        for j, v in ra.items():
            w = b.get(j, {}).get(i)
            if w is not None:
                s = s + v * w
    return s


# ---------------------------------------------------------------------------
# exact row reduction
# ---------------------------------------------------------------------------

class RowReducer:
    """Incremental exact RREF over Q(i) on sparse rows."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivrows = {}  # pivot col -> normalized sparse row

    def reduce_row(self, row):
        """Return ``row`` reduced against the current pivots (fresh dict).

        Pivot rows carry no other pivot columns (full RREF invariant), so a
        single pass over the pivot columns present in ``row`` clears them all.
        """
        row = dict(row)
        for c in sorted(c for c in row if c in self.pivrows):
            x = row.get(c)
            if x is not None and x:
                vec_iadd(row, self.pivrows[c], -x)
        return row

    def add_row(self, row):
        """Insert a row; returns the new pivot column or None if dependent."""
        row = self.reduce_row(row)
        if not row:
            return None
        c = min(row)
        inv = qi(1) / row[c]
        row = vec_scale(row, inv)
        # keep existing pivot rows fully reduced (RREF invariant)
        for pc, prow in self.pivrows.items():
            if c in prow:
                vec_iadd(prow, row, -prow[c])
        self.pivrows[c] = row
        return c

    @property
    def rank(self):
        return len(self.pivrows)

    def pivot_cols(self):
        return sorted(self.pivrows)

    def free_cols(self):
        pivs = set(self.pivrows)
        return [c for c in range(self.ncols) if c not in pivs]

    def nullspace(self):
        """RREF-normalized kernel basis: one vector per free column, carrying
        a 1 at its own free column and 0 at every other free column."""
        out = []
        for f in self.free_cols():
            v = {f: qi(1)}
            for pc, prow in self.pivrows.items():
                x = prow.get(f)
                if x is not None and x:
                    v[pc] = -x
            out.append(v)
        return out


def nullspace_exact(rows, ncols):
    red = RowReducer(ncols)
    for r in rows:
        red.add_row(r)
    return red.nullspace()


def solve_exact(rows, rhss, ncols):
    """Solve A x = b for several right-hand sides; None entry if inconsistent.

    ``rows``: sparse rows of A; ``rhss``: list of dense-ish sparse columns
    keyed by row index.  Raises if a solution is not unique.
    """
    nrhs = len(rhss)
    red = RowReducer(ncols + nrhs)
    for i, r in enumerate(rows):
        aug = dict(r)
        for k, b in enumerate(rhss):
            x = b.get(i)
            if x is not None and x:
                aug[ncols + k] = x
        red.add_row(aug)
    for pc in red.pivrows:
        if pc >= ncols:
            raise ValueError("inconsistent linear system")
    pivs = set(red.pivrows)
    if len(pivs) < ncols:
        raise ValueError("underdetermined linear system")
    sols = []
    for k in range(nrhs):
        v = {}
        for pc, prow in red.pivrows.items():
            x = prow.get(ncols + k)
            if x is not None and x:
                v[pc] = x
        sols.append(v)
    return sols


def coords_in_rref_span(vec, basis, free_cols, check=True):
    """Coordinates of ``vec`` over an RREF-normalized basis.

    The basis vectors each carry a 1 at "their" free column and 0 at the
    others, so coordinates are simply the values at the free columns; with
    ``check`` the reconstruction is compared exactly and a ValueError raised
    if ``vec`` is outside the span.
    """
    coords = [vec.get(f, ZERO) for f in free_cols]
    if check:
        acc = {}
        for c, b in zip(coords, basis):
            vec_iadd(acc, b, c)
        if not vec_eq(acc, vec):
            raise ValueError("vector is not in the spanned subspace")
    return coords


# ---------------------------------------------------------------------------
# modular-accelerated nullspace for large integer systems
# ---------------------------------------------------------------------------

# primes just below 2^21: with at most 1024 columns the float64 matmul
# accumulates sums < 1024 * p^2 < 2^53, hence exactly.
_PRIMES = [2097143, 2097133, 2097131, 2097097, 2097091, 2097083, 2097047,
           2097041, 2097031, 2097023]


def _rref_mod(rows, ncols, p):
    """RREF of integer rows mod p. Returns (pivot_cols, R) with R dense."""
    R = np.zeros((0, ncols), dtype=np.float64)
    pivcols = []
    pending = []
    bs = 512

    def flush(block_rows):
        nonlocal R, pivcols
        B = np.zeros((len(block_rows), ncols), dtype=np.float64)
        for i, r in enumerate(block_rows):
            for j, v in r.items():
                B[i, j] = v % p
        if len(pivcols):
            B = (B - B[:, pivcols] @ R) % p
        for i in range(B.shape[0]):
            row = B[i]
            if len(pivcols):
                coeff = row[pivcols]
                if np.any(coeff):
                    row = (row - coeff @ R) % p
            nz = np.nonzero(row)[0]
            if nz.size == 0:
                continue
            c = int(nz[0])
            inv = pow(int(row[c]), -1, p)
            row = (row * inv) % p
            if len(pivcols):
                col = R[:, c].copy()
                if np.any(col):
                    R = (R - np.outer(col, row)) % p
                rest = B[i + 1:, c].copy()
                if np.any(rest):
                    B[i + 1:] = (B[i + 1:] - np.outer(rest, row)) % p
            else:
                rest = B[i + 1:, c].copy()
                if np.any(rest):
                    B[i + 1:] = (B[i + 1:] - np.outer(rest, row)) % p
            R = np.vstack([R, row[None, :]])
            pivcols.append(c)
        return

    for r in rows:
        pending.append(r)
        if len(pending) >= bs:
            flush(pending)
            pending = []
    if pending:
        flush(pending)
    order = np.argsort(pivcols)
    R = R[order]
    pivcols = [pivcols[i] for i in order]
    return pivcols, R


def _kernel_mod(pivcols, R, ncols, p):
    pivset = set(pivcols)
    free = [c for c in range(ncols) if c not in pivset]
    vecs = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        vecs[k, f] = 1
        for rowi, c in enumerate(pivcols):
            x = int(R[rowi, f]) % p
            if x:
                vecs[k, c] = (-x) % p
    return free, vecs


def _rat_reconstruct(a, m):
    """Rational reconstruction of a mod m (|num|,den <= sqrt(m/2)); None if impossible."""
    a %= m
    bound = int((m // 2) ** 0.5)
    r0, r1 = m, a
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if r1 == 0 or abs(t1) > bound:
        return None
    from math import gcd

    if gcd(r1, abs(t1)) != 1 or gcd(abs(t1), m) != 1:
        return None
    if t1 < 0:
        return Q(-r1, -t1)
    return Q(r1, t1)


def nullspace_int(rows, ncols):
    """Exact rational nullspace basis of a sparse integer system.

    ``rows``: list of dicts {col: int}.  Returns RREF-normalized vectors as
    dicts {col: QI}.  Uses modular arithmetic for speed but verifies the
    result exactly, retrying with more primes if verification fails.
    """
    groups = {}  # pivot signature -> (free, list of (p, vecs))
    for p in _PRIMES:
        pivcols, R = _rref_mod(rows, ncols, p)
        free, vecs = _kernel_mod(pivcols, R, ncols, p)
        key = tuple(pivcols)
        groups.setdefault(key, []).append((p, vecs))
        # prefer the signature with the largest rank seen so far
        best = max(groups, key=len)
        data = groups[best]
        if len(data) < 2:
            continue
        candidate = _reconstruct_kernel(data, ncols, best)
        if candidate is None:
            continue
        if _verify_kernel(rows, candidate):
            return candidate
    raise ArithmeticError("modular nullspace failed to stabilize")


def _reconstruct_kernel(data, ncols, pivcols):
    m = 1
    for p, _ in data:
        m *= p
    pivset = set(pivcols)
    free = [c for c in range(ncols) if c not in pivset]
    nvecs = data[0][1].shape[0]
    out = []
    for k in range(nvecs):
        v = {}
        cols = set()
        for _, vecs in data:
            cols.update(int(c) for c in np.nonzero(vecs[k])[0])
        for c in cols:
            # CRT across primes
            a, mm = 0, 1
            for p, vecs in data:
                r = int(vecs[k][c]) % p
                t = ((r - a) * pow(mm % p, -1, p)) % p
                a, mm = a + mm * t, mm * p
            val = _rat_reconstruct(a, m)
            if val is None:
                return None
            if val:
                v[c] = qi(val)
        out.append(v)
    return out


def _verify_kernel(rows, vecs):
    # exact integer verification: clear denominators per vector
    from math import lcm

    dense = []
    for v in vecs:
        if any(x.im for x in v.values()):
            return False
        den = 1
        for x in v.values():
            den = lcm(den, x.re.denominator)
        dense.append({j: int(x.re * den) for j, x in v.items()})
    for r in rows:
        for v in dense:
            s = 0
            for j, a in r.items():
                b = v.get(j)
                if b is not None:
                    s += a * b
            if s:
                return False
    return True


def nullspace_rational_rows(rows, ncols, force_exact=False):
    """Nullspace for rational sparse rows {col: QI-with-zero-im}.

    Rows are scaled to integers; large systems use the modular path.
    """
    int_rows = []
    from math import lcm

    for r in rows:
        den = 1
        for x in r.values():
            if x.im:
                raise ValueError("nullspace_rational_rows needs rational rows")
            den = lcm(den, x.re.denominator)
        int_rows.append({j: int(x.re * den) for j, x in r.items()})
    if force_exact or len(rows) * ncols <= 200_000:
        return nullspace_exact(rows, ncols)
    return nullspace_int(int_rows, ncols)


# ---------------------------------------------------------------------------
# minimal polynomials and rational eigenvalues
# ---------------------------------------------------------------------------

def matvec_rows(rows, v):
    """rows: dict i -> sparse row dict; v: sparse vector; returns rows @ v."""
    out = {}
    for j, x in v.items():
        col = rows.get(j)
        if col is None:
            continue
        for i, a in col.items():
            y = out.get(i, ZERO) + a * x
            if y:
                out[i] = y
            else:
                out.pop(i, None)
    return out


def min_poly_of_vector(matvec, v, maxdeg):
    """Monic minimal polynomial (low->high coeffs) of ``v`` under ``matvec``."""
    red = RowReducer(10 ** 9)
    krylov = []
    vecs = []
    w = dict(v)
    for d in range(maxdeg + 1):
        reduced = red.reduce_row(w)
        if not reduced:
            # w is a combination of previous iterates: solve for coefficients
            rows = []
            rhs = {}
            support = set()
            for u in vecs:
                support.update(u)
            support = sorted(support)
            idx = {j: i for i, j in enumerate(support)}
            rows = [{} for _ in support]
            for k, u in enumerate(vecs):
                for j, x in u.items():
                    rows[idx[j]][k] = x
            rhsvec = {idx[j]: x for j, x in w.items()}
            sol = solve_overdetermined(rows, rhsvec, len(vecs))
            poly = [-sol.get(k, ZERO) for k in range(len(vecs))] + [qi(1)]
            return poly
        red.add_row(w)
        vecs.append(dict(w))
        w = matvec(w)
    raise ArithmeticError("minimal polynomial exceeds expected degree")


def solve_overdetermined(rows, rhs, ncols):
    """Solve a consistent overdetermined system exactly; returns sparse dict."""
    red = RowReducer(ncols + 1)
    for i, r in enumerate(rows):
        aug = dict(r)
        b = rhs.get(i)
        if b is not None and b:
            aug[ncols] = b
        red.add_row(aug)
    if ncols in red.pivrows:
        raise ValueError("inconsistent system")
    sol = {}
    for pc, prow in red.pivrows.items():
        x = prow.get(ncols)
        if x is not None and x:
            sol[pc] = x
    return sol


def rational_roots(poly):
    """All rational roots (as Q values) of a polynomial over Q, with the
    cofactor after dividing them out.  ``poly`` is low->high QI coeffs."""
    coeffs = list(poly)
    for c in coeffs:
        if c.im:
            raise ArithmeticError("non-rational coefficients in spectrum computation")
    roots = []
    while len(coeffs) > 1:
        # strip x | poly
        if not coeffs[0]:
            roots.append(Q(0))
            coeffs = coeffs[1:]
            continue
        from math import lcm

        den = 1
        for c in coeffs:
            den = lcm(den, c.re.denominator)
        ints = [int(c.re * den) for c in coeffs]
        a0, an = abs(ints[0]), abs(ints[-1])
        found = None
        for p in _divisors(a0):
            for q in _divisors(an):
                for sgn in (1, -1):
                    cand = Q(sgn * p, q)
                    if _poly_eval(coeffs, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        coeffs = _poly_divide_linear(coeffs, found)
    return roots, coeffs


def _divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _poly_eval(coeffs, x):
    acc = qi(0)
    xv = qi(x)
    for c in reversed(coeffs):
        acc = acc * xv + c
    return acc


def _poly_divide_linear(coeffs, root):
    # synthetic division by (x - root); assumes exact divisibility
    n = len(coeffs) - 1
    out = [qi(0)] * n
    carry = coeffs[n]
    for k in range(n - 1, -1, -1):
        out[k] = carry
        carry = coeffs[k] + carry * qi(root)
    return out
