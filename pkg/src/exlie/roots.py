"""Cartan subalgebras, exact root-space decompositions, and Dynkin types.

Everything here works at the coordinate level of a :class:`LieBasis`:
a Cartan candidate is a list of coordinate vectors, roots are tuples of
exact rationals (the simultaneous ad-eigenvalues on the Cartan
generators), and classification proceeds from the exact Cartan matrix.

Eigenvalues are discovered through Krylov minimal polynomials of the
restricted ad maps and extracted with the rational-root theorem; an
irrational eigenvalue aborts loudly (it would mean a wrong Cartan).
"""

from __future__ import annotations

from .scalars import QI, Q, qi
from . import linalg

_Z = qi(0)
_ONE = qi(1)


class Root:
    __slots__ = ("functional", "vector_coords", "element", "multiplicity")

    def __init__(self, functional, vector_coords, element):
        self.functional = functional  # tuple of Q
        self.vector_coords = vector_coords
        self.element = element
        self.multiplicity = 1

    def __repr__(self):
        return "Root(%s)" % (tuple(str(c) for c in self.functional),)


def verify_cartan(basis, cartan_coords):
    """(is_cartan, rank, report): abelian and self-normalizing inside basis."""
    r = len(cartan_coords)
    report = {"rank": r}
    for i in range(r):
        for j in range(i + 1, r):
            if basis.bracket_coords(cartan_coords[i], cartan_coords[j]):
                report["abelian"] = False
                return False, r, report
    report["abelian"] = True
    # linear independence
    red = linalg.RowReducer(basis.dim)
    for c in cartan_coords:
        red.add_row(c)
    if red.rank != r:
        report["independent"] = False
        return False, r, report
    report["independent"] = True
    # self-normalizing: [x, h] in span(h) for all h forces x in span(h)
    proj = _complement_projector(cartan_coords, basis.dim)
    rows = []
    for c in cartan_coords:
        ad = basis.ad_matrix(c)
        # rows of proj o ad, as linear conditions on x
        comp = linalg.rows_mul(proj, ad)
        cols = {}
        for i, rr in comp.items():
            for j, v in rr.items():
                cols.setdefault(i, {})[j] = v
        rows.extend(cols.values())
    normalizer = linalg.nullspace_exact(rows, basis.dim)
    report["normalizer_dim"] = len(normalizer)
    ok = len(normalizer) == r
    report["self_normalizing"] = ok
    return ok, r, report


def _complement_projector(cartan_coords, n):
    """A projector-like map annihilating exactly span(cartan): rows of the
    RREF by pivot columns removed from the identity."""
    red = linalg.RowReducer(n)
    for c in cartan_coords:
        red.add_row(c)
    piv = red.pivrows
    rows = {}
    for i in range(n):
        if i in piv:
            # replace coordinate i by i-th pivot row's free part, negated:
            # x - sum over pivots reconstructs the complement coordinates
            continue
        rows[i] = {i: _ONE}
        for pc, prow in piv.items():
            v = prow.get(i)
            if v is not None and v:
                rows[i][pc] = -v
    return rows


def root_decomposition(basis, cartan_coords, check_cartan=True):
    """Exact simultaneous eigenspace decomposition of the Cartan ad-action.

    Returns (roots, zero_block_dim).  Every root space must be
    one-dimensional; the zero block must coincide with the Cartan span.
    """
    if check_cartan:
        ok, _, report = verify_cartan(basis, cartan_coords)
        if not ok:
            raise ValueError("candidate is not a Cartan subalgebra: %r" % report)
    n = basis.dim
    blocks = [([{i: _ONE} for i in range(n)], ())]
    for c in cartan_coords:
        M = basis.ad_matrix(c)
        new_blocks = []
        for vecs, functional in blocks:
            for eig, kvecs in _split_invariant_subspace(M, vecs, n):
                new_blocks.append((kvecs, functional + (eig,)))
        blocks = new_blocks
    roots = []
    zero_dim = 0
    for vecs, functional in blocks:
        if all(not f for f in functional):
            zero_dim = len(vecs)
            continue
        if len(vecs) != 1:
            raise ArithmeticError(
                "root multiplicity %d > 1 at %r" % (len(vecs), functional))
        roots.append(Root(tuple(functional),
                          vecs[0], basis.combine(vecs[0])))
    return roots, zero_dim


def _split_invariant_subspace(M, vecs, ncols):
    """Split span(vecs) (M-invariant) into exact eigenspaces of M."""
    m = len(vecs)
    if m == 0:
        return []

    def matvec(v):
        return linalg.rows_apply(M, v)

    eigenvalues = []
    covered = linalg.RowReducer(ncols)
    found = []
    for seed in vecs:
        if not covered.reduce_row(seed):
            continue
        poly = linalg.min_poly_of_vector(matvec, seed, m)
        roots, rest = linalg.rational_roots(poly)
        if len(rest) > 1:
            raise ArithmeticError("non-rational ad-eigenvalue encountered")
        for c in roots:
            if c in eigenvalues:
                continue
            eigenvalues.append(c)
            kv = _eigen_kernel(M, vecs, c, ncols)
            found.append((c, kv))
            for v in kv:
                covered.add_row(v)
    total = sum(len(kv) for _, kv in found)
    if total != m:
        raise ArithmeticError("eigenspaces do not exhaust the block")
    return found


def _eigen_kernel(M, vecs, c, ncols):
    """Kernel of (M - c) restricted to span(vecs), lifted back."""
    images = []
    cq = qi(c)
    for v in vecs:
        w = linalg.rows_apply(M, v)
        if cq:
            w = dict(w)
            linalg.vec_iadd(w, v, -cq)
        images.append(w)
    rows_by_coord = {}
    for j, w in enumerate(images):
        for i, val in w.items():
            rows_by_coord.setdefault(i, {})[j] = val
    sol = linalg.nullspace_exact(list(rows_by_coord.values()), len(vecs))
    out = []
    for u in sol:
        acc = {}
        for j, cu in u.items():
            linalg.vec_iadd(acc, vecs[j], cu)
        out.append(acc)
    # renormalize to RREF-like form (leading coefficient one)
    normd = []
    for v in out:
        lead = min(v)
        inv = _ONE / v[lead]
        normd.append(linalg.vec_scale(v, inv))
    return normd


# ---------------------------------------------------------------------------
# root geometry from the Cartan Gram matrix
# ---------------------------------------------------------------------------

def canonical_element(gram, functional):
    """Coordinates (over the Cartan basis) of the element representing the
    functional through the Killing form: solve G x = alpha."""
    r = len(functional)
    rows = [{j: qi(gram[i][j]) for j in range(r) if gram[i][j]}
            for i in range(r)]
    rhs = {i: qi(functional[i]) for i in range(r) if functional[i]}
    sol = linalg.solve_exact(rows, [rhs], r)[0]
    return [sol.get(i, _Z) for i in range(r)]


def root_inner(gram, f1, f2):
    """(f1, f2) = f1^T G^{-1} f2, exactly."""
    x = canonical_element(gram, f2)
    s = _Z
    for i, v in enumerate(f1):
        if v:
            s = s + qi(v) * x[i]
    if s.im:
        raise ArithmeticError("non-rational root inner product")
    return s.re


def fundamental_expansion(roots, pi):
    """Expand every root over the simple system pi with integer coefficients
    of uniform sign; raises if pi is dependent or a root fails to expand."""
    r = len(pi[0])
    rows = [{j: qi(pi[j][i]) for j in range(len(pi)) if pi[j][i]}
            for i in range(r)]
    red = linalg.RowReducer(len(pi))
    for row in rows:
        red.add_row(row)
    if red.rank != len(pi):
        raise ValueError("simple system is linearly dependent")
    table = {}
    for root in roots:
        rhs = {i: qi(root[i]) for i in range(r) if root[i]}
        sol = linalg.solve_overdetermined(rows, rhs, len(pi))
        coeffs = []
        for j in range(len(pi)):
            v = sol.get(j, _Z)
            if v.im or v.re.denominator != 1:
                raise ValueError("non-integer expansion for root %r" % (root,))
            coeffs.append(int(v.re))
        if not (all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)):
            raise ValueError("mixed-sign expansion for root %r" % (root,))
        table[root] = tuple(coeffs)
    return table


def cartan_matrix(pi, gram):
    """A_ij = 2 (a_i, a_j) / (a_j, a_j), checked to be a valid integral
    generalized Cartan matrix."""
    r = len(pi)
    inners = [[root_inner(gram, pi[i], pi[j]) for j in range(r)]
              for i in range(r)]
    A = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            v = 2 * inners[i][j] / inners[j][j]
            if v.denominator != 1:
                raise ValueError("non-integer Cartan matrix entry")
            A[i][j] = int(v)
    for i in range(r):
        if A[i][i] != 2:
            raise ValueError("Cartan diagonal must be 2")
        for j in range(r):
            if i != j and A[i][j] not in (0, -1, -2, -3):
                raise ValueError("invalid off-diagonal Cartan entry %d" % A[i][j])
            if i != j and (A[i][j] == 0) != (A[j][i] == 0):
                raise ValueError("asymmetric zero pattern")
    return A, inners


def dynkin_type(A, inners):
    """Classify a finite-type Cartan matrix by its canonical graph
    invariants (degree sequence, edge multiplicities, branch arms)."""
    r = len(A)
    adj = {i: [] for i in range(r)}
    multi = {}
    for i in range(r):
        for j in range(i + 1, r):
            m = A[i][j] * A[j][i]
            if m:
                adj[i].append(j)
                adj[j].append(i)
                multi[(i, j)] = m
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    if len(seen) != r:
        raise ValueError("Dynkin graph is not connected")
    if any(m > 3 for m in multi.values()):
        raise ValueError("edge multiplicity exceeds 3: not finite type")
    triples = [e for e, m in multi.items() if m == 3]
    doubles = [e for e, m in multi.items() if m == 2]
    degrees = sorted(len(adj[i]) for i in range(r))
    if triples:
        if r == 2 and len(multi) == 1:
            return "G2"
        raise ValueError("triple edge in rank > 2: not finite type")
    if doubles:
        if len(doubles) > 1 or degrees[-1] > 2:
            raise ValueError("not a finite-type diagram")
        # a path with one double edge
        (a, b) = doubles[0]
        ends = [i for i in range(r) if len(adj[i]) == 1]
        if r == 2:
            return "C2"
        interior = {a, b} - set(ends)
        if len(interior) == 2:
            if r == 4:
                return "F4"
            raise ValueError("interior double edge in rank != 4")
        # double edge at one end: B_n vs C_n by the terminal root length
        term = a if a in ends else b
        other = b if term == a else a
        if inners[term][term] > inners[other][other]:
            return "C%d" % r
        return "B%d" % r
    # simply laced
    branch = [i for i in range(r) if len(adj[i]) == 3]
    if any(len(adj[i]) > 3 for i in range(r)):
        raise ValueError("vertex of degree > 3: not finite type")
    if not branch:
        return "A%d" % r
    if len(branch) > 1:
        raise ValueError("more than one branch vertex: not finite type")
    b = branch[0]
    arms = []
    for start in adj[b]:
        ln = 1
        prev, cur = b, start
        while True:
            nxt = [v for v in adj[cur] if v != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        arms.append(ln)
    arms.sort()
    if arms[0] != 1:
        raise ValueError("not finite type (all arms >= 2)")
    if arms[1] == 1:
        return "D%d" % r
    if arms[1] == 2 and arms[2] in (2, 3, 4):
        return {2: "E6", 3: "E7", 4: "E8"}[arms[2]]
    raise ValueError("not a finite-type diagram")


def positive_roots(roots):
    """Lexicographic positivity on functional tuples."""
    pos = []
    for root in roots:
        for c in root:
            if c:
                if c > 0:
                    pos.append(root)
                break
    return pos


def extract_simple_system(roots):
    """Indecomposable positive roots under the lexicographic order: an
    independent re-derivation of a simple system (used as a cross-check)."""
    pos = positive_roots(roots)
    posset = set(pos)
    simple = []
    for a in pos:
        decomposable = False
        for b in pos:
            c = tuple(x - y for x, y in zip(a, b))
            if any(c) and c in posset:
                decomposable = True
                break
        if not decomposable:
            simple.append(a)
    return simple
