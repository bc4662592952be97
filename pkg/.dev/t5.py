import time
from exlie.exceptional import *
from exlie import roots as R, reference as REF
from exlie.freudenthal import FVec
from exlie.jordan import Jordan, OCT
t0 = time.time()
f133 = epsilon_fixed(8)
els, labels = cartan_elements(8)
cc = [f133.coordinatize(e) for e in els]
t1 = time.time(); print('fixed-8 built %.1fs' % (t1 - t0))
ok, rank, rep = R.verify_cartan(f133, cc)
print('h8 cartan:', ok, 'rank', rank)
t1b = time.time(); print('verify %.1fs' % (t1b - t1))
rts, zd = R.root_decomposition(f133, cc, check_cartan=False)
t2 = time.time(); print('decomposition %.1fs' % (t2 - t1b))
computed = sorted(r.functional for r in rts)
expected = sorted(REF.evaluate(fn, labels) for fn in REF.ROOTS_133)
print('e8 table match:', computed == expected, len(rts), 'zero block', zd)
g8 = cartan_gram_closed(8)
pi = [REF.evaluate(fn, labels) for fn in REF.PI_133]
g8q = [[v.re for v in row] for row in g8]
tab = R.fundamental_expansion([r.functional for r in rts], pi)
ok = True
for fn, co in REF.EXPANSIONS_133:
    if tab.get(REF.evaluate(fn, labels)) != co:
        print('MISMATCH', REF.render(fn), co, tab.get(REF.evaluate(fn, labels)))
        ok = False
print('expansions match:', ok)
can = [R.canonical_element(g8q, p) for p in pi]
can_ok = all(tuple(c.re for c in can[i]) == REF.CANONICAL_133[i] for i in range(7))
print('canonical match:', can_ok)
if not can_ok:
    for i in range(7):
        got = tuple(c.re for c in can[i])
        if got != REF.CANONICAL_133[i]:
            print(' pi', i, [str(x) for x in REF.CANONICAL_133[i]], 'got', [str(x) for x in got])
diag_ok = all(R.root_inner(g8q, p, p) == REF.INNER_133_DIAG for p in pi)
adj_ok = all(R.root_inner(g8q, pi[i], pi[j]) == REF.INNER_133_ADJ for i, j in REF.INNER_133_EDGES)
print('inners:', diag_ok, adj_ok)
A, inners = R.cartan_matrix(pi, g8q)
print('type:', R.dynkin_type(A, inners), '(expect E7)')
simp = R.extract_simple_system([r.functional for r in rts])
A2, inn2 = R.cartan_matrix(simp, g8q)
print('independent extraction type:', R.dynkin_type(A2, inn2))
# root-vector spot checks
by_func = {r.functional: r for r in rts}
sp = algebra('octonion').pspace
spot1 = REF.evaluate(REF.add(REF.f(mu1=1, mu=REF.Q(-1,3)), REF.f(w=1)), labels)
r1 = by_func[spot1]
exp1 = E8El.p_part(FVec.x_dot(sp, Jordan.e_mat(OCT, 0)))
c1 = f133.coordinatize(exp1)
from exlie import linalg
lead = min(c1); c1n = linalg.vec_scale(c1, __import__('exlie.scalars', fromlist=['qi']).qi(1)/c1[lead])
print('root vector (0,E1.,0,0,0,0) spot:', linalg.vec_eq(r1.vector_coords, c1n))
print('total %.1fs' % (time.time() - t0))
