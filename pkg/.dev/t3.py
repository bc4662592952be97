import time
from exlie.exceptional import *
from exlie import roots as R, reference as REF
t0 = time.time()
f66 = epsilon_fixed(7)
els, labels = cartan_elements(7)
cc = [f66.coordinatize(e) for e in els]
t1 = time.time(); print('fixed-7 built %.1fs' % (t1 - t0))
rts, zd = R.root_decomposition(f66, cc)
t2 = time.time(); print('decomposition %.1fs' % (t2 - t1))
computed = sorted(r.functional for r in rts)
expected = sorted(REF.evaluate(fn, labels) for fn in REF.ROOTS_66)
print('e7 table match:', computed == expected, len(rts), 'zero block', zd)
g7 = cartan_gram_closed(7)
g7b = cartan_gram_brute(7)
print('B7 closed == brute on cartan:', all(g7[i][j] == g7b[i][j] for i in range(6) for j in range(6)))
pi = [REF.evaluate(fn, labels) for fn in REF.PI_66]
g7q = [[v.re for v in row] for row in g7]
tab = R.fundamental_expansion([r.functional for r in rts], pi)
ok = True
for fn, co in REF.EXPANSIONS_66:
    if tab.get(REF.evaluate(fn, labels)) != co:
        print('MISMATCH', REF.render(fn), co, tab.get(REF.evaluate(fn, labels)))
        ok = False
print('expansions match:', ok)
can = [R.canonical_element(g7q, p) for p in pi]
can_ok = all(tuple(c.re for c in can[i]) == REF.CANONICAL_66[i] for i in range(6))
print('canonical match:', can_ok)
diag_ok = all(R.root_inner(g7q, p, p) == REF.INNER_66_DIAG for p in pi)
adj_ok = all(R.root_inner(g7q, pi[i], pi[j]) == REF.INNER_66_ADJ for i, j in REF.INNER_66_EDGES)
print('inners:', diag_ok, adj_ok)
A, inners = R.cartan_matrix(pi, g7q)
print('type:', R.dynkin_type(A, inners), '(expect D6)')
simp = R.extract_simple_system([r.functional for r in rts])
A2, inn2 = R.cartan_matrix(simp, g7q)
print('independent extraction type:', R.dynkin_type(A2, inn2))
print('total %.1fs' % (time.time() - t0))
