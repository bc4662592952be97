import time
from exlie.exceptional import *
from exlie import roots as R, reference as REF
from exlie.scalars import Q
t0 = time.time()
f21 = epsilon_fixed(4)
els, labels = cartan_elements(4)
cc = [f21.coordinatize(e) for e in els]
rts, _ = R.root_decomposition(f21, cc)
g4 = cartan_gram_closed(4)
g4b = cartan_gram_brute(4)
print('B4 closed == brute on cartan:', all(g4[i][j] == g4b[i][j] for i in range(3) for j in range(3)))
print('B4 gram:', [[str(v) for v in row] for row in g4])
pi = [REF.evaluate(fn, labels) for fn in REF.PI_21]
g4q = [[v.re for v in row] for row in g4]
tab = R.fundamental_expansion([r.functional for r in rts], pi)
exp_ok = all(tab[REF.evaluate(fn, labels)] == co for fn, co in REF.EXPANSIONS_21)
print('expansions match:', exp_ok)
can = [R.canonical_element(g4q, p) for p in pi]
print('canonical elements:', [[str(c) for c in v] for v in can])
can_ok = all(tuple(c.re for c in can[i]) == REF.CANONICAL_21[i] for i in range(3))
print('canonical match:', can_ok)
inn_ok = all(R.root_inner(g4q, pi[i], pi[j]) == v for (i, j), v in REF.INNER_21.items())
print('inners match:', inn_ok)
A, inners = R.cartan_matrix(pi, g4q)
print('cartan matrix:', A)
print('type:', R.dynkin_type(A, inners), '(expect C3)')
simp = R.extract_simple_system([r.functional for r in rts])
A2, inn2 = R.cartan_matrix(simp, g4q)
print('independent extraction type:', R.dynkin_type(A2, inn2))
print('%.1fs' % (time.time() - t0))
