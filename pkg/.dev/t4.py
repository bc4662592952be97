from exlie.exceptional import *
from exlie import roots as R, reference as REF
f66 = epsilon_fixed(7)
els, labels = cartan_elements(7)
g7 = cartan_gram_closed(7)
g7q = [[v.re for v in row] for row in g7]
pi = [REF.evaluate(fn, labels) for fn in REF.PI_66]
can = [R.canonical_element(g7q, p) for p in pi]
for i in range(6):
    got = tuple(c.re for c in can[i])
    if got != REF.CANONICAL_66[i]:
        print('pi', i, 'expected', [str(x) for x in REF.CANONICAL_66[i]])
        print('      got     ', [str(x) for x in got])
