from exlie.exceptional import *
from exlie import roots as R, reference as REF
f21 = epsilon_fixed(4)
els, labels = cartan_elements(4)
cc = [f21.coordinatize(e) for e in els]
rts, _ = R.root_decomposition(f21, cc)
pi = [REF.evaluate(fn, labels) for fn in REF.PI_21]
tab = R.fundamental_expansion([r.functional for r in rts], pi)
for fn, co in REF.EXPANSIONS_21:
    key = REF.evaluate(fn, labels)
    got = tab.get(key)
    if got != co:
        print('MISMATCH', REF.render(fn), 'expected', co, 'got', got)
