import time
from exlie.exceptional import *
t0 = time.time()
g6 = cartan_gram_closed(6); g6b = cartan_gram_brute(6)
print('B6 closed == brute:', all(g6[i][j] == g6b[i][j] for i in range(5) for j in range(5)), '%.1fs' % (time.time()-t0))
t1 = time.time()
g8 = cartan_gram_closed(8); g8b = cartan_gram_brute(8)
print('B8 closed == brute:', all(g8[i][j] == g8b[i][j] for i in range(7) for j in range(7)), '%.1fs' % (time.time()-t1))
print('B8 gram row w:', [str(v) for v in g8[6]])
print('B8 diag:', [str(g8[i][i]) for i in range(7)])
