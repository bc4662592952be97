import cProfile, pstats, io, time
from exlie.exceptional import *
from exlie.freudenthal import FVec
from exlie.jordan import Jordan, QUAT
from exlie.scalars import qi, RationalSampler
alg = algebra('quaternion')
om = alg.one_minus()
rng = RationalSampler(0)
def rj():
    return Jordan.from_coords(QUAT, {rng.randint(0,14): rng.qi() for _ in range(3)})
P1 = FVec(alg.pspace, rj(), rj(), rng.qi(), rng.qi())
img = exp_image_of_one_minus(P1, rng.qi())
t0 = time.time(); null_locus_conditions(img); print('one call %.2fs' % (time.time()-t0))
pr = cProfile.Profile(); pr.enable()
null_locus_conditions(img)
pr.disable()
s = io.StringIO()
pstats.Stats(pr, stream=s).sort_stats('cumulative').print_stats(18)
print(s.getvalue())
