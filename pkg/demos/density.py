"""Every functor is a coend of representables: M(j) ~ coend^i h_i(j) x M(i)."""

from catcheck import FinSet, FinVect, density, verify_density
from catcheck.fincat import commutative_square, walking_idempotent
from catcheck.funcat import enumerate_functors, from_tables

S = FinSet()
E = walking_idempotent()
M = from_tables(S, E, {"*": 3}, {"e": [0, 0, 2]})
d = density(M)
print("idempotent on 3 points, e = [0, 0, 2]")
print("  coend carrier:", d.coends["*"].carrier, " comparison:", d.comparisons["*"].data.tolist())

sq = commutative_square()
funs = enumerate_functors(S, sq, 2)
good = sum(verify_density(S, sq, F).ok for F in funs)
print(f"\nsquare, every FinSet functor of size <= 2: {good}/{len(funs)} reconstructed")

V3 = FinVect(3)
funs = enumerate_functors(V3, E, 2)
print(f"idempotent over F_3, every functor of dim <= 2: "
      f"{sum(verify_density(V3, E, F).ok for F in funs)}/{len(funs)}")
