"""Ends as equalizers, coends as coequalizers.

The end of the hom bifunctor of two functors counts their natural
transformations; we compare it with a direct search.
"""

from catcheck import arrow, compute_coend, compute_end, enumerate_functors, nat_transformations
from catcheck.basecat import FinSet
from catcheck.funcat import from_tables, hom_bifunctor
from catcheck.yoneda import codifferential

S = FinSet()
A = arrow()
M = from_tables(S, A, {"0": 2, "1": 3}, {"f": [0, 2]}, name="M")
N = from_tables(S, A, {"0": 3, "1": 2}, {"f": [1, 1, 0]}, name="N")

E = compute_end(hom_bifunctor(M, N))
print(f"end of hom(M-, N-): {E.carrier} elements")
print(f"natural transformations M => N: {len(nat_transformations(M, N))}")
for i, leg in E.legs.items():
    print(f"  leg at {i}: {leg.src} -> {leg.dst}")

# every pair of arrow functors of size <= 2
pairs = enumerate_functors(S, A, 2)
agree = sum(compute_end(hom_bifunctor(P, Q)).carrier == len(nat_transformations(P, Q))
            for P in pairs for Q in pairs)
print(f"\n{agree} of {len(pairs) ** 2} pairs agree")

C = compute_coend(codifferential(M, "1"))
print(f"\ncoend of h_-(1) x M(-): {C.carrier} elements, M(1) has {M.obj('1')}")
