"""The functor category is closed monoidal: (M (x) N => P) ~ (M => P^N),
with (P^N)_i = map(h_i (x) N, P)."""

import numpy as np

from catcheck import FinSet, FinVect, internal_hom_functorcat, unit_functor, verify_closed_monoidal_functorcat
from catcheck.fincat import FIXTURES
from catcheck.funcat import random_functor

rng = np.random.default_rng(7)
for B in (FinSet(), FinVect(2)):
    for name in ("arrow", "idempotent", "square"):
        I = FIXTURES[name]()
        M, N, P = (random_functor(B, I, 2, rng, min_size=1) for _ in range(3))
        rep = verify_closed_monoidal_functorcat(B, M, N, P, rng)
        PN = internal_hom_functorcat(B, N, P)
        print(f"{B.name:8} {name:10} N={N.describe():10} P={P.describe():10} P^N={str(PN.sizes()):14} "
              f"{rep.checks[0].detail.split(' naturality')[0]}  {'ok' if rep.ok else 'FAILED'}")

# the unit is neutral: P^K has the sizes of P
S = FinSet()
I = FIXTURES["square"]()
P = random_functor(S, I, 3, rng)
print("\nP   =", P.sizes())
print("P^K =", internal_hom_functorcat(S, unit_functor(S, I), P).sizes())
