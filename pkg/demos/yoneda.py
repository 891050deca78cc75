"""The enriched Yoneda isomorphism map(h_i, M) ~ M(i) and the plain count
behind it, over three bases."""

import numpy as np

from catcheck import FinSet, FinVect, build_h, map_functors, verify_lemma_eq1, verify_yoneda
from catcheck.fincat import FIXTURES
from catcheck.funcat import random_functor

rng = np.random.default_rng(3)
for B in (FinSet(), FinVect(2), FinVect(3)):
    print(B.name)
    for name, make in FIXTURES.items():
        I = make()
        M = random_functor(B, I, 2, rng, min_size=1)
        line = []
        for i in I.objects:
            carrier = map_functors(build_h(B, I, i).functor, M).carrier
            ok = verify_yoneda(B, I, i, M).ok and verify_lemma_eq1(B, I, i, M).ok
            line.append(f"{i}:{carrier}/{M.obj(i)}{'' if ok else '!'}")
        print(f"  {name:11} sizes {M.describe():10} map(h_i,M)/M(i)  {' '.join(line)}")
