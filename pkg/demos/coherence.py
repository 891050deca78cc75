"""Pentagon, triangle, hexagon and the closure bijection, checked on every
small object of finite sets and of vector spaces over F_2 and F_3."""

from catcheck import FinSet, FinVect, verify_coherence

for B, size in ((FinSet(), 4), (FinVect(2), 3), (FinVect(3), 3)):
    rep = verify_coherence(B, size)
    per_label = ", ".join(f"{lab} {rep.identities(lab)}" for lab in ("pentagon", "triangle", "hexagon", "closure"))
    print(f"{B.name:9} objects <= {size}: {per_label}  ->  {'ok' if rep.ok else 'FAILED'}")

# a single closure instance: currying 2 x 3 -> 2 into 2 -> 2^3
S = FinSet()
f = S.hom_enumerate(S.tensor(2, 3), 2)[37]
g = S.curry(f, 2, 3)
print("\ncurry sends", f.data.tolist(), "to", g.data.tolist())
print("and uncurry gives it back:", S.uncurry(g, 3, 2) == f)
