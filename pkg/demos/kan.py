"""Right Kan extension as the right adjoint of precomposition.

Restricting along phi: J -> I has a right adjoint G with
G(Y)_j = map(h_j . phi, Y).  We print a few extensions and confirm the
hom-set bijection by counting both sides.
"""

from catcheck import FinSet, arrow, point, right_adjoint_of_precomposition, terminal, to_terminal
from catcheck.adjoint import verify_precomposition_adjunction
from catcheck.fincat import walking_idempotent
from catcheck.funcat import constant, enumerate_functors, nat_transformations, precompose

S = FinSet()
A, T = arrow(), terminal()
Y = constant(S, T, 3)

for obj in A.objects:
    G = right_adjoint_of_precomposition(S, point(A, obj), Y)
    print(f"extend 3 along the point {obj} of the arrow: sizes {G.sizes()}, G(f) = {G('f').data.tolist()}")

# along I -> 1 the extension is the limit
E = walking_idempotent()
for X in enumerate_functors(S, E, 3)[:6]:
    lim = right_adjoint_of_precomposition(S, to_terminal(E), X)
    print(f"limit of idempotent functor e={X('e').data.tolist()}: {lim.obj('*')} points")

print()
G = right_adjoint_of_precomposition(S, point(A, "0"), Y)
for X in enumerate_functors(S, A, 2)[::3]:
    left = len(nat_transformations(precompose(X, point(A, "0")), Y))
    right = len(nat_transformations(X, G))
    ok = verify_precomposition_adjunction(S, point(A, "0"), X, Y).ok
    print(f"X={X.describe():6} |[X.phi, Y]| = {left:2}  |[X, G(Y)]| = {right:2}  naturality {'ok' if ok else 'FAILED'}")
