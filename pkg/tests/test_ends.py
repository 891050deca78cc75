import itertools

import numpy as np
import pytest

from catcheck import Bifunctor, PreconditionError, check_end_continuity, compute_coend, compute_end
from catcheck.ends import enumerate_wedges, validate_bifunctor
from catcheck.fincat import FIXTURES, arrow, discrete, empty, walking_idempotent
from catcheck.funcat import enumerate_functors, hom_bifunctor, random_functor
from conftest import S, V2, V3, functor
from oracle import components, functions, nat_count


def diagonal(B, values):
    """Bifunctor on a discrete category, constant in the first slot."""
    I = discrete(len(values))
    return Bifunctor(B, I, lambda i, j: values[int(j)], lambda f, g: B.identity(values[int(I.dst(g))]))


def test_end_over_discrete_is_product():
    assert compute_end(diagonal(S, [2, 3])).carrier == 6


def test_coend_over_discrete_is_coproduct():
    assert compute_coend(diagonal(S, [2, 3])).carrier == 5
    assert compute_coend(diagonal(V3, [2, 1])).carrier == 3


def test_end_over_empty_category_is_terminal():
    F = Bifunctor(S, empty(), lambda i, j: 0, lambda f, g: None)
    assert compute_end(F).carrier == 1
    G = Bifunctor(V2, empty(), lambda i, j: 0, lambda f, g: None)
    assert compute_end(G).carrier == 0


def test_end_of_hom_bifunctor_counts_natural_transformations():
    A = arrow()
    M = functor(S, A, {"0": 1, "1": 2}, {"f": [1]})
    for table in functions(2, 2):
        N = functor(S, A, {"0": 2, "1": 2}, {"f": table})
        assert compute_end(hom_bifunctor(M, N)).carrier == nat_count(M, N)


def test_coend_over_idempotent_matches_quotient():
    E = walking_idempotent()
    for M, N in itertools.product(enumerate_functors(S, E, 2, min_size=1), repeat=2):
        m, n = M.obj("*"), N.obj("*")
        me, ne = M("e").data.tolist(), N("e").data.tolist()
        tables = functions(m, n)
        index = {tuple(t): k for k, t in enumerate(tables)}
        # F(e, *) precomposes with M(e), F(*, e) postcomposes with N(e)
        pairs = [(index[tuple(t[x] for x in me)], index[tuple(ne[y] for y in t)]) for t in tables]
        assert compute_coend(hom_bifunctor(M, N)).carrier == components(len(tables), pairs)


def test_continuity_examples():
    r = check_end_continuity(diagonal(S, [2, 3]), 2)
    assert r == {"hom_into_end": 36, "wedges": 36, "hom_out_of_coend": 32, "cowedges": 32, "passed": True}
    e = check_end_continuity(Bifunctor(S, empty(), lambda i, j: 0, lambda f, g: None), 3)
    assert e["hom_into_end"] == e["wedges"] == 1
    assert e["hom_out_of_coend"] == e["cowedges"] == 1
    A = arrow()
    M = functor(S, A, {"0": 1, "1": 2}, {"f": [0]})
    N = functor(S, A, {"0": 2, "1": 2}, {"f": [1, 1]})
    c = check_end_continuity(hom_bifunctor(M, N), 1)
    assert c["passed"] and c["hom_into_end"] == c["wedges"] == nat_count(M, N)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_wedge_identities_and_continuity_on_fixtures(name):
    I = FIXTURES[name]()
    rng = np.random.default_rng(3)
    pool = enumerate_functors(S, I, 2) if len(I.objects) <= 2 else None
    for _ in range(6):
        if pool:
            M, N = (pool[int(k)] for k in rng.integers(0, len(pool), size=2))
        else:
            M, N = random_functor(S, I, 2, rng), random_functor(S, I, 2, rng)
        F = hom_bifunctor(M, N)
        E = compute_end(F)
        assert E.is_wedge(E.carrier, E.legs)
        C = compute_coend(F)
        assert C.is_cowedge(C.carrier, C.colegs)
        assert check_end_continuity(F, 1)["passed"]


@pytest.mark.parametrize("B", [S, V2], ids=lambda B: B.name)
def test_factor_is_unique(B):
    A = arrow()
    M = functor(B, A, {"0": 1, "1": 1}, {"f": [0] if B is S else [[1]]})
    F = hom_bifunctor(M, M)
    E = compute_end(F)
    for w in enumerate_wedges(F, 1):
        u = E.factor(1, w)
        same = [v for v in B.hom_enumerate(1, E.carrier) if all(B.compose(E.legs[i], v) == w[i] for i in A.objects)]
        assert same == [u]


def test_factor_rejects_a_non_wedge():
    A = arrow()
    M = functor(S, A, {"0": 2, "1": 2}, {"f": [0, 0]})
    F = hom_bifunctor(M, M)
    E = compute_end(F)
    # M(f) is constant at 0, so a wedge needs its component at 1 to fix 0
    bad = {"0": S.mor(1, 4, [1]), "1": S.mor(1, 4, [2])}
    assert not E.is_wedge(1, bad)
    with pytest.raises(PreconditionError):
        E.factor(1, bad)
    C = compute_coend(F)
    with pytest.raises(PreconditionError):
        C.cofactor(2, {"0": S.mor(4, 2, [0, 1, 0, 1]), "1": S.mor(4, 2, [0, 0, 0, 0])})


def test_bifunctor_validation_catches_a_broken_table():
    A = arrow()
    M = functor(S, A, {"0": 2, "1": 2}, {"f": [1, 0]})
    good = hom_bifunctor(M, M)
    assert validate_bifunctor(good).ok
    # F(f, id) replaced by an identity breaks the interchange law
    bad = Bifunctor(S, A, lambda i, j: good.obj(i, j),
                    lambda f, g: S.identity(4) if (f, g) == ("f", "id_0") else good.mor(f, g),
                    check=False)
    assert not validate_bifunctor(bad).ok
