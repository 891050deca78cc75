import itertools

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from catcheck import CapExceeded, FinSet, FinVect, InputError, PreconditionError, make_base
from catcheck.coherence import hexagons_hold, pentagon_holds, symmetry_holds, triangle_holds
from oracle import components, functions, kernel_size

S = FinSet()
V2 = FinVect(2)
V3 = FinVect(3)
BASES = [S, V2, V3]


# -- worked examples ------------------------------------------------------


def test_finset_composition_and_identity():
    f = S.mor(2, 2, [1, 0])
    assert S.compose(f, f).tolist() == [0, 1]
    assert S.identity(3).tolist() == [0, 1, 2]


def test_finvect_identity_law():
    r = V2.mor(2, 1, [[1, 1]])
    assert V2.compose(r, V2.identity(2)).tolist() == [[1, 1]]


def test_tensor_examples():
    assert S.tensor(2, 3) == 6
    swap = S.mor(2, 2, [1, 0])
    assert S.tensor_mor(S.identity(2), swap).tolist() == [1, 0, 3, 2]
    one = V2.mor(1, 1, [[1]])
    assert V2.tensor_mor(one, one).tolist() == [[1]]


def test_structural_isos_in_finset():
    assert S.associator(2, 3, 2) == S.identity(12)
    assert S.lunitor(4) == S.identity(4)
    b = S.braiding(2, 3)
    assert b.data[1] == 2
    assert all(b.data[x * 3 + y] == y * 2 + x for x in range(2) for y in range(3))
    assert S.is_iso(b)


def test_internal_hom_examples():
    assert S.internal_hom(2, 3) == 9
    proj = S.mor(4, 2, [0, 0, 1, 1])
    assert S.uncurry(S.curry(proj, 2, 2), 2, 2) == proj
    assert V2.internal_hom(2, 1) == 2


def test_internal_hom_lists_tables_lexicographically():
    tables = [S.decode_function(k, 2, 3) for k in range(9)]
    assert tables == functions(2, 3)


def test_products_and_coproducts():
    n, injs = S.coproduct([2, 3])
    assert n == 5
    assert [j.tolist() for j in injs] == [[0, 1], [2, 3, 4]]
    assert S.product([])[0] == 1
    assert S.coproduct([])[0] == 0
    d, projs = V3.product([1, 2])
    assert d == 3
    assert projs[0].tolist() == [[1, 0, 0]]
    assert projs[1].tolist() == [[0, 1, 0], [0, 0, 1]]
    assert V2.product([])[0] == 0


def test_equalizer_and_coequalizer_examples():
    e = S.equalizer(S.identity(3), S.mor(3, 3, [0, 0, 0]))
    assert e.obj == 1 and e.include.tolist() == [0]
    c = S.coequalizer(S.mor(1, 2, [0]), S.mor(1, 2, [1]))
    assert c.obj == 1
    ev = V2.equalizer(V2.identity(2), V2.mor(2, 2, [[1, 0], [0, 0]]))
    assert ev.obj == 1


def test_factor_rejects_non_equalizing_legs():
    e = S.equalizer(S.identity(2), S.mor(2, 2, [0, 0]))
    with pytest.raises(PreconditionError):
        e.factor(S.mor(1, 2, [1]))
    c = V2.coequalizer(V2.mor(1, 2, [[1], [0]]), V2.mor(1, 2, [[0], [1]]))
    with pytest.raises(PreconditionError):
        c.factor(V2.mor(2, 1, [[1, 0]]))


def test_hom_enumeration_examples():
    assert len(S.hom_enumerate(2, 3)) == 9
    assert [m.tolist() for m in V2.hom_enumerate(1, 1)] == [[[0]], [[1]]]
    assert S.is_iso(S.braiding(2, 3))


def test_hom_cap():
    small = FinSet(max_hom=8)
    with pytest.raises(CapExceeded) as exc:
        small.hom_enumerate(2, 3)
    assert exc.value.size == 9


def test_make_base():
    assert make_base("finset") == S
    assert make_base({"finvect": {"p": 3}}).p == 3
    with pytest.raises(InputError):
        make_base({"finvect": {"p": 4}})
    with pytest.raises(InputError):
        make_base("sets")


def test_bad_tables_are_rejected():
    with pytest.raises(InputError):
        S.mor(2, 2, [0, 2])
    with pytest.raises(InputError):
        S.mor(2, 2, [0])
    with pytest.raises(InputError):
        V2.mor(2, 2, [[1, 0]])


def test_finvect_entries_are_reduced():
    assert V3.mor(1, 1, [[4]]).tolist() == [[1]]


# -- brute-force oracles ----------------------------------------------------


@pytest.mark.parametrize("B", BASES, ids=lambda B: B.name)
@pytest.mark.parametrize("a,b", [(0, 2), (1, 2), (2, 1), (2, 2)])
def test_hom_enumeration_is_complete_and_ordered(B, a, b):
    homs = B.hom_enumerate(a, b)
    assert len(homs) == len(set(homs)) == B.hom_count(a, b)
    if B is S:
        assert [h.tolist() for h in homs] == functions(a, b)


def test_finset_coequalizer_matches_components():
    rng = np.random.default_rng(5)
    for _ in range(50):
        a, b = int(rng.integers(0, 4)), int(rng.integers(1, 6))
        f, g = S.random_mor(a, b, rng), S.random_mor(a, b, rng)
        c = S.coequalizer(f, g)
        assert c.obj == components(b, zip(f.data.tolist(), g.data.tolist()))
        assert S.compose(c.project, f) == S.compose(c.project, g)


def test_finvect_kernel_dimension_matches_count():
    rng = np.random.default_rng(6)
    for p, B in ((2, V2), (3, V3)):
        for _ in range(30):
            a, b = int(rng.integers(1, 4)), int(rng.integers(1, 3))
            f, g = B.random_mor(a, b, rng), B.random_mor(a, b, rng)
            e = B.equalizer(f, g)
            assert p**e.obj == kernel_size((f.data - g.data) % p, p)
            c = B.coequalizer(f, g)
            assert B.compose(c.project, f) == B.compose(c.project, g)


@pytest.mark.parametrize("B", BASES, ids=lambda B: B.name)
def test_equalizer_factor_is_unique(B):
    rng = np.random.default_rng(7)
    for _ in range(10):
        f, g = B.random_mor(2, 2, rng), B.random_mor(2, 2, rng)
        e = B.equalizer(f, g)
        for h in B.hom_enumerate(1, 2):
            if B.compose(f, h) != B.compose(g, h):
                continue
            u = e.factor(h)
            assert B.compose(e.include, u) == h
            assert [v for v in B.hom_enumerate(1, e.obj) if B.compose(e.include, v) == h] == [u]


@pytest.mark.parametrize("B", BASES, ids=lambda B: B.name)
def test_coequalizer_factor_is_unique(B):
    rng = np.random.default_rng(8)
    for _ in range(10):
        f, g = B.random_mor(1, 3, rng), B.random_mor(1, 3, rng)
        c = B.coequalizer(f, g)
        for h in B.hom_enumerate(3, 2):
            if B.compose(h, f) != B.compose(h, g):
                continue
            u = c.factor(h)
            assert B.compose(u, c.project) == h
            assert [v for v in B.hom_enumerate(c.obj, 2) if B.compose(v, c.project) == h] == [u]


# -- properties --------------------------------------------------------------

small = st.integers(0, 3)
base_choice = st.sampled_from(BASES)


@given(base_choice, small, small, small, small, st.integers(0, 2**16))
@settings(max_examples=60, deadline=None)
def test_composition_is_associative_and_unital(B, a, b, c, d, seed):
    rng = np.random.default_rng(seed)
    assume(B.hom_count(a, b) and B.hom_count(b, c) and B.hom_count(c, d))
    f, g, h = B.random_mor(a, b, rng), B.random_mor(b, c, rng), B.random_mor(c, d, rng)
    assert B.compose(h, B.compose(g, f)) == B.compose(B.compose(h, g), f)
    assert B.compose(B.identity(b), f) == f == B.compose(f, B.identity(a))


@given(base_choice, small, small, small, small)
@settings(max_examples=60, deadline=None)
def test_coherence_identities(B, a, b, c, d):
    assert pentagon_holds(B, a, b, c, d)
    assert triangle_holds(B, a, b)
    assert all(hexagons_hold(B, a, b, c))
    assert symmetry_holds(B, a, b)


@given(base_choice, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2**16))
@settings(max_examples=60, deadline=None)
def test_tensor_is_functorial(B, a, b, c, seed):
    rng = np.random.default_rng(seed)
    if (b == 0 and a) or (c == 0 and b):
        return
    f1, g1 = B.random_mor(a, b, rng), B.random_mor(b, c, rng)
    f2, g2 = B.random_mor(a, b, rng), B.random_mor(b, c, rng)
    lhs = B.tensor_mor(B.compose(g1, f1), B.compose(g2, f2))
    rhs = B.compose(B.tensor_mor(g1, g2), B.tensor_mor(f1, f2))
    assert lhs == rhs
    assert B.tensor_mor(B.identity(a), B.identity(b)) == B.identity(B.tensor(a, b))


@given(base_choice, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2**16))
@settings(max_examples=60, deadline=None)
def test_curry_round_trip_and_evaluation(B, a, b, c, seed):
    rng = np.random.default_rng(seed)
    if c == 0 and a * b:
        return
    f = B.random_mor(B.tensor(a, b), c, rng)
    g = B.curry(f, a, b)
    assert B.uncurry(g, b, c) == f
    assert B.compose(B.eval_mor(b, c), B.tensor_mor(g, B.identity(b))) == f


@given(base_choice, st.lists(st.integers(0, 3), max_size=3), st.integers(0, 2**16))
@settings(max_examples=60, deadline=None)
def test_product_and_coproduct_universal_properties(B, objs, seed):
    rng = np.random.default_rng(seed)
    P, projs = B.product(objs)
    legs = [B.random_mor(1, o, rng) for o in objs if o]
    if len(legs) == len(objs):
        t = B.tuple(1, legs)
        assert [B.compose(p, t) for p in projs] == legs
    C, injs = B.coproduct(objs)
    co = [B.random_mor(o, 2, rng) for o in objs]
    u = B.cotuple(2, co, C)
    assert [B.compose(u, j) for j in injs] == co


@pytest.mark.parametrize("B", BASES, ids=lambda B: B.name)
def test_distributor_is_iso(B):
    for a, bs in itertools.product(range(3), ([], [1], [2, 1], [0, 2])):
        assert B.is_iso(B.distributor(a, bs)) and B.is_iso(B.distributor(a, bs, side="right"))


@pytest.mark.parametrize("B", BASES, ids=lambda B: B.name)
def test_unit_hom_iso(B):
    for c in range(4):
        assert B.is_iso(B.unit_hom_iso(c))
