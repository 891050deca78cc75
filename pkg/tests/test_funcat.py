
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catcheck import InputError
from catcheck.adjoint import FunctorCategoryClosure, KanExtension
from catcheck.fincat import FIXTURES, arrow, commutative_square, discrete, point, terminal, walking_idempotent
from catcheck.funcat import (
    ClosedModuleTriple,
    FunctorModule,
    ModuleFunctor,
    NatTrans,
    act,
    constant,
    element_to_nat,
    end_of_hom_equals_nat,
    enumerate_functors,
    exponent,
    identity_nat,
    is_natural,
    map_functors,
    nat_transformations,
    random_functor,
    unit_functor,
    validate_mfunctor,
    validate_nattrans,
    verify_closed_module,
    verify_module_coherence,
    verify_module_functor,
)
from catcheck.yoneda import build_h
from conftest import S, V2, V3, functor
from oracle import functor_count, nat_count


def test_functor_laws_are_checked():
    E = walking_idempotent()
    with pytest.raises(InputError):
        functor(S, E, {"*": 2}, {"e": [1, 0]})
    M = functor(S, E, {"*": 2}, {"e": [1, 1]})
    assert validate_mfunctor(M).ok


def test_act_examples():
    A = arrow()
    M = constant(S, A, 3)
    assert act(2, M).sizes() == (6, 6)
    N = functor(V2, A, {"0": 1, "1": 2}, {"f": [[1], [0]]})
    assert act(2, N).sizes() == (2, 4)
    K = act(S.unit(), functor(S, A, {"0": 2, "1": 3}, {"f": [0, 2]}))
    assert all(S.is_iso(S.lunitor(K.obj(i))) for i in A.objects)


def test_exponent_examples():
    A = arrow()
    assert exponent(constant(S, A, 2), 3).sizes() == (8, 8)
    M = functor(V3, A, {"0": 1, "1": 1}, {"f": [[2]]})
    assert exponent(M, 2).sizes() == (2, 2)
    P = functor(S, A, {"0": 2, "1": 3}, {"f": [0, 2]})
    assert exponent(P, 1).sizes() == P.sizes()


def test_map_examples():
    T = terminal()
    assert map_functors(constant(S, T, 2), constant(S, T, 3)).carrier == S.internal_hom(2, 3)
    A = arrow()
    h0 = build_h(S, A, "0").functor
    for table in ([0, 0], [0, 1], [1, 0], [1, 1]):
        N = functor(S, A, {"0": 2, "1": 2}, {"f": table})
        assert map_functors(h0, N).carrier == 2 == nat_count(h0, N)
    D = discrete(2)
    one = functor(V2, D, {"0": 1, "1": 1})
    assert map_functors(one, one).carrier == 2


@pytest.mark.parametrize(
    "M,N,count",
    [
        (constant(S, terminal(), 2), constant(S, terminal(), 2), 4),
        (constant(V2, terminal(), 1), constant(V2, terminal(), 1), 2),
    ],
)
def test_end_of_hom_examples(M, N, count):
    rep = end_of_hom_equals_nat(M, N)
    assert rep.ok
    assert len(nat_transformations(M, N)) == count == nat_count(M, N)


def test_end_of_hom_against_h0():
    A = arrow()
    h0 = build_h(S, A, "0").functor
    N = functor(S, A, {"0": 2, "1": 3}, {"f": [2, 0]})
    assert len(nat_transformations(h0, N)) == 2 == nat_count(h0, N)


@pytest.mark.parametrize("B", [S, V2, V3], ids=lambda B: B.name)
@pytest.mark.parametrize("name", ["terminal", "arrow", "idempotent"])
def test_nat_enumeration_matches_oracle(B, name):
    I = FIXTURES[name]()
    pool = enumerate_functors(B, I, 2 if B is S else 1)
    rng = np.random.default_rng(11)
    for a, b in rng.integers(0, len(pool), size=(12, 2)):
        M, N = pool[int(a)], pool[int(b)]
        nats = nat_transformations(M, N)
        assert len(nats) == len(set(nats)) == nat_count(M, N)
        assert all(validate_nattrans(t).ok for t in nats)


# counts of functors with every component of size at most n, checked
# against a table-by-table brute force
FUNCTOR_COUNTS = [
    (S, "terminal", 3, 4),
    (S, "arrow", 3, 60),
    (S, "idempotent", 3, 15),
    (V2, "terminal", 2, 3),
    (V2, "arrow", 2, 31),
    (V2, "idempotent", 2, 11),
    (V3, "terminal", 2, 3),
    (V3, "arrow", 2, 107),
    (V3, "idempotent", 2, 17),
    (S, "square", 2, 249),
]


@pytest.mark.parametrize("B,name,n,count", FUNCTOR_COUNTS, ids=lambda x: getattr(x, "name", str(x)))
def test_functor_enumeration_counts(B, name, n, count):
    I = FIXTURES[name]()
    fs = enumerate_functors(B, I, n)
    assert len(fs) == len(set(fs)) == count
    assert functor_count(B, I, n) == count
    assert all(validate_mfunctor(M).ok for M in fs)


def test_random_functors_are_valid():
    rng = np.random.default_rng(0)
    for B in (S, V2, V3):
        for _ in range(10):
            M = random_functor(B, commutative_square(), 2, rng)
            assert validate_mfunctor(M).ok


def test_nattrans_validation_rejects_unnatural_family():
    A = arrow()
    M = functor(S, A, {"0": 2, "1": 2}, {"f": [0, 0]})
    t = NatTrans(M, M, {"0": S.identity(2), "1": S.mor(2, 2, [1, 0])})
    assert not is_natural(t)
    assert not validate_nattrans(t).ok


def test_map_contains_identity():
    rng = np.random.default_rng(4)
    for B in (S, V2):
        for name in FIXTURES:
            M = random_functor(B, FIXTURES[name](), 2, rng)
            mp = map_functors(M, M)
            ids = [e for e in B.elements(mp.carrier) if element_to_nat(mp, e) == identity_nat(M)]
            assert len(ids) == 1


def test_closed_module_examples():
    A = arrow()
    M = functor(S, A, {"0": 1, "1": 2}, {"f": [1]})
    N = functor(S, A, {"0": 2, "1": 2}, {"f": [0, 0]})
    for m in (S.unit(), 2):
        rep = verify_closed_module(m, M, N)
        assert rep.ok
    T = ClosedModuleTriple(2, M, N)
    counts = {len(nat_transformations(T.mM, N)), len(nat_transformations(M, T.Nm)),
              S.hom_count(2, T.map.carrier)}
    assert counts == {nat_count(T.mM, N)}
    unit = ClosedModuleTriple(1, M, N)
    assert len(nat_transformations(unit.mM, N)) == nat_count(M, N)
    one = constant(V2, terminal(), 1)
    assert verify_closed_module(1, one, one).ok


@given(st.sampled_from([S, V2, V3]), st.sampled_from(sorted(FIXTURES)), st.integers(0, 2), st.integers(0, 2**16))
@settings(max_examples=25, deadline=None)
def test_closed_module_triples(B, name, m, seed):
    rng = np.random.default_rng(seed)
    size = 2 if B is S else 1
    I = FIXTURES[name]()
    M, N = random_functor(B, I, size, rng), random_functor(B, I, size, rng)
    assert verify_closed_module(m, M, N, rng).ok


@given(st.sampled_from([S, V2]), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2**16))
@settings(max_examples=25, deadline=None)
def test_module_coherence(B, m, n, p, seed):
    M = random_functor(B, arrow(), 2, np.random.default_rng(seed))
    assert verify_module_coherence(m, n, p, M)


def _samples(B, I, rng):
    return [(int(rng.integers(0, 3)), int(rng.integers(0, 3)), random_functor(B, I, 2, rng)) for _ in range(3)]


def test_module_functor_examples():
    rng = np.random.default_rng(9)
    A = arrow()
    ident = ModuleFunctor(name="id", source=FunctorModule(S, A), target=FunctorModule(S, A),
                          on_obj=lambda M: M, on_mor=lambda t: t, mu=lambda m, M: identity_nat(act(m, M)))
    assert verify_module_functor(ident, _samples(S, A, rng)).ok
    pre = KanExtension(S, point(A, "0")).module_functor()
    assert verify_module_functor(pre, _samples(S, A, rng)).ok
    tensor_K = FunctorCategoryClosure(S, unit_functor(S, A)).module_functor()
    assert verify_module_functor(tensor_K, _samples(S, A, rng)).ok


def test_module_functor_with_wrong_mu_fails():
    A = arrow()

    def shift(m, M):
        # a cyclic shift of the m factor is invertible but not coherent
        cyc = S.mor(m, m, [(x + 1) % m for x in range(m)])
        return NatTrans(act(m, M), act(m, M), {i: S.tensor_mor(cyc, S.identity(M.obj(i))) for i in A.objects})

    F = ModuleFunctor(name="bad", source=FunctorModule(S, A), target=FunctorModule(S, A),
                      on_obj=lambda M: M, on_mor=lambda t: t, mu=shift)
    M = constant(S, A, 2)
    rep = verify_module_functor(F, [(2, 2, M)])
    assert not rep.ok and "assoc=False" in rep.checks[0].detail


def test_map_requires_matching_index():
    with pytest.raises(InputError):
        map_functors(constant(S, arrow(), 1), constant(S, terminal(), 1))
