import dataclasses

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catcheck.adjoint import (
    FunctorCategoryClosure,
    KanExtension,
    eval_witness,
    internal_hom_functorcat,
    right_adjoint_of_precomposition,
    verify_adjunction,
    verify_closed_monoidal_functorcat,
    verify_cocontinuity,
    verify_limit_consistency,
    verify_map_level_iso,
    verify_precomposition_adjunction,
    verify_two_sided_evaluation,
)
from catcheck.fincat import FIXTURES, arrow, identity_functor, point, terminal, to_terminal
from catcheck.funcat import (
    constant,
    enumerate_functors,
    precompose,
    random_functor,
    tensor_pointwise,
    unit_functor,
    validate_mfunctor,
)
from catcheck.yoneda import build_h
from conftest import S, V2, V3, functor
from oracle import nat_count


def test_kan_along_identity_is_yoneda():
    A = arrow()
    Y = functor(S, A, {"0": 2, "1": 3}, {"f": [0, 2]})
    G = right_adjoint_of_precomposition(S, identity_functor(A), Y)
    assert G.sizes() == Y.sizes()


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_kan_along_points_of_the_arrow(n):
    A, T = arrow(), terminal()
    Y = constant(S, T, n)
    assert right_adjoint_of_precomposition(S, point(A, "0"), Y).sizes() == (n, 1)
    assert right_adjoint_of_precomposition(S, point(A, "1"), Y).sizes() == (n, n)


def test_kan_adjunction_example():
    A, T = arrow(), terminal()
    X = functor(S, A, {"0": 2, "1": 1}, {"f": [0, 0]})
    Y = constant(S, T, 3)
    phi = point(A, "0")
    rep = verify_precomposition_adjunction(S, phi, X, Y)
    assert rep.ok
    assert rep.checks[0].detail.startswith("|D(Fc,d)|=9 |C(c,Gd)|=9")
    G = right_adjoint_of_precomposition(S, phi, Y)
    assert nat_count(precompose(X, phi), Y) == 9 == nat_count(X, G)


def test_kan_adjunction_identity_round_trip():
    A = arrow()
    X = functor(S, A, {"0": 1, "1": 2}, {"f": [1]})
    assert verify_precomposition_adjunction(S, identity_functor(A), X, X).ok


@pytest.mark.parametrize("B", [S, V2, V3], ids=lambda B: B.name)
@pytest.mark.parametrize("name", ["terminal", "arrow", "idempotent"])
def test_kan_counts_match_oracle(B, name):
    J = FIXTURES[name]()
    size = 2 if B is not V3 else 1
    rng = np.random.default_rng(12)
    for phi in [identity_functor(J), to_terminal(J)] + [point(J, j) for j in J.objects]:
        xs = enumerate_functors(B, phi.target, size)
        ys = enumerate_functors(B, phi.source, size)
        for a, b in rng.integers(0, [len(xs), len(ys)], size=(3, 2)):
            X, Y = xs[int(a)], ys[int(b)]
            G = right_adjoint_of_precomposition(B, phi, Y)
            assert validate_mfunctor(G).ok
            assert nat_count(precompose(X, phi), Y) == nat_count(X, G)
            assert verify_precomposition_adjunction(B, phi, X, Y, rng).ok


def test_internal_hom_examples():
    A, T = arrow(), terminal()
    P = functor(S, A, {"0": 2, "1": 3}, {"f": [0, 2]})
    assert internal_hom_functorcat(S, unit_functor(S, A), P).sizes() == (2, 3)
    for n, p in ((1, 2), (2, 3), (0, 2), (2, 0)):
        G = internal_hom_functorcat(S, constant(S, T, n), constant(S, T, p))
        assert G.sizes() == (p**n,)
    N = functor(S, A, {"0": 1, "1": 1}, {"f": [0]})
    PN = internal_hom_functorcat(S, N, P)
    assert PN.obj("0") == 2
    hN = tensor_pointwise(build_h(S, A, "0").functor, N)
    assert nat_count(hN, P) == 2


def test_closed_examples():
    A, T = arrow(), terminal()
    N = functor(S, A, {"0": 1, "1": 1}, {"f": [0]})
    P = functor(S, A, {"0": 2, "1": 3}, {"f": [0, 2]})
    rep = verify_closed_monoidal_functorcat(S, N, N, P)
    assert rep.ok and rep.checks[0].detail.startswith("|D(Fc,d)|=2 |C(c,Gd)|=2")
    K = unit_functor(S, A)
    unit = verify_closed_monoidal_functorcat(S, K, N, P)
    assert unit.ok
    assert nat_count(tensor_pointwise(K, N), P) == nat_count(K, internal_hom_functorcat(S, N, P))
    one = constant(V2, T, 1)
    assert verify_closed_monoidal_functorcat(V2, one, one, one).checks[0].detail.startswith(
        "|D(Fc,d)|=2 |C(c,Gd)|=2")


@given(st.sampled_from([S, V2, V3]), st.sampled_from(sorted(FIXTURES)), st.integers(0, 2**16))
@settings(max_examples=20, deadline=None)
def test_closed_structure_on_random_triples(B, name, seed):
    rng = np.random.default_rng(seed)
    I = FIXTURES[name]()
    size = 2 if B is S else 1
    M, N, P = (random_functor(B, I, size, rng) for _ in range(3))
    assert verify_closed_monoidal_functorcat(B, M, N, P, rng).ok
    if len(I.objects) <= 2:
        assert nat_count(tensor_pointwise(M, N), P) == nat_count(M, internal_hom_functorcat(B, N, P))


def test_two_sided_evaluation():
    A = arrow()
    M = functor(S, A, {"0": 2, "1": 3}, {"f": [0, 2]})
    for i in A.objects:
        for m in range(3):
            assert verify_two_sided_evaluation(S, A, i, m, M).ok


def test_map_level_isos():
    A = arrow()
    M = functor(S, A, {"0": 1, "1": 1}, {"f": [0]})
    P = functor(S, A, {"0": 1, "1": 2}, {"f": [1]})
    assert verify_map_level_iso(FunctorCategoryClosure(S, M).witness(), M, P).ok
    assert verify_map_level_iso(eval_witness(S, A, "1"), 2, P).ok
    assert verify_map_level_iso(KanExtension(S, point(A, "0")).witness(), M, constant(S, terminal(), 2)).ok


def test_limit_consistency_and_cocontinuity(fixture_category):
    rng = np.random.default_rng(13)
    C = fixture_category
    for _ in range(3):
        Y = random_functor(S, C, 2, rng)
        assert verify_limit_consistency(S, Y).ok
        N = random_functor(S, C, 2, rng)
        assert verify_cocontinuity(S, Y, N, point(C, C.objects[0])).ok


def test_broken_translation_is_caught():
    A = arrow()
    K = KanExtension(S, point(A, "0"))
    W = K.witness()
    X = functor(S, A, {"0": 2, "1": 1}, {"f": [0, 0]})
    Y = constant(S, terminal(), 3)
    assert verify_adjunction(W, X, Y).ok
    first = S.hom_enumerate(2, 3)[0]

    def constant_backward(s, X, Y):
        t = K.backward(s, X, Y)
        return type(t)(t.src, t.dst, {i: first for i in t.src.index.objects})

    bad = dataclasses.replace(W, backward=constant_backward)
    assert not verify_adjunction(bad, X, Y).ok
