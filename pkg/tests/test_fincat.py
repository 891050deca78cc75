import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catcheck import CapExceeded, InputError
from catcheck.fincat import (
    BUILTIN,
    FIXTURES,
    CatFunctor,
    FinCat,
    arrow,
    chain,
    commutative_square,
    hom_set,
    identity_functor,
    opposite,
    point,
    terminal,
    to_terminal,
    validate_category,
    validate_functor,
    walking_idempotent,
)


@pytest.mark.parametrize("name", sorted(BUILTIN))
def test_builtin_categories_validate(name):
    assert validate_category(BUILTIN[name]()).ok


def test_terminal_and_arrow_validate():
    assert validate_category(terminal())
    assert validate_category(arrow())


def test_wrong_composite_target_is_named():
    C = FinCat(["0", "1", "2"], [("f", "0", "1"), ("g", "1", "2"), ("h", "0", "1")], {("f", "g"): "h"})
    v = validate_category(C)
    assert not v.ok
    assert any("(f, g)" in msg for msg in v.violations)


def test_missing_composite_is_reported():
    C = FinCat(["0", "1", "2"], [("f", "0", "1"), ("g", "1", "2")], {})
    assert any("missing composite (f, g)" in m for m in validate_category(C).violations)


def test_non_associative_table_is_reported():
    # two idempotents e, u on one object with a table that breaks associativity
    C = FinCat(["*"], [("e", "*", "*"), ("u", "*", "*")],
               {("e", "e"): "e", ("u", "u"): "u", ("e", "u"): "e", ("u", "e"): "e"})
    v = validate_category(C)
    assert v.ok == all(
        C.then(C.then(f, g), h) == C.then(f, C.then(g, h)) for f, g, h in itertools.product(C.morphisms, repeat=3)
    )
    C = FinCat(["*"], [("e", "*", "*"), ("u", "*", "*")],
               {("e", "e"): "u", ("u", "u"): "u", ("e", "u"): "e", ("u", "e"): "u"})
    assert any("associativity" in m for m in validate_category(C).violations)


@pytest.mark.parametrize(
    "objects,morphisms,composition",
    [
        (["a", "a"], [], {}),
        (["a"], [("f", "a", "a"), ("f", "a", "a")], {}),
        (["a"], [("f", "a", "b")], {}),
        (["a"], [("id_x", "a", "a")], {}),
        (["a"], [("f", "a", "a")], {("f", "f"): "g"}),
    ],
)
def test_malformed_presentations_raise(objects, morphisms, composition):
    with pytest.raises(InputError):
        FinCat(objects, morphisms, composition)


def test_object_cap():
    with pytest.raises(CapExceeded):
        FinCat([str(k) for k in range(5)], [], {}, max_objects=4)


def test_opposite_examples():
    op = opposite(arrow())
    assert (op.src("f"), op.dst("f")) == ("1", "0")
    assert opposite(terminal()).structure() == terminal().structure()
    sq = opposite(commutative_square())
    assert validate_category(sq).ok
    assert sq.hom("d", "a") == ["diag"]


@pytest.mark.parametrize("name", sorted(BUILTIN))
def test_opposite_is_an_involution(name):
    C = BUILTIN[name]()
    assert opposite(opposite(C)).structure() == C.structure()


def test_hom_set_examples():
    assert hom_set(terminal(), "*", "*") == ["id_*"]
    assert hom_set(arrow(), "0", "1") == ["f"]
    assert hom_set(arrow(), "1", "0") == []
    assert hom_set(walking_idempotent(), "*", "*") == ["id_*", "e"]
    with pytest.raises(InputError):
        hom_set(arrow(), "0", "2")


def test_square_hom_sets():
    S = commutative_square()
    assert S.hom("a", "d") == ["diag"]
    assert S.then("f", "h") == S.then("g", "k") == "diag"


def test_functor_examples():
    A = arrow()
    assert validate_functor(identity_functor(A)).ok
    assert validate_functor(to_terminal(A)).ok
    bad = CatFunctor(A, A, {"0": "0", "1": "1"}, {"f": "id_0"})
    v = validate_functor(bad)
    assert not v.ok and "f" in v.violations[0]


def test_functor_breaking_a_composite_is_named():
    E = walking_idempotent()
    C = chain(3)
    # the square's two paths land on different arrows of a category with parallel arrows
    par = FinCat(["0", "1"], [("u", "0", "1"), ("v", "0", "1")], {})
    assert validate_category(par).ok
    S = commutative_square()
    F = CatFunctor(S, par, {"a": "0", "b": "1", "c": "1", "d": "1"},
                   {"f": "u", "g": "v", "h": "id_1", "k": "id_1", "diag": "u"})
    v = validate_functor(F)
    assert any("(g, k)" in m for m in v.violations)
    assert validate_functor(point(C, "1")).ok
    assert validate_functor(point(E, "*")).ok


def test_partial_functor_is_an_input_error():
    with pytest.raises(InputError):
        CatFunctor(arrow(), arrow(), {"0": "0"}, {})
    with pytest.raises(InputError):
        CatFunctor(arrow(), arrow(), {"0": "0", "1": "1"}, {})


@given(st.integers(1, 5))
@settings(max_examples=5, deadline=None)
def test_chain_hom_sets(n):
    C = chain(n)
    assert validate_category(C).ok
    for a, b in itertools.product(range(n), repeat=2):
        assert len(C.hom(str(a), str(b))) == (1 if a <= b else 0)


def test_fixture_names():
    assert sorted(FIXTURES) == ["arrow", "idempotent", "square", "terminal"]
