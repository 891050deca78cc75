"""Exhaustive coherence checks for a base category.

Everything is an exact equality of morphisms: pentagon, triangle, both
hexagons, involutive braiding, and the curry/uncurry bijection together
with its naturality.
"""

from __future__ import annotations

import itertools

import numpy as np

from .basecat import Base
from .report import Report

# closure instances larger than this are checked on a seeded sample
CLOSURE_ENUM_LIMIT = 512
CLOSURE_SAMPLES = 32


def pentagon_holds(B: Base, a, b, c, d) -> bool:
    A = B.associator
    I = B.identity
    T = B.tensor
    lhs = B.then(A(T(a, b), c, d), A(a, b, T(c, d)))
    rhs = B.then(
        B.tensor_mor(A(a, b, c), I(d)),
        A(a, T(b, c), d),
        B.tensor_mor(I(a), A(b, c, d)),
    )
    return lhs == rhs


def triangle_holds(B: Base, a, b) -> bool:
    k = B.unit()
    lhs = B.then(B.associator(a, k, b), B.tensor_mor(B.identity(a), B.lunitor(b)))
    rhs = B.tensor_mor(B.runitor(a), B.identity(b))
    return lhs == rhs


def hexagons_hold(B: Base, a, b, c) -> tuple[bool, bool]:
    A, S, I, T = B.associator, B.braiding, B.identity, B.tensor
    # (a b) c -> a (b c) -> (b c) a -> b (c a)
    lhs1 = B.then(A(a, b, c), S(a, T(b, c)), A(b, c, a))
    rhs1 = B.then(B.tensor_mor(S(a, b), I(c)), A(b, a, c), B.tensor_mor(I(b), S(a, c)))
    # a (b c) -> (a b) c -> c (a b) -> (c a) b
    Ai = B.associator_inv
    lhs2 = B.then(Ai(a, b, c), S(T(a, b), c), Ai(c, a, b))
    rhs2 = B.then(B.tensor_mor(I(a), S(b, c)), Ai(a, c, b), B.tensor_mor(S(a, c), I(b)))
    return lhs1 == rhs1, lhs2 == rhs2


def symmetry_holds(B: Base, a, b) -> bool:
    return B.compose(B.braiding(b, a), B.braiding(a, b)) == B.identity(B.tensor(a, b))


def _hom_sample(B: Base, a, b, rng):
    n = B.hom_count(a, b)
    if n <= CLOSURE_ENUM_LIMIT:
        return B.hom_enumerate(a, b), ""
    if n == 0:
        return [], ""
    return [B.random_mor(a, b, rng) for _ in range(CLOSURE_SAMPLES)], f"sampled {CLOSURE_SAMPLES} of {n}"


def closure_holds(B: Base, a, b, c, rng) -> tuple[bool, int, str]:
    """Round trips of curry/uncurry, the evaluation law and naturality.

    Returns ``(ok, identities checked, note)``.
    """
    ab = B.tensor(a, b)
    hb = B.internal_hom(b, c)
    fs, note = _hom_sample(B, ab, c, rng)
    gs, _ = _hom_sample(B, a, hb, rng)
    ok = True
    n = 0
    ev = B.eval_mor(b, c)
    idb = B.identity(b)
    for f in fs:
        g = B.curry(f, a, b)
        ok &= B.uncurry(g, b, c) == f
        ok &= B.compose(ev, B.tensor_mor(g, idb)) == f
        n += 2
    for g in gs:
        ok &= B.curry(B.uncurry(g, b, c), a, b) == g
        n += 1
    # naturality in a and c on a few morphisms
    for f in fs[:4]:
        g = B.curry(f, a, b)
        for a2 in range(0, 3):
            if B.hom_count(a2, a) == 0:
                continue
            u = B.random_mor(a2, a, rng)
            lhs = B.curry(B.compose(f, B.tensor_mor(u, idb)), a2, b)
            ok &= lhs == B.compose(g, u)
            n += 1
        for c2 in range(1, 3):
            if B.hom_count(c, c2) == 0:
                continue
            v = B.random_mor(c, c2, rng)
            lhs = B.curry(B.compose(v, f), a, b)
            ok &= lhs == B.compose(B.internal_hom_mor(idb, v), g)
            n += 1
    return bool(ok), n, note


def verify_coherence(B: Base, max_size: int = 3, seed: int = 0) -> Report:
    """Run every coherence identity on all objects ``0..max_size``."""
    rng = np.random.default_rng(seed)
    rep = Report()
    sizes = range(max_size + 1)
    name = B.name
    for a, b, c, d in itertools.product(sizes, repeat=4):
        rep.add("pentagon", f"{name} ({a},{b},{c},{d})", pentagon_holds(B, a, b, c, d))
    for a, b in itertools.product(sizes, repeat=2):
        rep.add("triangle", f"{name} ({a},{b})", triangle_holds(B, a, b))
    for a, b, c in itertools.product(sizes, repeat=3):
        h1, h2 = hexagons_hold(B, a, b, c)
        rep.add("hexagon", f"{name} ({a},{b},{c})", h1 and h2, detail="both hexagons", n=2)
    for a, b in itertools.product(sizes, repeat=2):
        rep.add("hexagon", f"{name} s.s=id ({a},{b})", symmetry_holds(B, a, b))
    for a, b, c in itertools.product(sizes, repeat=3):
        ok, n, note = closure_holds(B, a, b, c, rng)
        rep.add("closure", f"{name} ({a},{b},{c})", ok, detail=f"{n} identities", warning=note, n=n)
    return rep
