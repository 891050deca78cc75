"""Free functors and the Yoneda-type isomorphisms for ``M``-valued functors.

``h_i(j)`` is the coproduct of copies of the unit ``k`` indexed by the
hom-set ``I(i, j)``.  Each summand keeps its injection, and every canonical
map below is assembled from those injections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .basecat import Base, Mor
from .ends import Bifunctor, CoendResult, compute_coend
from .errors import CapExceeded, InputError
from .fincat import FinCat
from .funcat import (
    DEFAULT_MAX_NAT,
    ClosedModuleTriple,
    MFunctor,
    NatTrans,
    act,
    compose_nat,
    is_natural,
    map_functors,
    nat_transformations,
    validate_mfunctor,
)
from .report import Report


# naturality squares checked exhaustively up to this many, sampled beyond
SQUARE_BUDGET = 4000


@dataclass(frozen=True)
class FreeFunctor:
    """``h_i`` together with its summand bookkeeping.

    ``summands[(j, f)]`` is the injection ``k -> h_i(j)`` of the copy
    indexed by ``f: i -> j``.
    """

    i: str
    functor: MFunctor
    summands: dict

    @property
    def index(self) -> FinCat:
        return self.functor.index

    @property
    def base(self) -> Base:
        return self.functor.base

    def obj(self, j) -> int:
        return self.functor.obj(j)

    def __call__(self, g) -> Mor:
        return self.functor(g)

    def injection(self, j, f) -> Mor:
        return self.summands[(j, f)]


def build_h(base: Base, I: FinCat, i: str) -> FreeFunctor:
    if i not in I.objects:
        raise InputError(f"unknown object {i!r}")
    k = base.unit()
    objs, summands = {}, {}
    for j in I.objects:
        fs = I.hom(i, j)
        objs[j], injs = base.coproduct([k] * len(fs))
        for f, inj in zip(fs, injs):
            summands[(j, f)] = inj
    mors = {}
    for g in I.morphisms:
        j, j2 = I.src(g), I.dst(g)
        legs = [summands[(j2, I.then(f, g))] for f in I.hom(i, j)]
        mors[g] = base.cotuple(objs[j2], legs, objs[j])
    M = MFunctor(base, I, objs, mors, name=f"h_{i}", check=False)
    return FreeFunctor(i, M, summands)


def h_contra(hs: dict, f: str) -> NatTrans:
    """``h_f : h_i -> h_i'`` for ``f: i' -> i``; the summand ``u`` goes to ``u . f``."""
    I = next(iter(hs.values())).index
    B = next(iter(hs.values())).base
    i2, i = I.src(f), I.dst(f)
    hi, hi2 = hs[i], hs[i2]
    comps = {}
    for j in I.objects:
        legs = [hi2.injection(j, I.then(f, u)) for u in I.hom(i, j)]
        comps[j] = B.cotuple(hi2.obj(j), legs, hi.obj(j))
    return NatTrans(hi.functor, hi2.functor, comps)


def all_h(base: Base, I: FinCat) -> dict:
    return {i: build_h(base, I, i) for i in I.objects}


# -- U -| V ----------------------------------------------------------------


def free_U(base: Base, s: int):
    """``U(s)``: the ``s``-fold coproduct of the unit, with its injections."""
    return base.coproduct([base.unit()] * s)


def V(base: Base, m: int) -> list[Mor]:
    """``V(m) = M(k, m)`` as an ordered list."""
    return base.elements(m)


def uv_forward(base: Base, phi: Mor, s: int) -> tuple:
    """``M(U(s), m) -> Set(s, V(m))``: restrict along each injection."""
    _, injs = free_U(base, s)
    Vm = {v: n for n, v in enumerate(V(base, phi.dst))}
    return tuple(Vm[base.compose(phi, j)] for j in injs)


def uv_backward(base: Base, table, s: int, m: int) -> Mor:
    Vm = V(base, m)
    src, _ = free_U(base, s)
    return base.cotuple(m, [Vm[t] for t in table], src)


def verify_UV_adjunction(base: Base, s: int, m: int, rng=None, samples=3) -> Report:
    rng = rng if rng is not None else np.random.default_rng(0)
    rep = Report()
    Us, injs = free_U(base, s)
    Vm = V(base, m)
    left = base.hom_enumerate(Us, m)
    right = list(itertools.product(range(len(Vm)), repeat=s))
    ok = len(left) == len(right)
    images = set()
    for phi in left:
        t = uv_forward(base, phi, s)
        images.add(t)
        ok &= uv_backward(base, t, s, m) == phi
    for t in right:
        ok &= uv_forward(base, uv_backward(base, t, s, m), s) == t
    ok &= len(images) == len(left)
    # naturality in s (functions s' -> s) and in m (morphisms m -> m')
    nat = True
    for _ in range(samples):
        if left and s:
            s2 = int(rng.integers(0, 3))
            sigma = tuple(int(x) for x in rng.integers(0, s, size=s2))
            U_sigma = base.cotuple(Us, [injs[x] for x in sigma], free_U(base, s2)[0])
            for phi in left[:8]:
                nat &= uv_forward(base, base.compose(phi, U_sigma), s2) == tuple(
                    uv_forward(base, phi, s)[x] for x in sigma)
        m2 = int(rng.integers(1, 3))
        if base.hom_count(m, m2):
            g = base.random_mor(m, m2, rng)
            Vm2 = {v: n for n, v in enumerate(V(base, m2))}
            Vg = [Vm2[base.compose(g, v)] for v in Vm]
            for phi in left[:8]:
                nat &= uv_forward(base, base.compose(g, phi), s) == tuple(Vg[x] for x in uv_forward(base, phi, s))
    rep.add("eq1", f"{base.name} U-|V s={s} m={m}", ok and nat,
            detail=f"|M(U(s),m)|={len(left)} |Set(s,V(m))|={len(right)}", n=len(left) + len(right))
    return rep


# -- Lemma: M^I(h_i, M) = M(k, M_i) -----------------------------------------


def eq1_forward(h: FreeFunctor, t: NatTrans) -> Mor:
    i = h.i
    return h.base.compose(t[i], h.injection(i, h.index.identity(i)))


def eq1_backward(h: FreeFunctor, M: MFunctor, u: Mor) -> NatTrans:
    B, I = h.base, h.index
    comps = {j: B.cotuple(M.obj(j), [B.compose(M(f), u) for f in I.hom(h.i, j)], h.obj(j)) for j in I.objects}
    return NatTrans(h.functor, M, comps)


def verify_lemma_eq1(base: Base, I: FinCat, i: str, M: MFunctor, cap=DEFAULT_MAX_NAT) -> Report:
    h = build_h(base, I, i)
    rep = Report()
    nats = nat_transformations(h.functor, M, cap)
    elems = base.elements(M.obj(i))
    ok = len(nats) == len(elems)
    for t in nats:
        ok &= eq1_backward(h, M, eq1_forward(h, t)) == t
    fw = set()
    for u in elems:
        t = eq1_backward(h, M, u)
        ok &= is_natural(t) and eq1_forward(h, t) == u
        fw.add(t)
    ok &= fw == set(nats)
    inst = f"{base.name} {I.name} i={i} M={M.describe()}"
    rep.add("eq1", inst, ok, detail=f"|M^I(h_i,M)|={len(nats)} |M(k,M_i)|={len(elems)}",
            n=len(nats) + len(elems))
    return rep


# -- Monoidal Yoneda: map(h_i, M) = M_i --------------------------------------


def yoneda_map(h: FreeFunctor, M: MFunctor) -> Mor:
    """Canonical ``map(h_i, M) -> M_i``: leg at ``i``, restrict to the identity
    summand, then ``[k, M_i] = M_i``."""
    B, i = h.base, h.i
    mp = map_functors(h.functor, M)
    restrict = B.internal_hom_mor(h.injection(i, h.index.identity(i)), B.identity(M.obj(i)))
    return B.then(mp.legs[i], restrict, B.unit_hom_iso(M.obj(i)))


def yoneda_inverse(h: FreeFunctor, M: MFunctor) -> Mor:
    """``M_i -> map(h_i, M)`` from the wedge ``x -> (f -> M(f) x)``."""
    B, I, i = h.base, h.index, h.i
    mp = map_functors(h.functor, M)
    Mi = M.obj(i)
    k = B.unit()
    comps = {}
    for j in I.objects:
        fs = I.hom(i, j)
        legs = [B.compose(M(f), B.runitor(Mi)) for f in fs]
        body = B.from_summands(Mi, [k] * len(fs), legs, M.obj(j), side="left")
        comps[j] = B.curry(body, Mi, h.obj(j))
    return mp.end.factor(Mi, comps)


def verify_yoneda(base: Base, I: FinCat, i: str, M: MFunctor) -> Report:
    h = build_h(base, I, i)
    mp = map_functors(h.functor, M)
    fwd = yoneda_map(h, M)
    inv = yoneda_inverse(h, M)
    iso = base.is_iso(fwd)
    rt = (base.compose(fwd, inv) == base.identity(M.obj(i))
          and base.compose(inv, fwd) == base.identity(mp.carrier))
    rep = Report()
    rep.add("l2", f"{base.name} {I.name} i={i} M={M.describe()}", iso and rt,
            detail=f"carrier={mp.carrier} M_i={M.obj(i)} is_iso={iso} inverse_roundtrip={rt}", n=3)
    return rep


# -- Ev_i has left adjoint h_i (x) - -----------------------------------------


def free_on(h: FreeFunctor, m: int) -> MFunctor:
    """``F_i(m) = h_i (x) m``, pointwise ``h_i(j) (x) m``."""
    B = h.base
    idm = B.identity(m)
    return MFunctor(B, h.index, {j: B.tensor(h.obj(j), m) for j in h.index.objects},
                    {g: B.tensor_mor(h(g), idm) for g in h.index.morphisms}, check=False)


def free_on_mor(h: FreeFunctor, w: Mor) -> NatTrans:
    B = h.base
    return NatTrans(free_on(h, w.src), free_on(h, w.dst),
                    {j: B.tensor_mor(B.identity(h.obj(j)), w) for j in h.index.objects})


class EvalAdjunction:
    """``M^I(h_i (x) m, M) = M(m, M_i)``, through the closed-module structure
    and the Yoneda isomorphism."""

    def __init__(self, h: FreeFunctor):
        self.h = h
        self.base = h.base
        self._triples: dict = {}
        self._yoneda: dict = {}

    def _triple(self, m: int, M: MFunctor) -> ClosedModuleTriple:
        if (m, M) not in self._triples:
            self._triples[m, M] = ClosedModuleTriple(m, self.h.functor, M)
        return self._triples[m, M]

    def _yoneda_pair(self, M: MFunctor) -> tuple[Mor, Mor]:
        if M not in self._yoneda:
            self._yoneda[M] = (yoneda_map(self.h, M), yoneda_inverse(self.h, M))
        return self._yoneda[M]

    def forward(self, t: NatTrans, m: int) -> Mor:
        B, h = self.base, self.h
        M = t.dst
        swapped = NatTrans(
            act(m, h.functor), M,
            {j: B.compose(t[j], B.braiding(m, h.obj(j))) for j in h.index.objects},
        )
        u = self._triple(m, M).to_map(swapped)
        return B.compose(self._yoneda_pair(M)[0], u)

    def backward(self, v: Mor, M: MFunctor) -> NatTrans:
        B, h = self.base, self.h
        m = v.src
        u = B.compose(self._yoneda_pair(M)[1], v)
        t = self._triple(m, M).from_map(u)
        return NatTrans(free_on(h, m), M,
                        {j: B.compose(t[j], B.braiding(h.obj(j), m)) for j in h.index.objects})


def verify_eval_adjunction(base: Base, I: FinCat, i: str, m: int, M: MFunctor, rng=None,
                           cap=DEFAULT_MAX_NAT, samples=2, square_budget=SQUARE_BUDGET) -> Report:
    rng = rng if rng is not None else np.random.default_rng(0)
    h = build_h(base, I, i)
    adj = EvalAdjunction(h)
    Fm = free_on(h, m)
    left = nat_transformations(Fm, M, cap)
    right = base.hom_enumerate(m, M.obj(i))
    ok = len(left) == len(right)
    seen = set()
    for t in left:
        v = adj.forward(t, m)
        seen.add(v)
        ok &= adj.backward(v, M) == t
    for v in right:
        t = adj.backward(v, M)
        ok &= is_natural(t) and adj.forward(t, m) == v
    ok &= seen == set(right)
    nat = True
    nn = 0
    ws = [w for m2 in range(3) for w in base.hom_enumerate(m2, m)]
    try:
        endos = nat_transformations(M, M, cap)
    except CapExceeded:
        endos = []
    ts = left
    sampled = (len(ws) + len(endos)) * len(left) > square_budget
    if sampled:
        ws = [ws[int(k)] for k in sorted(rng.permutation(len(ws))[:samples])]
        endos = [endos[int(k)] for k in sorted(rng.permutation(len(endos))[:samples])]
        ts = left[:6]
    for w in ws:
        for t in ts:
            nat &= adj.forward(compose_nat(t, free_on_mor(h, w)), w.src) == base.compose(adj.forward(t, m), w)
            nn += 1
    for nu in endos:
        for t in ts:
            nat &= adj.forward(compose_nat(nu, t), m) == base.compose(nu[i], adj.forward(t, m))
            nn += 1
    rep = Report()
    rep.add("nl3", f"{base.name} {I.name} i={i} m={m} M={M.describe()}", ok and nat,
            detail=f"|M^I(h_i(x)m,M)|={len(left)} |M(m,M_i)|={len(right)} naturality={nn}{' sampled' if sampled else ''}",
            n=len(left) + len(right) + nn)
    return rep


# -- density: M = coend^i h_i (x) M_i -----------------------------------------


def codifferential(M: MFunctor, j: str, hs: dict | None = None, check=False) -> Bifunctor:
    """``CM(-, -)`` evaluated at ``j``: ``(i, i') -> h_i(j) (x) M_i'``."""
    B, I = M.base, M.index
    hs = hs or all_h(B, I)
    contra = {f: h_contra(hs, f) for f in I.morphisms}
    return Bifunctor(
        B, I,
        lambda i, i2: B.tensor(hs[i].obj(j), M.obj(i2)),
        lambda f, g: B.tensor_mor(contra[f][j], M(g)),
        check=check,
    )


def density_comparison(M: MFunctor, j: str, C: CoendResult, hs: dict) -> Mor:
    """``coend_i h_i(j) (x) M_i -> M_j``: the summand ``f`` acts as ``M(f)``."""
    B, I = M.base, M.index
    k = B.unit()
    comps = {}
    for i in I.objects:
        fs = I.hom(i, j)
        legs = [B.compose(M(f), B.lunitor(M.obj(i))) for f in fs]
        comps[i] = B.from_summands(M.obj(i), [k] * len(fs), legs, M.obj(j), side="right")
    return C.cofactor(M.obj(j), comps)


@dataclass
class Density:
    coends: dict
    comparisons: dict
    functor: MFunctor


def density(M: MFunctor) -> Density:
    """The coend functor ``j -> coend_i h_i(j) (x) M_i`` and its comparison to ``M``."""
    B, I = M.base, M.index
    hs = all_h(B, I)
    coends = {j: compute_coend(codifferential(M, j, hs)) for j in I.objects}
    cmps = {j: density_comparison(M, j, coends[j], hs) for j in I.objects}
    mors = {}
    for g in I.morphisms:
        j, j2 = I.src(g), I.dst(g)
        comps = {i: B.compose(coends[j2].colegs[i], B.tensor_mor(hs[i](g), B.identity(M.obj(i))))
                 for i in I.objects}
        mors[g] = coends[j].cofactor(coends[j2].carrier, comps)
    D = MFunctor(B, I, {j: coends[j].carrier for j in I.objects}, mors, name="coend", check=False)
    return Density(coends, cmps, D)


def verify_density(base: Base, I: FinCat, M: MFunctor) -> Report:
    d = density(M)
    iso = all(base.is_iso(d.comparisons[j]) for j in I.objects)
    nat = True
    for g in I.morphisms:
        j, j2 = I.src(g), I.dst(g)
        nat &= base.compose(d.comparisons[j2], d.functor(g)) == base.compose(M(g), d.comparisons[j])
    functorial = validate_mfunctor(d.functor).ok
    rep = Report()
    sizes = ",".join(str(d.coends[j].carrier) for j in I.objects)
    rep.add("l0", f"{base.name} {I.name} M={M.describe()}", iso and nat and functorial,
            detail=f"coend components=({sizes}) iso={iso} natural={nat}", n=len(I.objects) + len(I.morphisms))
    return rep
