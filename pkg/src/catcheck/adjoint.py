"""Right adjoints of cocontinuous module functors out of ``M^I``.

For a module functor ``F: M^I -> C`` the right adjoint is

    G(Y)_i = map_C(F(h_i), Y).

Three left adjoints are instantiated: precomposition ``- . phi`` (its right
adjoint is the right Kan extension), ``- (x) N`` on ``M^I`` (giving the
internal hom ``P^N``), and ``h_i (x) -`` (right adjoint ``Ev_i``).  Every
adjunction is checked through explicit hom-set translations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .basecat import Base, Mor
from .fincat import CatFunctor, FinCat, point, to_terminal
from .funcat import (
    DEFAULT_MAX_NAT,
    BaseModule,
    FunctorModule,
    MFunctor,
    ModuleFunctor,
    NatTrans,
    act,
    identity_nat,
    is_natural,
    map_functors,
    map_mor,
    nat_transformations,
    precompose,
    precompose_nat,
    tensor_nat,
    tensor_pointwise,
    unit_functor,
    validate_mfunctor,
)
from .report import Report
from .yoneda import SQUARE_BUDGET, EvalAdjunction, all_h, build_h, density, free_on, free_on_mor, h_contra


@dataclass
class AdjunctionWitness:
    """``F -| G`` with executable hom-set translations.

    ``forward(phi, c, d)`` sends ``phi: F c -> d`` to ``c -> G d``;
    ``backward(psi, c, d)`` goes the other way.
    """

    label: str
    left: ModuleFunctor
    right_obj: Callable
    right_mor: Callable
    forward: Callable
    backward: Callable


def verify_adjunction(W: AdjunctionWitness, c, d, rng=None, cap=DEFAULT_MAX_NAT, samples=2,
                      tag="", square_budget=SQUARE_BUDGET) -> Report:
    """Round trips on the fully enumerated hom-sets plus naturality squares.

    Every square against every endomorphism of ``c`` and ``d`` is checked
    unless that exceeds ``square_budget``; then a seeded sample is taken.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    F = W.left
    C, D = F.source, F.target
    Fc, Gd = F.on_obj(c), W.right_obj(d)
    left = D.hom(Fc, d, cap)
    right = C.hom(c, Gd, cap)
    ok = len(left) == len(right)
    right_set = set(right)
    images = set()
    for phi in left:
        psi = W.forward(phi, c, d)
        images.add(psi)
        ok &= psi in right_set and W.backward(psi, c, d) == phi
    for psi in right:
        ok &= W.forward(W.backward(psi, c, d), c, d) == psi
    ok &= len(images) == len(left)

    nat = True
    nn = 0
    ends_c = C.hom(c, c, cap)
    ends_d = D.hom(d, d, cap)
    phis = left
    sampled = (len(ends_c) + len(ends_d)) * len(left) > square_budget
    if sampled:
        ends_c, ends_d = _pick(ends_c, rng, samples), _pick(ends_d, rng, samples)
        phis = _pick(left, rng, 6)
    for x in ends_c:
        for phi in phis:
            nat &= W.forward(D.compose(phi, F.on_mor(x)), c, d) == C.compose(W.forward(phi, c, d), x)
            nn += 1
    for y in ends_d:
        for phi in phis:
            nat &= W.forward(D.compose(y, phi), c, d) == C.compose(W.right_mor(y), W.forward(phi, c, d))
            nn += 1
    rep = Report()
    rep.add(W.label, f"{F.target.base.name} {F.name} -| G{tag} c={C.describe(c)} d={D.describe(d)}",
            ok and nat, detail=f"|D(Fc,d)|={len(left)} |C(c,Gd)|={len(right)} naturality={nn}{' sampled' if sampled else ''}",
            n=len(left) + len(right) + nn)
    return rep


def _pick(xs, rng, k):
    if len(xs) <= k:
        return list(xs)
    idx = sorted(int(j) for j in rng.choice(len(xs), size=k, replace=False))
    return [xs[j] for j in idx]


def map_level_comparison(W: AdjunctionWitness, c, d) -> Mor:
    """Canonical ``map_C(c, G d) -> map_D(F c, d)``, obtained by pushing the
    identity of ``map_C(c, G d)`` through the hom-set bijections."""
    F = W.left
    C, D = F.source, F.target
    B = D.base
    Gd = W.right_obj(d)
    m = C.map_obj(c, Gd)
    t = C.map_uncurry(B.identity(m), m, c, Gd)
    phi = W.backward(t, C.act(m, c), d)
    phi = D.compose(phi, F.mu(m, c))
    return D.map_curry(phi, m, F.on_obj(c), d)


def verify_map_level_iso(W: AdjunctionWitness, c, d) -> Report:
    F = W.left
    B = F.target.base
    cmp = map_level_comparison(W, c, d)
    rep = Report()
    rep.add(W.label, f"{B.name} map-level iso for {F.name} c={F.source.describe(c)} d={F.target.describe(d)}",
            B.is_iso(cmp), detail=f"map_C(c,Gd)={cmp.src} map_D(Fc,d)={cmp.dst}")
    return rep


# -- precomposition and its right adjoint (right Kan extension) ---------------


class KanExtension:
    """``- . phi : M^J -> M^I`` and its right adjoint."""

    def __init__(self, base: Base, phi: CatFunctor):
        self.base = base
        self.phi = phi
        self.I, self.J = phi.source, phi.target
        self.hJ = all_h(base, self.J)
        self._hphi = {j: precompose(h.functor, phi) for j, h in self.hJ.items()}
        # both depend on Y alone and get rebuilt for every hom-set element otherwise
        self._rights: dict = {}
        self._maps: dict = {}

    def _map(self, j, Y: MFunctor):
        key = (j, Y)
        if key not in self._maps:
            self._maps[key] = map_functors(self._hphi[j], Y)
        return self._maps[key]

    def h_phi(self, j) -> MFunctor:
        return self._hphi[j]

    def right(self, Y: MFunctor) -> MFunctor:
        """``G(Y)_j = map(h_j . phi, Y)``; on ``g: j -> j'`` through the end factorizer."""
        if Y in self._rights:
            return self._rights[Y]
        B, J = self.base, self.J
        objs = {j: self._map(j, Y).carrier for j in J.objects}
        mors = {}
        idY = identity_nat(Y)
        for g in J.morphisms:
            pre = precompose_nat(h_contra(self.hJ, g), self.phi)
            mors[g] = map_mor(pre, idY)
        G = self._rights[Y] = MFunctor(B, J, objs, mors, name=f"Ran({Y.describe()})", check=False)
        return G

    def right_nat(self, nu: NatTrans) -> NatTrans:
        G1, G2 = self.right(nu.src), self.right(nu.dst)
        comps = {j: map_mor(identity_nat(self._hphi[j]), nu) for j in self.J.objects}
        return NatTrans(G1, G2, comps)

    def forward(self, t: NatTrans, X: MFunctor, Y: MFunctor) -> NatTrans:
        """``M^I(X . phi, Y) -> M^J(X, G Y)``."""
        B, I, J, phi = self.base, self.I, self.J, self.phi
        k = B.unit()
        comps = {}
        for j in J.objects:
            Xj = X.obj(j)
            wedge = {}
            for i in I.objects:
                gs = J.hom(j, phi.obj(i))
                legs = [B.then(B.runitor(Xj), X(g), t[i]) for g in gs]
                body = B.from_summands(Xj, [k] * len(gs), legs, Y.obj(i), side="left")
                wedge[i] = B.curry(body, Xj, self._hphi[j].obj(i))
            comps[j] = self._map(j, Y).end.factor(Xj, wedge)
        return NatTrans(X, self.right(Y), comps)

    def backward(self, s: NatTrans, X: MFunctor, Y: MFunctor) -> NatTrans:
        """Evaluate at identity summands."""
        B, I, phi = self.base, self.I, self.phi
        comps = {}
        for i in I.objects:
            j = phi.obj(i)
            mp = self._map(j, Y)
            inj = self.hJ[j].injection(j, self.J.identity(j))
            comps[i] = B.then(
                s[j],
                mp.legs[i],
                B.internal_hom_mor(inj, B.identity(Y.obj(i))),
                B.unit_hom_iso(Y.obj(i)),
            )
        return NatTrans(precompose(X, phi), Y, comps)

    def module_functor(self) -> ModuleFunctor:
        B, phi = self.base, self.phi
        return ModuleFunctor(
            name=f"-.{phi.name or 'phi'}",
            source=FunctorModule(B, self.J),
            target=FunctorModule(B, self.I),
            on_obj=lambda X: precompose(X, phi),
            on_mor=lambda t: precompose_nat(t, phi),
            mu=lambda m, X: identity_nat(precompose(act(m, X), phi)),
        )

    def witness(self) -> AdjunctionWitness:
        return AdjunctionWitness(
            label="ex1",
            left=self.module_functor(),
            right_obj=self.right,
            right_mor=self.right_nat,
            forward=lambda t, X, Y: self.forward(t, X, Y),
            backward=lambda s, X, Y: self.backward(s, X, Y),
        )


def right_adjoint_of_precomposition(base: Base, phi: CatFunctor, Y: MFunctor) -> MFunctor:
    return KanExtension(base, phi).right(Y)


def verify_precomposition_adjunction(base: Base, phi: CatFunctor, X: MFunctor, Y: MFunctor, rng=None,
                                     cap=DEFAULT_MAX_NAT) -> Report:
    K = KanExtension(base, phi)
    W = K.witness()
    rep = verify_adjunction(W, X, Y, rng, cap, tag=f" phi={phi.name}")
    G = K.right(Y)
    rep.add("ex1", f"{base.name} Ran along {phi.name} of Y={Y.describe()}", validate_mfunctor(G).ok,
            detail="G(Y)=(" + ",".join(str(s) for s in G.sizes()) + ")")
    rep.extend(verify_map_level_iso(W, X, Y))
    return rep


# -- closed monoidal structure on M^I -----------------------------------------


class FunctorCategoryClosure:
    """``- (x) N -| (-)^N`` on ``M^I`` with ``(P^N)_i = map(h_i (x) N, P)``."""

    def __init__(self, base: Base, N: MFunctor):
        self.base = base
        self.N = N
        self.I = N.index
        self.hs = all_h(base, self.I)
        self._hN = {i: tensor_pointwise(h.functor, N) for i, h in self.hs.items()}
        self._homs: dict = {}
        self._maps: dict = {}

    def hN(self, i) -> MFunctor:
        return self._hN[i]

    def _map(self, i, P: MFunctor):
        key = (i, P)
        if key not in self._maps:
            self._maps[key] = map_functors(self._hN[i], P)
        return self._maps[key]

    def internal_hom(self, P: MFunctor) -> MFunctor:
        if P in self._homs:
            return self._homs[P]
        B, I, N = self.base, self.I, self.N
        objs = {i: self._map(i, P).carrier for i in I.objects}
        idN, idP = identity_nat(N), identity_nat(P)
        mors = {g: map_mor(tensor_nat(h_contra(self.hs, g), idN), idP) for g in I.morphisms}
        PN = self._homs[P] = MFunctor(B, I, objs, mors, name=f"{P.describe()}^{N.describe()}", check=False)
        return PN

    def internal_hom_nat(self, nu: NatTrans) -> NatTrans:
        comps = {i: map_mor(identity_nat(self.hN(i)), nu) for i in self.I.objects}
        return NatTrans(self.internal_hom(nu.src), self.internal_hom(nu.dst), comps)

    def forward(self, t: NatTrans, M: MFunctor, P: MFunctor) -> NatTrans:
        """``M^I(M (x) N, P) -> M^I(M, P^N)``."""
        B, I, N = self.base, self.I, self.N
        k = B.unit()
        comps = {}
        for i in I.objects:
            Mi = M.obj(i)
            wedge = {}
            for j in I.objects:
                fs = I.hom(i, j)
                Nj = N.obj(j)
                kN = B.tensor(k, Nj)
                legs = [B.compose(t[j], B.tensor_mor(M(f), B.lunitor(Nj))) for f in fs]
                body = B.from_summands(Mi, [kN] * len(fs), legs, P.obj(j), side="left")
                d1 = B.distributor(Nj, [k] * len(fs), side="right")
                body = B.compose(body, B.tensor_mor(B.identity(Mi), B.inverse(d1)))
                wedge[j] = B.curry(body, Mi, self.hN(i).obj(j))
            comps[i] = self._map(i, P).end.factor(Mi, wedge)
        return NatTrans(M, self.internal_hom(P), comps)

    def backward(self, s: NatTrans, M: MFunctor, P: MFunctor) -> NatTrans:
        B, I, N = self.base, self.I, self.N
        comps = {}
        for i in I.objects:
            h = self.hs[i]
            mp = self._map(i, P)
            Ni = N.obj(i)
            unc = B.uncurry(B.compose(mp.legs[i], s[i]), self.hN(i).obj(i), P.obj(i))
            inj = h.injection(i, I.identity(i))
            into = B.compose(B.tensor_mor(inj, B.identity(Ni)), B.lunitor_inv(Ni))
            comps[i] = B.compose(unc, B.tensor_mor(B.identity(M.obj(i)), into))
        return NatTrans(tensor_pointwise(M, N), P, comps)

    def module_functor(self) -> ModuleFunctor:
        B, N = self.base, self.N
        return ModuleFunctor(
            name=f"-(x){N.describe()}",
            source=FunctorModule(B, self.I),
            target=FunctorModule(B, self.I),
            on_obj=lambda M: tensor_pointwise(M, N),
            on_mor=lambda t: tensor_nat(t, identity_nat(N)),
            mu=lambda m, M: NatTrans(
                act(m, tensor_pointwise(M, N)), tensor_pointwise(act(m, M), N),
                {i: B.associator_inv(m, M.obj(i), N.obj(i)) for i in self.I.objects},
            ),
        )

    def witness(self) -> AdjunctionWitness:
        return AdjunctionWitness(
            label="monoidal-MI",
            left=self.module_functor(),
            right_obj=self.internal_hom,
            right_mor=self.internal_hom_nat,
            forward=lambda t, M, P: self.forward(t, M, P),
            backward=lambda s, M, P: self.backward(s, M, P),
        )


def internal_hom_functorcat(base: Base, N: MFunctor, P: MFunctor) -> MFunctor:
    return FunctorCategoryClosure(base, N).internal_hom(P)


def _pointwise_nat(base, src, dst, comp):
    return NatTrans(src, dst, {i: comp(i) for i in src.index.objects})


def verify_pointwise_monoidal(base: Base, M: MFunctor, N: MFunctor, P: MFunctor) -> bool:
    """Associator, unitors and braiding of ``M^I`` are natural and satisfy
    pentagon, triangle, hexagon and ``s . s = id`` componentwise."""
    from .coherence import hexagons_hold, pentagon_holds, symmetry_holds, triangle_holds

    T = tensor_pointwise
    K = unit_functor(base, M.index)
    ok = True
    nats = [
        _pointwise_nat(base, T(T(M, N), P), T(M, T(N, P)), lambda i: base.associator(M.obj(i), N.obj(i), P.obj(i))),
        _pointwise_nat(base, T(K, M), M, lambda i: base.lunitor(M.obj(i))),
        _pointwise_nat(base, T(M, K), M, lambda i: base.runitor(M.obj(i))),
        _pointwise_nat(base, T(M, N), T(N, M), lambda i: base.braiding(M.obj(i), N.obj(i))),
    ]
    ok &= all(is_natural(t) and all(base.is_iso(t[i]) for i in M.index.objects) for t in nats)
    for i in M.index.objects:
        a, b, c = M.obj(i), N.obj(i), P.obj(i)
        ok &= pentagon_holds(base, a, b, c, a) and triangle_holds(base, a, b)
        ok &= all(hexagons_hold(base, a, b, c)) and symmetry_holds(base, a, b)
    return bool(ok)


def verify_closed_monoidal_functorcat(base: Base, M: MFunctor, N: MFunctor, P: MFunctor, rng=None,
                                      cap=DEFAULT_MAX_NAT) -> Report:
    C = FunctorCategoryClosure(base, N)
    W = C.witness()
    rep = verify_adjunction(W, M, P, rng, cap)
    PN = C.internal_hom(P)
    rep.add("monoidal-MI", f"{base.name} {M.index.name} internal hom P^N N={N.describe()} P={P.describe()}",
            validate_mfunctor(PN).ok, detail="P^N=(" + ",".join(str(s) for s in PN.sizes()) + ")")
    rep.add("monoidal-MI", f"{base.name} {M.index.name} pointwise coherence M={M.describe()} N={N.describe()} "
            f"P={P.describe()}", verify_pointwise_monoidal(base, M, N, P), n=7)
    return rep


# -- h_i (x) - -| Ev_i ---------------------------------------------------------


def eval_witness(base: Base, I: FinCat, i: str) -> AdjunctionWitness:
    h = build_h(base, I, i)
    E = EvalAdjunction(h)
    F = ModuleFunctor(
        name=f"h_{i}(x)-",
        source=BaseModule(base),
        target=FunctorModule(base, I),
        on_obj=lambda c: free_on(h, c),
        on_mor=lambda w: free_on_mor(h, w),
        mu=lambda m, c: NatTrans(
            act(m, free_on(h, c)), free_on(h, base.tensor(m, c)),
            {j: base.then(
                base.associator_inv(m, h.obj(j), c),
                base.tensor_mor(base.braiding(m, h.obj(j)), base.identity(c)),
                base.associator(h.obj(j), m, c),
            ) for j in I.objects},
        ),
    )
    return AdjunctionWitness(
        label="nl3",
        left=F,
        right_obj=lambda M: M.obj(i),
        right_mor=lambda nu: nu[i],
        forward=lambda t, c, M: E.forward(t, c),
        backward=lambda v, c, M: E.backward(v, M),
    )


def evaluation_module_functor(base: Base, I: FinCat, i: str) -> ModuleFunctor:
    return ModuleFunctor(
        name=f"Ev_{i}",
        source=FunctorModule(base, I),
        target=BaseModule(base),
        on_obj=lambda M: M.obj(i),
        on_mor=lambda t: t[i],
        mu=lambda m, M: base.identity(base.tensor(m, M.obj(i))),
    )


def verify_two_sided_evaluation(base: Base, I: FinCat, i: str, m: int, M: MFunctor, rng=None,
                                cap=DEFAULT_MAX_NAT) -> Report:
    """``h_i (x) - -| Ev_i -| Ran_{pt_i}`` on the same samples.

    ``Ev_i`` is identified with precomposition along ``pt_i: 1 -> I``; the
    check also confirms the two descriptions agree on ``M``.
    """
    rep = Report()
    rep.extend(verify_adjunction(eval_witness(base, I, i), m, M, rng, cap))
    phi = point(I, i)
    K = KanExtension(base, phi)
    Ev_M = precompose(M, phi)
    agree = Ev_M.obj(phi.source.objects[0]) == M.obj(i)
    T = phi.source
    Y = MFunctor(base, T, {T.objects[0]: m}, {}, check=False)
    rep.extend(verify_adjunction(K.witness(), M, Y, rng, cap, tag=f" phi=pt_{i}"))
    rep.add("ex1", f"{base.name} {I.name} Ev_{i} two-sided m={m} M={M.describe()}", agree,
            detail="Ev_i equals precomposition along pt_i")
    return rep


# -- consistency and cocontinuity --------------------------------------------


def verify_limit_consistency(base: Base, Y: MFunctor, cap=DEFAULT_MAX_NAT) -> Report:
    """Ran along ``I -> 1`` is the end ``map(K, Y)``; its global elements are
    the cones ``K -> Y``."""
    I = Y.index
    G = right_adjoint_of_precomposition(base, to_terminal(I), Y)
    lim = G.obj(G.index.objects[0])
    direct = map_functors(unit_functor(base, I), Y).carrier
    cones = len(nat_transformations(unit_functor(base, I), Y, cap))
    ok = lim == direct and base.hom_count(base.unit(), lim) == cones
    rep = Report()
    rep.add("ex1", f"{base.name} {I.name} Ran along ! of Y={Y.describe()}", ok,
            detail=f"G(Y)={lim} end={direct} cones={cones}")
    return rep


def verify_cocontinuity(base: Base, M: MFunctor, N: MFunctor | None = None, phi: CatFunctor | None = None) -> Report:
    """The density comparison of ``M`` stays invertible after applying
    ``- (x) N`` or precomposition along ``phi``."""
    d = density(M)
    rep = Report()
    if N is not None:
        ok = all(base.is_iso(base.tensor_mor(d.comparisons[j], base.identity(N.obj(j)))) for j in M.index.objects)
        rep.add("nt1", f"{base.name} {M.index.name} -(x){N.describe()} preserves density of M={M.describe()}", ok)
    if phi is not None:
        ok = all(base.is_iso(d.comparisons[phi.obj(i)]) for i in phi.source.objects)
        rep.add("nt1", f"{base.name} -.{phi.name} preserves density of M={M.describe()}", ok)
    return rep
