"""The functor category ``M^I`` as a closed ``M``-module.

Functors ``I -> M`` are :class:`MFunctor` tables, morphisms are
:class:`NatTrans`.  The module action is ``(m (x) M)_i = m (x) M_i``, the
exponent is ``(M^m)_i = [m, M_i]`` and the enriched hom is the end

    map(M, N) = end_i [M_i, N_i].
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
import numpy as np

from .basecat import Base, Mor
from .ends import Bifunctor, EndResult, _families, compute_end
from .errors import CapExceeded, InputError
from .fincat import FinCat, Validation
from .report import Report

DEFAULT_MAX_NAT = 10**6


class MFunctor:
    """A functor ``I -> M``.

    ``on_morphisms`` may omit identities.  Instances are immutable and
    hashable by value.
    """

    def __init__(self, base: Base, index: FinCat, on_objects: dict, on_morphisms: dict, name="", check=True):
        self.base = base
        self.index = index
        self.name = name
        missing = [i for i in index.objects if i not in on_objects]
        if missing:
            raise InputError(f"functor object map not total: missing {missing}")
        unknown = [i for i in on_objects if i not in index.objects]
        if unknown:
            raise InputError(f"functor assigns unknown objects {unknown}")
        self.objs = {i: base.check_obj(on_objects[i]) for i in index.objects}
        mors = {}
        for f in index.morphisms:
            if f in on_morphisms:
                mors[f] = on_morphisms[f]
            elif index.is_identity(f):
                mors[f] = base.identity(self.objs[index.src(f)])
            else:
                raise InputError(f"functor morphism map not total: missing {f!r}")
        unknown = [f for f in on_morphisms if f not in mors]
        if unknown:
            raise InputError(f"functor assigns unknown morphisms {unknown}")
        self.mors: dict[str, Mor] = mors
        self.key = (
            base.name,
            hash(index),
            tuple(self.objs[i] for i in index.objects),
            tuple(mors[f].key for f in index.morphisms),
        )
        if check:
            v = validate_mfunctor(self)
            if not v.ok:
                raise InputError("invalid functor: " + "; ".join(v.violations[:5]))

    def obj(self, i) -> int:
        return self.objs[i]

    def __call__(self, f) -> Mor:
        return self.mors[f]

    def __eq__(self, other):
        return isinstance(other, MFunctor) and self.key == other.key and self.index == other.index

    def __hash__(self):
        return hash(self.key)

    def sizes(self) -> tuple:
        return tuple(self.objs[i] for i in self.index.objects)

    def describe(self) -> str:
        if self.name:
            return self.name
        return "(" + ",".join(str(s) for s in self.sizes()) + ")"

    def __repr__(self):
        return f"MFunctor({self.index.name}, {self.base.name}, {self.describe()})"


def validate_mfunctor(M: MFunctor) -> Validation:
    v = Validation()
    B, I = M.base, M.index
    for f in I.morphisms:
        m = M(f)
        if not isinstance(m, Mor) or (m.src, m.dst) != (M.obj(I.src(f)), M.obj(I.dst(f))):
            v.violations.append(f"{f} is not sent to a morphism {M.obj(I.src(f))}->{M.obj(I.dst(f))}")
    if not v.ok:
        return v
    for i in I.objects:
        if M(I.identity(i)) != B.identity(M.obj(i)):
            v.violations.append(f"identity of {i} not preserved")
    for f, g in I.composable_pairs():
        if M(I.then(f, g)) != B.compose(M(g), M(f)):
            v.violations.append(f"composite ({f}, {g}) not preserved")
    return v


class NatTrans:
    """A family of components ``M_i -> N_i`` (naturality checked separately)."""

    def __init__(self, src: MFunctor, dst: MFunctor, components: dict):
        self.src = src
        self.dst = dst
        I = src.index
        self.components = {i: components[i] for i in I.objects}
        for i, c in self.components.items():
            if (c.src, c.dst) != (src.obj(i), dst.obj(i)):
                raise InputError(f"component at {i} has type {c.src}->{c.dst}")
        self.key = tuple(self.components[i].key for i in I.objects)

    def __getitem__(self, i) -> Mor:
        return self.components[i]

    def __eq__(self, other):
        return isinstance(other, NatTrans) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"NatTrans({self.components})"


def is_natural(t: NatTrans) -> bool:
    return not validate_nattrans(t).violations


def validate_nattrans(t: NatTrans) -> Validation:
    v = Validation()
    B, I = t.src.base, t.src.index
    for f in I.non_identity:
        i, j = I.src(f), I.dst(f)
        if B.compose(t.dst(f), t[i]) != B.compose(t[j], t.src(f)):
            v.violations.append(f"naturality square fails at {f}")
    return v


def identity_nat(M: MFunctor) -> NatTrans:
    return NatTrans(M, M, {i: M.base.identity(M.obj(i)) for i in M.index.objects})


def compose_nat(t: NatTrans, s: NatTrans) -> NatTrans:
    """``t . s``."""
    B = s.src.base
    return NatTrans(s.src, t.dst, {i: B.compose(t[i], s[i]) for i in s.src.index.objects})


def nat_count_bound(M: MFunctor, N: MFunctor) -> int:
    n = 1
    for i in M.index.objects:
        n *= M.base.hom_count(M.obj(i), N.obj(i))
    return n


def nat_transformations(M: MFunctor, N: MFunctor, cap=DEFAULT_MAX_NAT) -> list[NatTrans]:
    """All natural transformations ``M -> N``.

    Brute force over component families, pruned by each naturality square
    as soon as both of its corners are assigned.
    """
    B, I = M.base, M.index
    bound = nat_count_bound(M, N)
    if bound > cap:
        raise CapExceeded(f"natural transformations {M.describe()} -> {N.describe()}", bound, cap)
    order = list(I.objects)
    pos = {i: k for k, i in enumerate(order)}
    cands = {i: B.hom_enumerate(M.obj(i), N.obj(i)) for i in order}
    checks: dict[str, list] = {i: [] for i in order}
    for f in I.non_identity:
        s, t = I.src(f), I.dst(f)
        checks[order[max(pos[s], pos[t])]].append((f, s, t))

    def consistent(a, i):
        for f, s, t in checks[i]:
            if B.compose(N(f), a[s]) != B.compose(a[t], M(f)):
                return False
        return True

    fams = _families(B, order, cands, consistent, cap)
    return [NatTrans(M, N, fam) for fam in fams]


# -- constructions ---------------------------------------------------------


def constant(base: Base, index: FinCat, obj: int, name="") -> MFunctor:
    idm = base.identity(obj)
    return MFunctor(base, index, {i: obj for i in index.objects}, {f: idm for f in index.morphisms},
                    name=name, check=False)


def unit_functor(base: Base, index: FinCat) -> MFunctor:
    return constant(base, index, base.unit(), name="K")


def from_tables(base: Base, index: FinCat, sizes: dict, tables: dict, name="") -> MFunctor:
    """Build a functor from raw tables/matrices."""
    mors = {}
    for f, t in tables.items():
        mors[f] = base.mor(sizes[index.src(f)], sizes[index.dst(f)], t)
    return MFunctor(base, index, sizes, mors, name=name)


def act(m: int, M: MFunctor) -> MFunctor:
    B = M.base
    idm = B.identity(m)
    return MFunctor(
        B, M.index,
        {i: B.tensor(m, M.obj(i)) for i in M.index.objects},
        {f: B.tensor_mor(idm, M(f)) for f in M.index.morphisms},
        check=False,
    )


def act_mor(u: Mor, M: MFunctor) -> NatTrans:
    """``u (x) M : m' (x) M -> m (x) M`` for ``u: m' -> m``."""
    B = M.base
    return NatTrans(act(u.src, M), act(u.dst, M),
                    {i: B.tensor_mor(u, B.identity(M.obj(i))) for i in M.index.objects})


def act_nat(m: int, t: NatTrans) -> NatTrans:
    """``m (x) t : m (x) M -> m (x) N``."""
    B = t.src.base
    idm = B.identity(m)
    return NatTrans(act(m, t.src), act(m, t.dst), {i: B.tensor_mor(idm, t[i]) for i in t.src.index.objects})


def exponent(M: MFunctor, m: int) -> MFunctor:
    B = M.base
    idm = B.identity(m)
    return MFunctor(
        B, M.index,
        {i: B.internal_hom(m, M.obj(i)) for i in M.index.objects},
        {f: B.internal_hom_mor(idm, M(f)) for f in M.index.morphisms},
        check=False,
    )


def exponent_nat(t: NatTrans, m: int) -> NatTrans:
    """``t^m : M^m -> N^m``."""
    B = t.src.base
    idm = B.identity(m)
    return NatTrans(exponent(t.src, m), exponent(t.dst, m),
                    {i: B.internal_hom_mor(idm, t[i]) for i in t.src.index.objects})


def exponent_mor(M: MFunctor, u: Mor) -> NatTrans:
    """``M^u : M^m -> M^m'`` for ``u: m' -> m``."""
    B = M.base
    return NatTrans(exponent(M, u.dst), exponent(M, u.src),
                    {i: B.internal_hom_mor(u, B.identity(M.obj(i))) for i in M.index.objects})


def tensor_pointwise(M: MFunctor, N: MFunctor) -> MFunctor:
    B = M.base
    return MFunctor(
        B, M.index,
        {i: B.tensor(M.obj(i), N.obj(i)) for i in M.index.objects},
        {f: B.tensor_mor(M(f), N(f)) for f in M.index.morphisms},
        check=False,
    )


def tensor_nat(s: NatTrans, t: NatTrans) -> NatTrans:
    B = s.src.base
    return NatTrans(tensor_pointwise(s.src, t.src), tensor_pointwise(s.dst, t.dst),
                    {i: B.tensor_mor(s[i], t[i]) for i in s.src.index.objects})


def precompose(X: MFunctor, phi) -> MFunctor:
    """``X . phi`` for a :class:`~catcheck.fincat.CatFunctor` ``phi: I -> J``."""
    I = phi.source
    return MFunctor(X.base, I, {i: X.obj(phi.obj(i)) for i in I.objects},
                    {f: X(phi(f)) for f in I.morphisms}, check=False)


def precompose_nat(t: NatTrans, phi) -> NatTrans:
    return NatTrans(precompose(t.src, phi), precompose(t.dst, phi),
                    {i: t[phi.obj(i)] for i in phi.source.objects})


# -- the enriched hom -----------------------------------------------------


def hom_bifunctor(M: MFunctor, N: MFunctor, check=False) -> Bifunctor:
    """``(i, j) -> [M_i, N_j]``."""
    B = M.base
    return Bifunctor(
        B, M.index,
        lambda i, j: B.internal_hom(M.obj(i), N.obj(j)),
        lambda f, g: B.internal_hom_mor(M(f), N(g)),
        check=check,
    )


@dataclass(frozen=True)
class MapObject:
    """``map(M, N)`` with its end structure."""

    M: MFunctor
    N: MFunctor
    end: EndResult

    @property
    def carrier(self) -> int:
        return self.end.carrier

    @property
    def legs(self) -> dict:
        return self.end.legs


@functools.lru_cache(maxsize=4096)
def map_functors(M: MFunctor, N: MFunctor) -> MapObject:
    if M.index != N.index or M.base != N.base:
        raise InputError("map: functors must share index and base")
    return MapObject(M, N, compute_end(hom_bifunctor(M, N)))


def map_mor(mu: NatTrans, nu: NatTrans) -> Mor:
    """``map(mu, nu) : map(M, N) -> map(M', N')`` for ``mu: M' -> M``, ``nu: N -> N'``."""
    B = mu.src.base
    src = map_functors(mu.dst, nu.src)
    dst = map_functors(mu.src, nu.dst)
    comps = {i: B.compose(B.internal_hom_mor(mu[i], nu[i]), src.legs[i]) for i in mu.src.index.objects}
    return dst.end.factor(src.carrier, comps)


def element_to_nat(mp: MapObject, e: Mor) -> NatTrans:
    """A global element ``k -> map(M, N)`` read leg by leg as ``M -> N``."""
    B, M, N = mp.M.base, mp.M, mp.N
    comps = {}
    for i in M.index.objects:
        u = B.uncurry(B.compose(mp.legs[i], e), M.obj(i), N.obj(i))
        comps[i] = B.compose(u, B.lunitor_inv(M.obj(i)))
    return NatTrans(M, N, comps)


def end_of_hom_equals_nat(M: MFunctor, N: MFunctor, cap=DEFAULT_MAX_NAT) -> Report:
    """Global elements of ``map(M, N)`` against brute-force natural transformations."""
    B = M.base
    mp = map_functors(M, N)
    elems = B.elements(mp.carrier)
    nats = nat_transformations(M, N, cap)
    image = [element_to_nat(mp, e) for e in elems]
    ok = all(is_natural(t) for t in image) and set(image) == set(nats) and len(set(image)) == len(elems)
    rep = Report()
    rep.add("l1", f"{B.name} {M.index.name} end of hom M={M.describe()} N={N.describe()}", ok,
            detail=f"|k->map(M,N)|={len(elems)} nat={len(nats)}", n=len(elems) + len(nats))
    return rep


# -- closed-module bijections ---------------------------------------------


class ClosedModuleTriple:
    """The three hom-sets of the closed-module structure for fixed ``(m, M, N)``."""

    def __init__(self, m: int, M: MFunctor, N: MFunctor):
        self.m, self.M, self.N = m, M, N
        self.mM = act(m, M)
        self.Nm = exponent(N, m)
        self.map = map_functors(M, N)

    def to_exponent(self, t: NatTrans) -> NatTrans:
        B, M, m = self.M.base, self.M, self.m
        comps = {i: B.curry(B.compose(t[i], B.braiding(M.obj(i), m)), M.obj(i), m) for i in M.index.objects}
        return NatTrans(M, self.Nm, comps)

    def from_exponent(self, s: NatTrans) -> NatTrans:
        B, M, N, m = self.M.base, self.M, self.N, self.m
        comps = {i: B.compose(B.uncurry(s[i], m, N.obj(i)), B.braiding(m, M.obj(i))) for i in M.index.objects}
        return NatTrans(self.mM, N, comps)

    def to_map(self, t: NatTrans) -> Mor:
        B, M, m = self.M.base, self.M, self.m
        comps = {i: B.curry(t[i], m, M.obj(i)) for i in M.index.objects}
        return self.map.end.factor(m, comps)

    def from_map(self, u: Mor) -> NatTrans:
        B, M, N = self.M.base, self.M, self.N
        comps = {i: B.uncurry(B.compose(self.map.legs[i], u), M.obj(i), N.obj(i)) for i in M.index.objects}
        return NatTrans(self.mM, N, comps)


def module_alpha(m: int, n: int, M: MFunctor) -> NatTrans:
    """``(m (x) n) (x) M -> m (x) (n (x) M)``."""
    B = M.base
    return NatTrans(act(B.tensor(m, n), M), act(m, act(n, M)),
                    {i: B.associator(m, n, M.obj(i)) for i in M.index.objects})


def module_lambda(M: MFunctor) -> NatTrans:
    B = M.base
    return NatTrans(act(B.unit(), M), M, {i: B.lunitor(M.obj(i)) for i in M.index.objects})


def verify_module_coherence(m: int, n: int, p: int, M: MFunctor) -> bool:
    """The three coherence diagrams of an ``M``-module, on ``M^I``."""
    B = M.base
    k = B.unit()
    T = B.tensor
    alpha = module_alpha
    # pentagon for the action
    lhs = compose_nat(alpha(m, n, act(p, M)), alpha(T(m, n), p, M))
    rhs = compose_nat(
        act_nat(m, alpha(n, p, M)),
        compose_nat(alpha(m, T(n, p), M), act_mor(B.associator(m, n, p), M)),
    )
    ok = lhs == rhs
    # (k m) c -> k (m c) -> m c  equals  l (x) c
    lhs = compose_nat(module_lambda(act(m, M)), alpha(k, m, M))
    ok &= lhs == act_mor(B.lunitor(m), M)
    # (m k) c -> m (k c) -> m c  equals  r (x) c
    lhs = compose_nat(act_nat(m, module_lambda(M)), alpha(m, k, M))
    ok &= lhs == act_mor(B.runitor(m), M)
    ok &= all(is_natural(t) for t in (alpha(m, n, M), module_lambda(M)))
    return bool(ok)


def verify_closed_module(m: int, M: MFunctor, N: MFunctor, rng=None, cap=DEFAULT_MAX_NAT,
                         naturality_samples=2) -> Report:
    """Both closed-module bijections for ``(m, M, N)``, with naturality.

    Enumerates ``M^I(m (x) M, N)``, ``M^I(M, N^m)`` and ``M(m, map(M, N))``,
    checks the constructed maps round-trip on every element and commute
    with the actions of sampled morphisms in ``m``, ``M`` and ``N``.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    B = M.base
    rep = Report()
    inst = f"{B.name} {M.index.name} m={m} M={M.describe()} N={N.describe()}"
    T = ClosedModuleTriple(m, M, N)
    warning = ""
    try:
        A = nat_transformations(T.mM, N, cap)
        Bs = nat_transformations(M, T.Nm, cap)
        C = B.hom_enumerate(m, T.map.carrier)
    except CapExceeded as exc:
        warning = f"enumeration cap exceeded ({exc}); spot-sampled"
        C = [B.random_mor(m, T.map.carrier, rng) for _ in range(8)] if B.hom_count(m, T.map.carrier) else []
        A = [T.from_map(u) for u in C]
        Bs = [T.to_exponent(t) for t in A]
    counts = (len(A), len(Bs), len(C))
    ok = warning != "" or counts[0] == counts[1] == counts[2]
    n = 0
    Bset, Cset = set(Bs), set(C)
    for t in A:
        s = T.to_exponent(t)
        u = T.to_map(t)
        ok &= is_natural(s) and (warning != "" or (s in Bset and u in Cset))
        ok &= T.from_exponent(s) == t and T.from_map(u) == t
        n += 2
    for s in Bs:
        ok &= T.to_exponent(T.from_exponent(s)) == s
        n += 1
    for u in C:
        t = T.from_map(u)
        ok &= is_natural(t) and T.to_map(t) == u
        n += 1
    ok &= warning != "" or (len(set(T.to_exponent(t) for t in A)) == len(A)
                            and len(set(T.to_map(t) for t in A)) == len(A))
    rep.add("l1", inst + " bijections", ok, detail=f"|hom(mM,N)|={counts[0]} |hom(M,N^m)|={counts[1]} "
            f"|hom(m,map)|={counts[2]}", warning=warning, n=n)

    # naturality in m, M and N
    nat_ok = True
    nn = 0
    endo_M = _sample_nats(M, M, rng, naturality_samples, cap)
    endo_N = _sample_nats(N, N, rng, naturality_samples, cap)
    us = [B.random_mor(m, m, rng) for _ in range(naturality_samples)] if B.hom_count(m, m) else []
    for u in us:
        for mu in endo_M:
            for nu in endo_N:
                for t in A[: 4]:
                    t2 = compose_nat(nu, compose_nat(t, _act_both(u, mu)))
                    s = T.to_exponent(t)
                    s2 = NatTrans(M, T.Nm, {i: B.then(mu[i], s[i], B.internal_hom_mor(u, nu[i]))
                                            for i in M.index.objects})
                    nat_ok &= T.to_exponent(t2) == s2
                    nat_ok &= T.to_map(t2) == B.then(u, T.to_map(t), map_mor(mu, nu))
                    nn += 2
    rep.add("l1", inst + " naturality", nat_ok, detail=f"{nn} squares", n=max(nn, 1))
    coh = verify_module_coherence(m, m, m, M)
    rep.add("l1", inst + " module coherence", coh, detail="action pentagon and two unit triangles", n=3)
    return rep


def _act_both(u: Mor, mu: NatTrans) -> NatTrans:
    B = mu.src.base
    return NatTrans(act(u.src, mu.src), act(u.dst, mu.dst),
                    {i: B.tensor_mor(u, mu[i]) for i in mu.src.index.objects})


def _sample_nats(M, N, rng, k, cap):
    try:
        nats = nat_transformations(M, N, cap)
    except CapExceeded:
        return [identity_nat(M)] if M == N else []
    if len(nats) <= k:
        return nats
    idx = rng.choice(len(nats), size=k, replace=False)
    return [nats[int(j)] for j in sorted(idx)]


# -- closed M-modules and module functors ------------------------------------


class BaseModule:
    """``M`` regarded as a closed module over itself."""

    def __init__(self, base: Base):
        self.base = base

    def act(self, m, c):
        return self.base.tensor(m, c)

    def act_mor(self, u, c):
        return self.base.tensor_mor(u, self.base.identity(c))

    def act_arrow(self, m, x):
        return self.base.tensor_mor(self.base.identity(m), x)

    def alpha(self, m, n, c):
        return self.base.associator(m, n, c)

    def lam(self, c):
        return self.base.lunitor(c)

    def hom(self, c, d, cap=DEFAULT_MAX_NAT):
        return self.base.hom_enumerate(c, d)

    def compose(self, y, x):
        return self.base.compose(y, x)

    def identity(self, c):
        return self.base.identity(c)

    def is_iso(self, x):
        return self.base.is_iso(x)

    def map_obj(self, c, d):
        return self.base.internal_hom(c, d)

    def map_curry(self, t, m, c, d):
        return self.base.curry(t, m, c)

    def map_uncurry(self, u, m, c, d):
        return self.base.uncurry(u, c, d)

    def describe(self, c):
        return str(c)


class FunctorModule:
    """``M^I`` as a closed ``M``-module."""

    def __init__(self, base: Base, index: FinCat):
        self.base = base
        self.index = index

    def act(self, m, M):
        return act(m, M)

    def act_mor(self, u, M):
        return act_mor(u, M)

    def act_arrow(self, m, t):
        return act_nat(m, t)

    def alpha(self, m, n, M):
        return module_alpha(m, n, M)

    def lam(self, M):
        return module_lambda(M)

    def hom(self, M, N, cap=DEFAULT_MAX_NAT):
        return nat_transformations(M, N, cap)

    def compose(self, t, s):
        return compose_nat(t, s)

    def identity(self, M):
        return identity_nat(M)

    def is_iso(self, t):
        return all(self.base.is_iso(t[i]) for i in self.index.objects)

    def map_obj(self, M, N):
        return map_functors(M, N).carrier

    def map_curry(self, t, m, M, N):
        return ClosedModuleTriple(m, M, N).to_map(t)

    def map_uncurry(self, u, m, M, N):
        return ClosedModuleTriple(m, M, N).from_map(u)

    def describe(self, M):
        return M.describe()


@dataclass
class ModuleFunctor:
    """A functor of ``M``-modules with its structure isos
    ``mu(m, c): m (x) F(c) -> F(m (x) c)``."""

    name: str
    source: object
    target: object
    on_obj: object
    on_mor: object
    mu: object


def verify_module_functor(F: ModuleFunctor, samples) -> Report:
    """``mu`` is invertible and both module-functor diagrams commute.

    ``samples`` is an iterable of ``(m, n, c)``.
    """
    rep = Report()
    D = F.target
    B = D.base
    k = B.unit()
    for m, n, c in samples:
        mu = F.mu
        iso = D.is_iso(mu(m, c))
        # (m n) F c -> F((m n) c) -> F(m (n c))  versus
        # (m n) F c -> m (n F c) -> m F(n c) -> F(m (n c))
        lhs = D.compose(F.on_mor(F.source.alpha(m, n, c)), mu(B.tensor(m, n), c))
        rhs = D.compose(
            mu(m, F.source.act(n, c)),
            D.compose(D.act_arrow(m, mu(n, c)), D.alpha(m, n, F.on_obj(c))),
        )
        assoc = lhs == rhs
        unit = D.compose(F.on_mor(F.source.lam(c)), mu(k, c)) == D.lam(F.on_obj(c))
        rep.add("nt1", f"{B.name} module functor {F.name} m={m} n={n} c={F.source.describe(c)}",
                iso and assoc and unit, detail=f"mu iso={iso} assoc={assoc} unit={unit}", n=3)
    return rep


# -- enumerating and sampling functors -------------------------------------


def _law_checks(I: FinCat):
    """Composition laws of ``I`` grouped by the last non-identity arrow they
    mention, in presentation order."""
    order = list(I.non_identity)
    pos = {f: k for k, f in enumerate(order)}
    checks: dict[str, list] = {f: [] for f in order}
    for (f, g), h in I.composition.items():
        involved = [f, g] + ([] if I.is_identity(h) else [h])
        checks[order[max(pos[x] for x in involved)]].append((f, g, h))
    return order, checks


def _consistent(B: Base, I: FinCat, sizes, checks):
    def value(a, x):
        return B.identity(sizes[I.src(x)]) if I.is_identity(x) else a[x]

    def ok(a, f):
        return all(value(a, h) == B.compose(a[g], a[ff]) for ff, g, h in checks[f])

    return ok


def functors_with_sizes(base: Base, I: FinCat, sizes: dict, cap=DEFAULT_MAX_NAT) -> list[MFunctor]:
    order, checks = _law_checks(I)
    cands = {f: base.hom_enumerate(sizes[I.src(f)], sizes[I.dst(f)]) for f in order}
    fams = _families(base, order, cands, _consistent(base, I, sizes, checks), cap)
    return [MFunctor(base, I, sizes, fam, check=False) for fam in fams]


def enumerate_functors(base: Base, I: FinCat, max_size: int, min_size=0, cap=DEFAULT_MAX_NAT) -> list[MFunctor]:
    """Every functor ``I -> M`` whose components have size in ``[min_size, max_size]``.

    Ordered by size vector (lexicographic), then by morphism tables.
    """
    out = []
    for sz in itertools.product(range(min_size, max_size + 1), repeat=len(I.objects)):
        out.extend(functors_with_sizes(base, I, dict(zip(I.objects, sz)), cap))
    return out


def random_functor(base: Base, I: FinCat, max_size: int, rng, min_size=0, tries=1000) -> MFunctor:
    """A functor with random sizes, built arrow by arrow among the choices
    compatible with the composition table; restarts on a dead end."""
    order, checks = _law_checks(I)
    for _ in range(tries):
        sizes = {i: int(rng.integers(min_size, max_size + 1)) for i in I.objects}
        ok = _consistent(base, I, sizes, checks)
        a: dict = {}
        for f in order:
            cands = base.hom_enumerate(sizes[I.src(f)], sizes[I.dst(f)])
            good = []
            for c in cands:
                a[f] = c
                if ok(a, f):
                    good.append(c)
            if not good:
                a.pop(f, None)
                break
            a[f] = good[int(rng.integers(len(good)))]
        else:
            return MFunctor(base, I, sizes, a, check=False)
    raise CapExceeded("random functor attempts", tries, tries)
