"""Ends and coends of bifunctors ``I^op x I -> M``.

An end is computed as the equalizer of the two canonical maps

    prod_i F(i,i)  ==>  prod_{f: i->j} F(i,j)

and a coend as the coequalizer of

    coprod_{f: i->j} F(j,i)  ==>  coprod_i F(i,i).

Identity arrows contribute equal components to both maps, so only
non-identity arrows are used.
"""

from __future__ import annotations

from typing import Callable

from .basecat import Base, Mor
from .errors import CapExceeded, InputError, PreconditionError
from .fincat import FinCat
from .fincat import Validation

DEFAULT_MAX_CANDIDATES = 10**6


class Bifunctor:
    """``F: I^op x I -> M`` materialised as tables.

    ``mor_at(f, g)`` with ``f: i' -> i`` and ``g: j -> j'`` must return the
    morphism ``F(i, j) -> F(i', j')``.
    """

    def __init__(self, base: Base, index: FinCat, obj_at: Callable, mor_at: Callable, check=True):
        self.base = base
        self.index = index
        I = index
        self.objs = {(i, j): base.check_obj(obj_at(i, j)) for i in I.objects for j in I.objects}
        self.mors: dict[tuple[str, str], Mor] = {}
        for f in I.morphisms:
            for g in I.morphisms:
                self.mors[(f, g)] = mor_at(f, g)
        if check:
            v = validate_bifunctor(self)
            if not v.ok:
                raise InputError("invalid bifunctor: " + "; ".join(v.violations[:5]))

    def obj(self, i, j) -> int:
        return self.objs[(i, j)]

    def mor(self, f, g) -> Mor:
        return self.mors[(f, g)]

    def left(self, f, j) -> Mor:
        """``F(f, j): F(i, j) -> F(i', j)`` for ``f: i' -> i``."""
        return self.mors[(f, self.index.identity(j))]

    def right(self, i, g) -> Mor:
        """``F(i, g): F(i, j) -> F(i, j')`` for ``g: j -> j'``."""
        return self.mors[(self.index.identity(i), g)]


def validate_bifunctor(F: Bifunctor) -> Validation:
    v = Validation()
    B, I = F.base, F.index
    for (f, g), m in F.mors.items():
        want = (F.obj(I.dst(f), I.src(g)), F.obj(I.src(f), I.dst(g)))
        if (m.src, m.dst) != want:
            v.violations.append(f"F({f},{g}) has type {m.src}->{m.dst}, expected {want[0]}->{want[1]}")
    if not v.ok:
        return v
    for i in I.objects:
        for j in I.objects:
            if F.mor(I.identity(i), I.identity(j)) != B.identity(F.obj(i, j)):
                v.violations.append(f"F(id_{i}, id_{j}) is not an identity")
    # F(f1 . f2, g2 . g1) = F(f2, g2) . F(f1, g1)
    pairs = list(I.composable_pairs())
    for f2, f1 in pairs:
        for g1, g2 in pairs:
            lhs = F.mor(I.then(f2, f1), I.then(g1, g2))
            rhs = B.compose(F.mor(f2, g2), F.mor(f1, g1))
            if lhs != rhs:
                v.violations.append(f"functoriality fails at ({f1},{f2}),({g1},{g2})")
    return v


class EndResult:
    """A universal wedge ``carrier -> F``."""

    def __init__(self, F: Bifunctor):
        self.F = F
        B, I = F.base, F.index
        self.base = B
        P, pi = B.product([F.obj(i, i) for i in I.objects])
        self._pi = dict(zip(I.objects, pi))
        arrows = I.non_identity
        u = B.tuple(P, [B.compose(F.right(I.src(f), f), self._pi[I.src(f)]) for f in arrows])
        v = B.tuple(P, [B.compose(F.left(f, I.dst(f)), self._pi[I.dst(f)]) for f in arrows])
        self._eq = B.equalizer(u, v)
        self.carrier = self._eq.obj
        self.legs = {i: B.compose(self._pi[i], self._eq.include) for i in I.objects}

    def is_wedge(self, w: int, components: dict) -> bool:
        F, B, I = self.F, self.base, self.F.index
        for i in I.objects:
            c = components[i]
            if (c.src, c.dst) != (w, F.obj(i, i)):
                return False
        for f in I.non_identity:
            i, j = I.src(f), I.dst(f)
            if B.compose(F.right(i, f), components[i]) != B.compose(F.left(f, j), components[j]):
                return False
        return True

    def factor(self, w: int, components: dict) -> Mor:
        """The unique ``w -> carrier`` through which the wedge factors."""
        if not self.is_wedge(w, components):
            raise PreconditionError("components do not form a wedge")
        B = self.base
        t = B.tuple(w, [components[i] for i in self.F.index.objects])
        return self._eq.factor(t)


class CoendResult:
    """A universal cowedge ``F -> carrier``."""

    def __init__(self, F: Bifunctor):
        self.F = F
        B, I = F.base, F.index
        self.base = B
        D, inj = B.coproduct([F.obj(i, i) for i in I.objects])
        self._inj = dict(zip(I.objects, inj))
        arrows = I.non_identity
        src = B.coproduct_obj([F.obj(I.dst(f), I.src(f)) for f in arrows])
        # f: i -> j acts F(j,i) -> F(i,i) and F(j,i) -> F(j,j)
        u = B.cotuple(D, [B.compose(self._inj[I.src(f)], F.left(f, I.src(f))) for f in arrows], src)
        v = B.cotuple(D, [B.compose(self._inj[I.dst(f)], F.right(I.dst(f), f)) for f in arrows], src)
        self._coeq = B.coequalizer(u, v)
        self.carrier = self._coeq.obj
        self.colegs = {i: B.compose(self._coeq.project, self._inj[i]) for i in I.objects}

    def is_cowedge(self, z: int, components: dict) -> bool:
        F, B, I = self.F, self.base, self.F.index
        for i in I.objects:
            c = components[i]
            if (c.src, c.dst) != (F.obj(i, i), z):
                return False
        for f in I.non_identity:
            i, j = I.src(f), I.dst(f)
            if B.compose(components[i], F.left(f, i)) != B.compose(components[j], F.right(j, f)):
                return False
        return True

    def cofactor(self, z: int, components: dict) -> Mor:
        if not self.is_cowedge(z, components):
            raise PreconditionError("components do not form a cowedge")
        B = self.base
        t = B.cotuple(z, [components[i] for i in self.F.index.objects])
        return self._coeq.factor(t)


def compute_end(F: Bifunctor) -> EndResult:
    return EndResult(F)


def compute_coend(F: Bifunctor) -> CoendResult:
    return CoendResult(F)


# -- brute-force enumeration of wedges (oracle side) ----------------------


def _families(B: Base, order, candidates, consistent, cap):
    """Depth-first enumeration of families ``{i: candidate}``.

    ``consistent(assigned, i)`` is called after assigning ``i`` and may
    inspect only already-assigned keys.
    """
    size = 1
    for i in order:
        size *= len(candidates[i])
    if size > cap:
        raise CapExceeded("candidate families", size, cap)
    out = []
    assigned: dict = {}

    def rec(k):
        if k == len(order):
            out.append(dict(assigned))
            return
        i = order[k]
        for c in candidates[i]:
            assigned[i] = c
            if consistent(assigned, i):
                rec(k + 1)
        assigned.pop(i, None)

    if not order:
        return [{}]
    rec(0)
    return out


def enumerate_wedges(F: Bifunctor, d: int, cap=DEFAULT_MAX_CANDIDATES) -> list[dict]:
    """Every wedge ``d -> F``, found by filtering all component families."""
    B, I = F.base, F.index
    cands = {i: B.hom_enumerate(d, F.obj(i, i)) for i in I.objects}
    pos = {i: k for k, i in enumerate(I.objects)}

    def consistent(a, i):
        for f in I.non_identity:
            s, t = I.src(f), I.dst(f)
            if i not in (s, t) or s not in a or t not in a or max(pos[s], pos[t]) != pos[i]:
                continue
            if B.compose(F.right(s, f), a[s]) != B.compose(F.left(f, t), a[t]):
                return False
        return True

    return _families(B, list(I.objects), cands, consistent, cap)


def enumerate_cowedges(F: Bifunctor, d: int, cap=DEFAULT_MAX_CANDIDATES) -> list[dict]:
    B, I = F.base, F.index
    cands = {i: B.hom_enumerate(F.obj(i, i), d) for i in I.objects}
    pos = {i: k for k, i in enumerate(I.objects)}

    def consistent(a, i):
        for f in I.non_identity:
            s, t = I.src(f), I.dst(f)
            if i not in (s, t) or s not in a or t not in a or max(pos[s], pos[t]) != pos[i]:
                continue
            if B.compose(a[s], F.left(f, s)) != B.compose(a[t], F.right(t, f)):
                return False
        return True

    return _families(B, list(I.objects), cands, consistent, cap)


def _family_key(objects, fam):
    return tuple(fam[i].key for i in objects)


def check_end_continuity(F: Bifunctor, d: int, cap=DEFAULT_MAX_CANDIDATES) -> dict:
    """``hom(d, end F)`` against wedges ``d -> F``, and dually for coends.

    Returns a dict with the four cardinalities and ``passed``.
    """
    B, I = F.base, F.index
    objs = list(I.objects)
    E = compute_end(F)
    wedges = enumerate_wedges(F, d, cap)
    wedge_keys = {_family_key(objs, w) for w in wedges}
    homs = B.hom_enumerate(d, E.carrier)
    images = set()
    ok = True
    for phi in homs:
        fam = {i: B.compose(E.legs[i], phi) for i in objs}
        ok &= E.is_wedge(d, fam)
        images.add(_family_key(objs, fam))
    for w in wedges:
        phi = E.factor(d, w)
        ok &= all(B.compose(E.legs[i], phi) == w[i] for i in objs)
    ok &= images == wedge_keys and len(images) == len(homs)

    C = compute_coend(F)
    cowedges = enumerate_cowedges(F, d, cap)
    co_keys = {_family_key(objs, w) for w in cowedges}
    cohoms = B.hom_enumerate(C.carrier, d)
    co_images = set()
    for psi in cohoms:
        fam = {i: B.compose(psi, C.colegs[i]) for i in objs}
        ok &= C.is_cowedge(d, fam)
        co_images.add(_family_key(objs, fam))
    for w in cowedges:
        psi = C.cofactor(d, w)
        ok &= all(B.compose(psi, C.colegs[i]) == w[i] for i in objs)
    ok &= co_images == co_keys and len(co_images) == len(cohoms)
    return {
        "hom_into_end": len(homs),
        "wedges": len(wedges),
        "hom_out_of_coend": len(cohoms),
        "cowedges": len(cowedges),
        "passed": bool(ok),
    }
