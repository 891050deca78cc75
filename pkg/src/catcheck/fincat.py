"""Finite categories given by explicit composition tables, and functors
between them.

Identities are implicit: object ``x`` owns the reserved morphism ``id_x``.
The composition table lists composable pairs of non-identity morphisms as
``(first, then) -> equals``, i.e. ``equals = then . first``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import CapExceeded, InputError

ID_PREFIX = "id_"
MAX_OBJECTS = 64
MAX_MORPHISMS = 512


def identity_name(obj: str) -> str:
    return ID_PREFIX + obj


@dataclass
class Validation:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


class FinCat:
    """A finite category.

    ``morphisms`` maps each non-identity name to ``(src, dst)``;
    ``composition`` maps ``(first, then)`` to the composite's name.  The
    constructor checks names and references only; call
    :func:`validate_category` for the category laws.
    """

    def __init__(self, objects, morphisms, composition, name="", max_objects=MAX_OBJECTS,
                 max_morphisms=MAX_MORPHISMS):
        objects = list(objects)
        if len(objects) > max_objects:
            raise CapExceeded("category objects", len(objects), max_objects)
        if len(set(objects)) != len(objects):
            raise InputError("duplicate object names")
        for o in objects:
            if not isinstance(o, str) or not o:
                raise InputError(f"object names must be non-empty strings, got {o!r}")
        self.name = name
        self.objects: tuple[str, ...] = tuple(objects)
        self._arrows: dict[str, tuple[str, str]] = {}
        morphisms = list(morphisms.items()) if isinstance(morphisms, dict) else list(morphisms)
        for name_, src, dst in (self._norm_mor(m) for m in morphisms):
            if name_.startswith(ID_PREFIX):
                raise InputError(f"morphism name {name_!r} uses the reserved prefix {ID_PREFIX!r}")
            if name_ in self._arrows:
                raise InputError(f"duplicate morphism name {name_!r}")
            for end in (src, dst):
                if end not in self.objects:
                    raise InputError(f"morphism {name_!r} refers to unknown object {end!r}")
            self._arrows[name_] = (src, dst)
        if len(self._arrows) + len(objects) > max_morphisms:
            raise CapExceeded("category morphisms", len(self._arrows) + len(objects), max_morphisms)
        self.non_identity: tuple[str, ...] = tuple(self._arrows)
        self._ends = dict(self._arrows)
        for o in self.objects:
            self._ends[identity_name(o)] = (o, o)
        self.composition: dict[tuple[str, str], str] = {}
        items = composition.items() if isinstance(composition, dict) else composition
        for (first, then), eq in items:
            for m in (first, then, eq):
                if m not in self._ends:
                    raise InputError(f"composition refers to unknown morphism {m!r}")
            if first not in self._arrows or then not in self._arrows:
                raise InputError(f"identity composites are implicit: ({first}, {then})")
            if (first, then) in self.composition:
                raise InputError(f"composite ({first}, {then}) listed twice")
            self.composition[(first, then)] = eq
        # canonical order: identity first, then presentation order
        self._hom: dict[tuple[str, str], list[str]] = {(a, b): [] for a in self.objects for b in self.objects}
        for o in self.objects:
            self._hom[(o, o)].append(identity_name(o))
        for m, (s, d) in self._arrows.items():
            self._hom[(s, d)].append(m)
        self.morphisms: tuple[str, ...] = tuple(
            m for a in self.objects for b in self.objects for m in self._hom[(a, b)]
        )

    @staticmethod
    def _norm_mor(m):
        if isinstance(m, dict):
            return m["name"], m["src"], m["dst"]
        if len(m) == 2 and isinstance(m[1], tuple):
            return m[0], m[1][0], m[1][1]
        return tuple(m)

    def __repr__(self):
        return f"FinCat({self.name or '?'}: {len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def src(self, f: str) -> str:
        try:
            return self._ends[f][0]
        except KeyError:
            raise InputError(f"unknown morphism {f!r}") from None

    def dst(self, f: str) -> str:
        try:
            return self._ends[f][1]
        except KeyError:
            raise InputError(f"unknown morphism {f!r}") from None

    def identity(self, obj: str) -> str:
        if obj not in self.objects:
            raise InputError(f"unknown object {obj!r}")
        return identity_name(obj)

    def is_identity(self, f: str) -> bool:
        return f.startswith(ID_PREFIX) and f not in self._arrows

    def then(self, first: str, then: str) -> str:
        """The composite ``then . first``."""
        if self.dst(first) != self.src(then):
            raise InputError(f"{first} and {then} are not composable")
        if self.is_identity(first):
            return then
        if self.is_identity(then):
            return first
        try:
            return self.composition[(first, then)]
        except KeyError:
            raise InputError(f"composite of ({first}, {then}) missing from the table") from None

    def compose(self, g: str, f: str) -> str:
        """The composite ``g . f`` (apply ``f`` first)."""
        return self.then(f, g)

    def hom(self, a: str, b: str) -> list[str]:
        try:
            return list(self._hom[(a, b)])
        except KeyError:
            raise InputError(f"unknown object in hom({a!r}, {b!r})") from None

    def composable_pairs(self):
        for f in self.morphisms:
            for g in self.morphisms:
                if self.dst(f) == self.src(g):
                    yield f, g

    def structure(self):
        """Hashable description used for structural equality."""
        return (
            self.objects,
            tuple((m, self._arrows[m]) for m in self.non_identity),
            tuple(sorted(self.composition.items())),
        )

    def __eq__(self, other):
        return isinstance(other, FinCat) and self.structure() == other.structure()

    def __hash__(self):
        return hash(self.structure())


def validate_category(C: FinCat) -> Validation:
    """Check totality, typing, identity laws and associativity."""
    v = Validation()
    for f, g in itertools.product(C.non_identity, repeat=2):
        if C.dst(f) != C.src(g):
            continue
        eq = C.composition.get((f, g))
        if eq is None:
            v.violations.append(f"missing composite ({f}, {g})")
        elif (C.src(eq), C.dst(eq)) != (C.src(f), C.dst(g)):
            v.violations.append(
                f"composite ({f}, {g}) = {eq} has type {C.src(eq)}->{C.dst(eq)}, "
                f"expected {C.src(f)}->{C.dst(g)}"
            )
    for (f, g), eq in C.composition.items():
        if C.dst(f) != C.src(g):
            v.violations.append(f"composite listed for non-composable pair ({f}, {g})")
    if not v.ok:
        return v
    for f in C.morphisms:
        a, b = C.src(f), C.dst(f)
        if C.then(C.identity(a), f) != f or C.then(f, C.identity(b)) != f:
            v.violations.append(f"identity law fails at {f}")
    for f, g in C.composable_pairs():
        for h in C.morphisms:
            if C.dst(g) != C.src(h):
                continue
            if C.then(C.then(f, g), h) != C.then(f, C.then(g, h)):
                v.violations.append(f"associativity fails at ({f}, {g}, {h})")
    return v


def opposite(C: FinCat) -> FinCat:
    mors = [(m, C.dst(m), C.src(m)) for m in C.non_identity]
    comp = {(g, f): eq for (f, g), eq in C.composition.items()}
    name = C.name[:-3] if C.name.endswith("^op") else (C.name + "^op" if C.name else "")
    return FinCat(C.objects, mors, comp, name=name)


def hom_set(C: FinCat, i: str, j: str) -> list[str]:
    return C.hom(i, j)


class CatFunctor:
    """A functor between finite categories given by tables.

    Identity morphisms may be omitted from ``on_morphisms``; they are sent
    to the identity of the image object.
    """

    def __init__(self, source: FinCat, target: FinCat, on_objects: dict, on_morphisms: dict, name=""):
        self.source = source
        self.target = target
        self.name = name
        missing = [o for o in source.objects if o not in on_objects]
        if missing:
            raise InputError(f"functor object map not total: missing {missing}")
        for o, t in on_objects.items():
            if o not in source.objects or t not in target.objects:
                raise InputError(f"bad object assignment {o!r} -> {t!r}")
        self.on_objects = dict(on_objects)
        mors = dict(on_morphisms)
        for o in source.objects:
            mors.setdefault(identity_name(o), target.identity(self.on_objects[o]))
        missing = [m for m in source.non_identity if m not in mors]
        if missing:
            raise InputError(f"functor morphism map not total: missing {missing}")
        for m, t in mors.items():
            source.src(m)
            target.src(t)
        self.on_morphisms = mors

    def obj(self, o: str) -> str:
        return self.on_objects[o]

    def __call__(self, f: str) -> str:
        return self.on_morphisms[f]


def validate_functor(F: CatFunctor) -> Validation:
    v = Validation()
    S, T = F.source, F.target
    for f in S.morphisms:
        g = F(f)
        if (T.src(g), T.dst(g)) != (F.obj(S.src(f)), F.obj(S.dst(f))):
            v.violations.append(
                f"{f}: {S.src(f)}->{S.dst(f)} sent to {g}: {T.src(g)}->{T.dst(g)}, "
                f"expected {F.obj(S.src(f))}->{F.obj(S.dst(f))}"
            )
    if not v.ok:
        return v
    for o in S.objects:
        if F(S.identity(o)) != T.identity(F.obj(o)):
            v.violations.append(f"identity of {o} not preserved")
    for f, g in S.composable_pairs():
        if F(S.then(f, g)) != T.then(F(f), F(g)):
            v.violations.append(f"composite ({f}, {g}) not preserved")
    return v


def identity_functor(C: FinCat) -> CatFunctor:
    return CatFunctor(C, C, {o: o for o in C.objects}, {m: m for m in C.morphisms}, name="id")


def point(C: FinCat, obj: str) -> CatFunctor:
    """The functor ``terminal -> C`` picking ``obj``."""
    T = terminal()
    return CatFunctor(T, C, {T.objects[0]: obj}, {}, name=f"pt_{obj}")


def to_terminal(C: FinCat) -> CatFunctor:
    T = terminal()
    t = T.objects[0]
    return CatFunctor(C, T, {o: t for o in C.objects}, {m: T.identity(t) for m in C.morphisms}, name="!")


# -- fixture categories ---------------------------------------------------


def terminal() -> FinCat:
    return FinCat(["*"], [], {}, name="terminal")


def empty() -> FinCat:
    return FinCat([], [], {}, name="empty")


def discrete(n: int) -> FinCat:
    return FinCat([str(k) for k in range(n)], [], {}, name=f"discrete{n}")


def arrow() -> FinCat:
    return FinCat(["0", "1"], [("f", "0", "1")], {}, name="arrow")


def walking_idempotent() -> FinCat:
    return FinCat(["*"], [("e", "*", "*")], {("e", "e"): "e"}, name="idempotent")


def commutative_square() -> FinCat:
    """``a -f-> b -h-> d`` and ``a -g-> c -k-> d`` with ``h f = k g = diag``."""
    return FinCat(
        ["a", "b", "c", "d"],
        [("f", "a", "b"), ("g", "a", "c"), ("h", "b", "d"), ("k", "c", "d"), ("diag", "a", "d")],
        {("f", "h"): "diag", ("g", "k"): "diag"},
        name="square",
    )


def chain(n: int) -> FinCat:
    """The poset ``0 -> 1 -> ... -> n-1`` with every composite named."""
    objs = [str(k) for k in range(n)]
    mors = [(f"m{a}{b}", str(a), str(b)) for a in range(n) for b in range(a + 1, n)]
    comp = {}
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                comp[(f"m{a}{b}", f"m{b}{c}")] = f"m{a}{c}"
    return FinCat(objs, mors, comp, name=f"chain{n}")


FIXTURES = {
    "terminal": terminal,
    "arrow": arrow,
    "idempotent": walking_idempotent,
    "square": commutative_square,
}

BUILTIN = dict(FIXTURES, empty=empty, discrete2=lambda: discrete(2), chain3=lambda: chain(3))
