"""JSON input documents: categories, functors into a base, natural
transformations and functors between categories.

One JSON object per file.  The kind is given by ``"kind"`` or inferred
from the keys::

    {"kind": "category", "name": "arrow", "objects": ["0", "1"],
     "morphisms": [{"name": "f", "src": "0", "dst": "1"}],
     "composition": []}

    {"kind": "functor", "name": "M", "category": "arrow", "base": "finset",
     "on_objects": {"0": 2, "1": 3}, "on_morphisms": {"f": [0, 2]}}

    {"kind": "nattrans", "source": "M", "target": "N",
     "components": {"0": [0, 1], "1": [2, 2, 0]}}

    {"kind": "catfunctor", "name": "phi", "source": "terminal",
     "target": "arrow", "on_objects": {"*": "0"}, "on_morphisms": {}}

Composition entries ``{"first": f, "then": g, "equals": h}`` mean
``h = g . f``.  Tables are function tables (lists of ints) over finite sets
and ``dst x src`` matrices (lists of rows) over F_p, reduced mod p.  A
functor's ``category`` is a name (of a loaded document or a built-in
fixture) or an inline category object.  ``base`` is ``"finset"`` or
``{"finvect": {"p": 3}}``.  Unknown keys are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .basecat import Base, make_base
from .errors import InputError
from .fincat import BUILTIN, CatFunctor, FinCat
from .funcat import MFunctor, NatTrans

_KEYS = {
    "category": ({"objects", "morphisms"}, {"kind", "name", "composition"}),
    "functor": ({"category", "on_objects"}, {"kind", "name", "base", "on_morphisms"}),
    "nattrans": ({"source", "target", "components"}, {"kind", "name"}),
    "catfunctor": ({"source", "target", "on_objects"}, {"kind", "name", "on_morphisms"}),
}


def _fail(where, msg):
    raise InputError(f"{where}: {msg}")


def document_kind(doc, where="document") -> str:
    """The declared or inferred kind, after checking required and unknown keys."""
    if not isinstance(doc, dict):
        _fail(where, "document must be a JSON object")
    kind = doc.get("kind")
    if kind is None:
        if "components" in doc:
            kind = "nattrans"
        elif "category" in doc:
            kind = "functor"
        elif "source" in doc:
            kind = "catfunctor"
        elif "objects" in doc:
            kind = "category"
        else:
            _fail(where, "cannot tell the document kind; add a 'kind' key")
    if kind not in _KEYS:
        _fail(where, f"'kind' must be one of {sorted(_KEYS)}, got {kind!r}")
    required, optional = _KEYS[kind]
    missing = sorted(required - doc.keys())
    if missing:
        _fail(where, f"missing keys {missing}")
    unknown = sorted(doc.keys() - required - optional)
    if unknown:
        _fail(where, f"unknown keys {unknown}")
    return kind


def _record(r, keys, where):
    if not isinstance(r, dict):
        _fail(where, "expected an object")
    if set(r) != set(keys):
        _fail(where, f"expected exactly the keys {sorted(keys)}, got {sorted(r)}")
    for k in keys:
        if not isinstance(r[k], str):
            _fail(f"{where}.{k}", "expected a string")
    return r


def _mapping(m, where):
    if not isinstance(m, dict):
        _fail(where, "expected an object")
    return m


def parse_category(doc: dict, where="category") -> FinCat:
    document_kind(doc, where)
    objects = doc["objects"]
    if not isinstance(objects, list) or not all(isinstance(x, str) for x in objects):
        _fail(f"{where}.objects", "expected a list of strings")
    mors = doc["morphisms"]
    if not isinstance(mors, list):
        _fail(f"{where}.morphisms", "expected a list")
    for k, r in enumerate(mors):
        loc = f"{where}.morphisms[{k}]"
        _record(r, ("name", "src", "dst"), loc)
        for end in ("src", "dst"):
            if r[end] not in objects:
                _fail(f"{loc}.{end}", f"unknown object {r[end]!r}")
    comp = doc.get("composition", [])
    if not isinstance(comp, list):
        _fail(f"{where}.composition", "expected a list")
    table = []
    for k, r in enumerate(comp):
        table.append(((_record(r, ("first", "then", "equals"), f"{where}.composition[{k}]")["first"], r["then"]),
                      r["equals"]))
    try:
        return FinCat(objects, [(r["name"], r["src"], r["dst"]) for r in mors], table, name=doc.get("name", ""))
    except InputError as exc:
        _fail(where, str(exc))


def _category(ref, categories, where) -> FinCat:
    if isinstance(ref, dict):
        return parse_category(ref, where)
    if not isinstance(ref, str):
        _fail(where, "expected a category name or an inline category")
    if ref in categories:
        return categories[ref]
    if ref in BUILTIN:
        return BUILTIN[ref]()
    _fail(where, f"unknown category {ref!r}")


def _table(base, src, dst, t, where):
    try:
        return base.mor(src, dst, t)
    except (InputError, TypeError, ValueError) as exc:
        _fail(where, f"bad table: {exc}")


def parse_functor(doc: dict, base: Base, categories: dict, where="functor", check=True) -> MFunctor:
    document_kind(doc, where)
    C = _category(doc["category"], categories, f"{where}.category")
    objs = _mapping(doc["on_objects"], f"{where}.on_objects")
    for o, n in objs.items():
        if o not in C.objects:
            _fail(f"{where}.on_objects.{o}", "unknown object")
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            _fail(f"{where}.on_objects.{o}", f"size must be a non-negative integer, got {n!r}")
    missing = [o for o in C.objects if o not in objs]
    if missing:
        _fail(f"{where}.on_objects", f"missing objects {missing}")
    mors = {}
    for f, t in _mapping(doc.get("on_morphisms", {}), f"{where}.on_morphisms").items():
        if f not in C.morphisms:
            _fail(f"{where}.on_morphisms.{f}", "unknown morphism")
        mors[f] = _table(base, objs[C.src(f)], objs[C.dst(f)], t, f"{where}.on_morphisms.{f}")
    try:
        return MFunctor(base, C, objs, mors, name=doc.get("name", ""), check=check)
    except InputError as exc:
        _fail(where, str(exc))


def parse_nattrans(doc: dict, base: Base, functors: dict, where="nattrans") -> NatTrans:
    document_kind(doc, where)
    ends = []
    for key in ("source", "target"):
        name = doc[key]
        if name not in functors:
            _fail(f"{where}.{key}", f"unknown functor {name!r}")
        ends.append(functors[name])
    M, N = ends
    if M.index != N.index:
        _fail(where, "source and target have different index categories")
    comps = _mapping(doc["components"], f"{where}.components")
    unknown = [i for i in comps if i not in M.index.objects]
    missing = [i for i in M.index.objects if i not in comps]
    if unknown or missing:
        _fail(f"{where}.components", f"components must cover exactly the objects {list(M.index.objects)}")
    out = {i: _table(base, M.obj(i), N.obj(i), comps[i], f"{where}.components.{i}") for i in M.index.objects}
    return NatTrans(M, N, out)


def parse_catfunctor(doc: dict, categories: dict, where="catfunctor") -> CatFunctor:
    document_kind(doc, where)
    S = _category(doc["source"], categories, f"{where}.source")
    T = _category(doc["target"], categories, f"{where}.target")
    for key in ("on_objects", "on_morphisms"):
        m = _mapping(doc.get(key, {}), f"{where}.{key}")
        if not all(isinstance(v, str) for v in m.values()):
            _fail(f"{where}.{key}", "expected an object mapping names to names")
    try:
        return CatFunctor(S, T, doc["on_objects"], doc.get("on_morphisms", {}), name=doc.get("name", ""))
    except InputError as exc:
        _fail(where, str(exc))


@dataclass
class Workspace:
    """Everything loaded from a batch of documents, in file order."""

    base: Base | None = None
    categories: dict = field(default_factory=dict)
    category_list: list = field(default_factory=list)
    functors: list = field(default_factory=list)
    nattrans: list = field(default_factory=list)
    catfunctors: list = field(default_factory=list)
    # (path, kind, parsed value) in file order
    entries: list = field(default_factory=list)


def read_document(path) -> dict:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from None
    except UnicodeDecodeError:
        raise InputError(f"{path}: not UTF-8 text") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON ({exc.msg})") from None


def document_base(docs, requested=None, **caps) -> Base:
    """The base named by the documents, which must agree with each other and
    with ``requested`` when that is given; ``finset`` by default."""
    named = []
    for path, kind, doc in docs:
        if kind == "functor" and "base" in doc:
            try:
                named.append((path, make_base(doc["base"]).name))
            except InputError as exc:
                _fail(f"{path}.base", str(exc))
    if requested is not None:
        chosen = make_base(requested, **caps)
        for path, name in named:
            if name != chosen.name:
                _fail(f"{path}.base", f"document base {name} disagrees with the requested base {chosen.name}")
        return chosen
    names = sorted({name for _, name in named})
    if len(names) > 1:
        _fail(named[0][0], f"documents disagree on the base: {names}")
    return make_base(names[0] if names else "finset", **caps)


def load(paths, base=None, check=True, **caps) -> Workspace:
    """Parse documents in dependency order: categories, functors, then
    natural transformations and catfunctors."""
    docs = []
    for path in paths:
        doc = read_document(path)
        docs.append((str(path), document_kind(doc, str(path)), doc))
    B = base if isinstance(base, Base) else document_base(docs, base, **caps)
    ws = Workspace(base=B)
    parsed = {}
    for k, (path, kind, doc) in enumerate(docs):
        if kind == "category":
            C = parse_category(doc, path)
            name = C.name or Path(path).stem
            if name in ws.categories:
                _fail(path, f"category name {name!r} defined twice")
            ws.categories[name] = C
            ws.category_list.append(C)
            parsed[k] = C
    named = {}
    for k, (path, kind, doc) in enumerate(docs):
        if kind == "functor":
            M = parse_functor(doc, B, ws.categories, path, check=check)
            ws.functors.append(M)
            parsed[k] = M
            named[doc.get("name") or Path(path).stem] = M
    for k, (path, kind, doc) in enumerate(docs):
        if kind == "nattrans":
            t = parse_nattrans(doc, B, named, path)
            ws.nattrans.append(t)
            parsed[k] = t
        elif kind == "catfunctor":
            phi = parse_catfunctor(doc, ws.categories, path)
            ws.catfunctors.append(phi)
            parsed[k] = phi
    ws.entries = [(path, kind, parsed[k]) for k, (path, kind, _) in enumerate(docs)]
    return ws
