"""Finite symmetric monoidal closed base categories.

Two exact instances are provided:

* :class:`FinSet` -- objects are cardinalities ``n`` (elements ``0..n-1``),
  morphisms are function tables, tensor is the cartesian product.
* :class:`FinVect` -- objects are dimensions over the prime field F_p,
  morphisms are ``dst x src`` matrices acting on coordinate columns, tensor
  is the Kronecker product.

In both, the pair ``(x, y)`` of ``a (x) b`` is encoded row-major as
``x * |b| + y``.  With that encoding associators and unitors are identity
permutations, so coherence diagrams can be compared as exact equalities.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import linalg
from .errors import CapExceeded, InputError, PreconditionError

DEFAULT_MAX_HOM = 10**6
DEFAULT_MAX_ELEMS = 10**7
# FinSet encodes elements of products as int64 indices.
_ENCODING_LIMIT = 2**62


class Mor:
    """A morphism ``src -> dst`` of a base category.

    ``data`` is a read-only int64 array: a function table of length ``src``
    (FinSet) or a ``dst x src`` matrix (FinVect).
    """

    __slots__ = ("src", "dst", "data", "_key")

    def __init__(self, src: int, dst: int, data):
        arr = np.array(data, dtype=np.int64)
        arr.setflags(write=False)
        self.src = int(src)
        self.dst = int(dst)
        self.data = arr
        self._key = (self.src, self.dst, arr.shape, arr.tobytes())

    @property
    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, Mor) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Mor({self.src}->{self.dst}, {self.data.tolist()})"

    def tolist(self):
        return self.data.tolist()


@dataclass(frozen=True)
class Equalizer:
    obj: int
    include: Mor
    factor: Callable[[Mor], Mor]


@dataclass(frozen=True)
class Coequalizer:
    obj: int
    project: Mor
    factor: Callable[[Mor], Mor]


class Base:
    """Interface shared by the shipped base categories.

    Subclasses implement the category, tensor, closure and finite
    (co)limit primitives; the helpers defined here are derived from them
    and hold in any symmetric monoidal closed category.
    """

    name = "base"

    def __init__(self, max_hom: int = DEFAULT_MAX_HOM, max_elems: int = DEFAULT_MAX_ELEMS):
        if max_hom <= 0 or max_elems <= 0:
            raise InputError("caps must be positive")
        self.max_hom = max_hom
        self.max_elems = max_elems

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    # -- checks ---------------------------------------------------------
    def check_obj(self, a) -> int:
        if isinstance(a, (bool, np.bool_)) or not isinstance(a, (int, np.integer)) or a < 0:
            raise InputError(f"{self.name}: object must be a non-negative integer, got {a!r}")
        return int(a)

    def _check_composable(self, g: Mor, f: Mor):
        if f.dst != g.src:
            raise InputError(f"cannot compose: dst {f.dst} != src {g.src}")

    # -- derived structure ---------------------------------------------
    def then(self, *mors: Mor) -> Mor:
        """Diagrammatic composite: ``then(f, g, h) = h . g . f``."""
        out = mors[0]
        for m in mors[1:]:
            out = self.compose(m, out)
        return out

    def inverse(self, f: Mor) -> Mor:
        raise NotImplementedError

    def associator_inv(self, a, b, c):
        return self.inverse(self.associator(a, b, c))

    def lunitor_inv(self, a):
        return self.inverse(self.lunitor(a))

    def runitor_inv(self, a):
        return self.inverse(self.runitor(a))

    def internal_hom_mor(self, f: Mor, g: Mor) -> Mor:
        """``[f, g] : [b, c] -> [b', c']`` for ``f: b' -> b`` and ``g: c -> c'``."""
        hb = self.internal_hom(f.dst, g.src)
        body = self.then(
            self.tensor_mor(self.identity(hb), f),
            self.eval_mor(f.dst, g.src),
            g,
        )
        return self.curry(body, hb, f.src)

    def unit_hom_iso(self, c: int) -> Mor:
        """The canonical iso ``[k, c] -> c``."""
        hk = self.internal_hom(self.unit(), c)
        return self.compose(self.eval_mor(self.unit(), c), self.runitor_inv(hk))

    def distributor(self, a: int, bs: Sequence[int], side: str = "left") -> Mor:
        """Canonical ``coprod_f (a (x) b_f) -> a (x) coprod_f b_f``.

        With ``side="right"`` the tensor factor sits on the right:
        ``coprod_f (b_f (x) a) -> (coprod_f b_f) (x) a``.
        """
        s, injs = self.coproduct(bs)
        ida = self.identity(a)
        if side == "left":
            legs = [self.tensor_mor(ida, j) for j in injs]
            return self.cotuple(self.tensor(a, s), legs, self.coproduct_obj([self.tensor(a, b) for b in bs]))
        legs = [self.tensor_mor(j, ida) for j in injs]
        return self.cotuple(self.tensor(s, a), legs, self.coproduct_obj([self.tensor(b, a) for b in bs]))

    def from_summands(self, a: int, bs: Sequence[int], legs: Sequence[Mor], z: int, side="left") -> Mor:
        """Assemble ``a (x) coprod b_f -> z`` from legs ``a (x) b_f -> z``."""
        d = self.distributor(a, bs, side)
        src = self.coproduct_obj([self.tensor(a, b) if side == "left" else self.tensor(b, a) for b in bs])
        return self.compose(self.cotuple(z, legs, src), self.inverse(d))

    def hom_enumerate(self, a: int, b: int) -> list[Mor]:
        return list(self.iter_hom(a, b))

    def iter_hom(self, a: int, b: int):
        n = self.hom_count(a, b)
        if n > self.max_hom:
            raise CapExceeded(f"hom({a},{b}) in {self.name}", n, self.max_hom)
        return self._iter_hom(a, b)

    def equal(self, f: Mor, g: Mor) -> bool:
        return f == g

    def elements(self, a: int) -> list[Mor]:
        """Global elements ``k -> a``."""
        return self.hom_enumerate(self.unit(), a)

    def describe(self, a: int) -> str:
        return str(a)


# ----------------------------------------------------------------------
# FinSet
# ----------------------------------------------------------------------


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        # the smaller element stays the root, so roots are minimal representatives
        if y < x:
            x, y = y, x
        self.parent[y] = x


class FinSet(Base):
    """Finite sets and functions, cartesian monoidal."""

    name = "finset"

    def _table(self, n):
        if n > self.max_elems:
            raise CapExceeded("finset carrier", n, self.max_elems)

    def mor(self, src, dst, table) -> Mor:
        src, dst = self.check_obj(src), self.check_obj(dst)
        arr = np.array(table, dtype=np.int64).reshape(-1)
        if arr.shape != (src,):
            raise InputError(f"function table has length {arr.size}, expected {src}")
        if arr.size and (arr.min() < 0 or arr.max() >= dst):
            raise InputError(f"function table values must lie in 0..{dst - 1}")
        return Mor(src, dst, arr)

    def identity(self, a):
        a = self.check_obj(a)
        self._table(a)
        return Mor(a, a, np.arange(a))

    def compose(self, g, f):
        self._check_composable(g, f)
        return Mor(f.src, g.dst, g.data[f.data])

    def unit(self):
        return 1

    def tensor(self, a, b):
        return a * b

    def tensor_mor(self, f, g):
        data = (f.data[:, None] * g.dst + g.data[None, :]).reshape(-1)
        return Mor(f.src * g.src, f.dst * g.dst, data)

    def associator(self, a, b, c):
        return self.identity(a * b * c)

    def lunitor(self, a):
        return self.identity(a)

    def runitor(self, a):
        return self.identity(a)

    def braiding(self, a, b):
        x = np.arange(a)[:, None]
        y = np.arange(b)[None, :]
        return Mor(a * b, a * b, (y * a + x).reshape(-1))

    # -- closure -------------------------------------------------------
    def internal_hom(self, b, c):
        n = c**b
        if n > self.max_elems:
            raise CapExceeded(f"internal hom [{b},{c}]", n, self.max_elems)
        return n

    def encode_function(self, table: Sequence[int], c: int) -> int:
        """Lexicographic index of a table ``b -> c`` inside ``[b, c]``."""
        idx = 0
        for v in table:
            idx = idx * c + int(v)
        return idx

    def decode_function(self, idx: int, b: int, c: int) -> list[int]:
        out = []
        for _ in range(b):
            out.append(idx % c)
            idx //= c
        return out[::-1]

    def curry(self, f, a, b):
        c = f.dst
        hb = self.internal_hom(b, c)
        if f.src != a * b:
            raise InputError("curry: source is not a (x) b")
        weights = c ** np.arange(b - 1, -1, -1, dtype=np.int64)
        data = f.data.reshape(a, b) @ weights if b else np.zeros(a, dtype=np.int64)
        return Mor(a, hb, data)

    def uncurry(self, g, b, c):
        a = g.src
        if g.dst != self.internal_hom(b, c):
            raise InputError("uncurry: target is not [b, c]")
        if a * b == 0:
            return Mor(a * b, c, np.zeros(0, dtype=np.int64))
        weights = c ** np.arange(b - 1, -1, -1, dtype=np.int64)
        digits = (g.data[:, None] // weights[None, :]) % c
        return Mor(a * b, c, digits.reshape(-1))

    def eval_mor(self, b, c):
        return self.uncurry(self.identity(self.internal_hom(b, c)), b, c)

    # -- finite limits and colimits -------------------------------------
    def product_obj(self, objs):
        n = math.prod(objs)
        if n >= _ENCODING_LIMIT:
            raise CapExceeded("finset product encoding", n, _ENCODING_LIMIT)
        return n

    def product(self, objs):
        objs = [self.check_obj(o) for o in objs]
        n = self.product_obj(objs)
        self._table(n)
        idx = np.arange(n)
        projs = []
        for k, o in enumerate(objs):
            if n == 0:
                projs.append(Mor(0, o, idx))
                continue
            stride = math.prod(objs[k + 1:])
            projs.append(Mor(n, o, (idx // stride) % o))
        return n, projs

    def tuple(self, w, legs):
        for leg in legs:
            if leg.src != w:
                raise InputError("tuple: legs must share a source")
        n = self.product_obj([leg.dst for leg in legs])
        data = np.zeros(w, dtype=np.int64)
        for leg in legs:
            data = data * leg.dst + leg.data
        return Mor(w, n, data)

    def coproduct_obj(self, objs):
        return sum(objs)

    def coproduct(self, objs):
        objs = [self.check_obj(o) for o in objs]
        n = sum(objs)
        injs = []
        off = 0
        for o in objs:
            injs.append(Mor(o, n, np.arange(o) + off))
            off += o
        return n, injs

    def cotuple(self, z, legs, src=None):
        for leg in legs:
            if leg.dst != z:
                raise InputError("cotuple: legs must share a target")
        data = np.concatenate([leg.data for leg in legs]) if legs else np.zeros(0, dtype=np.int64)
        n = sum(leg.src for leg in legs)
        if src is not None and src != n:
            raise InputError("cotuple: source mismatch")
        return Mor(n, z, data)

    def _parallel(self, f, g):
        if f.src != g.src or f.dst != g.dst:
            raise InputError("morphisms are not parallel")

    def equalizer(self, f, g):
        self._parallel(f, g)
        idx = np.nonzero(f.data == g.data)[0]
        include = Mor(idx.size, f.src, idx)

        def factor(h):
            if h.dst != f.src or self.compose(f, h) != self.compose(g, h):
                raise PreconditionError("leg does not equalize the pair")
            return Mor(h.src, idx.size, np.searchsorted(idx, h.data))

        return Equalizer(idx.size, include, factor)

    def coequalizer(self, f, g):
        self._parallel(f, g)
        uf = _UnionFind(f.dst)
        for x, y in zip(f.data.tolist(), g.data.tolist()):
            uf.union(x, y)
        roots = [uf.find(x) for x in range(f.dst)]
        reps = sorted(set(roots))
        cls = {r: k for k, r in enumerate(reps)}
        project = Mor(f.dst, len(reps), [cls[r] for r in roots])
        reps_arr = np.array(reps, dtype=np.int64)

        def factor(h):
            if h.src != f.dst or self.compose(h, f) != self.compose(h, g):
                raise PreconditionError("leg does not coequalize the pair")
            return Mor(len(reps), h.dst, h.data[reps_arr] if reps else np.zeros(0, dtype=np.int64))

        return Coequalizer(len(reps), project, factor)

    # -- enumeration ---------------------------------------------------
    def hom_count(self, a, b):
        return b**a

    def _iter_hom(self, a, b):
        for t in itertools.product(range(b), repeat=a):
            yield Mor(a, b, np.array(t, dtype=np.int64).reshape(a))

    def random_mor(self, a, b, rng):
        if a and not b:
            raise InputError(f"no morphisms {a} -> 0")
        return Mor(a, b, rng.integers(0, max(b, 1), size=a))

    def is_iso(self, f):
        return f.src == f.dst and np.array_equal(np.sort(f.data), np.arange(f.src))

    def inverse(self, f):
        if not self.is_iso(f):
            raise PreconditionError("not an isomorphism")
        return Mor(f.dst, f.src, np.argsort(f.data))


# ----------------------------------------------------------------------
# FinVect_p
# ----------------------------------------------------------------------


class FinVect(Base):
    """Finite-dimensional vector spaces over F_p with the Kronecker tensor."""

    def __init__(self, p: int = 2, **caps):
        super().__init__(**caps)
        if not linalg.is_prime(p):
            raise InputError(f"p must be prime, got {p}")
        self.p = p
        self.name = f"finvect{p}"

    def mor(self, src, dst, matrix) -> Mor:
        src, dst = self.check_obj(src), self.check_obj(dst)
        arr = np.array(matrix, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(dst, src)
        if arr.shape != (dst, src):
            raise InputError(f"matrix has shape {arr.shape}, expected ({dst}, {src})")
        return Mor(src, dst, arr % self.p)

    def identity(self, a):
        a = self.check_obj(a)
        return Mor(a, a, np.eye(a, dtype=np.int64))

    def compose(self, g, f):
        self._check_composable(g, f)
        return Mor(f.src, g.dst, (g.data @ f.data) % self.p)

    def unit(self):
        return 1

    def tensor(self, a, b):
        return a * b

    def tensor_mor(self, f, g):
        # np.kron, without its per-call shape bookkeeping
        data = (f.data[:, None, :, None] * g.data[None, :, None, :]).reshape(f.dst * g.dst, f.src * g.src)
        return Mor(f.src * g.src, f.dst * g.dst, data % self.p)

    def associator(self, a, b, c):
        return self.identity(a * b * c)

    def lunitor(self, a):
        return self.identity(a)

    def runitor(self, a):
        return self.identity(a)

    def _perm(self, table):
        n = len(table)
        m = np.zeros((n, n), dtype=np.int64)
        m[np.asarray(table, dtype=np.int64), np.arange(n)] = 1
        return m

    def braiding(self, a, b):
        x = np.arange(a)[:, None]
        y = np.arange(b)[None, :]
        return Mor(a * b, a * b, self._perm((y * a + x).reshape(-1)))

    # -- closure -------------------------------------------------------
    def internal_hom(self, b, c):
        return b * c

    def curry(self, f, a, b):
        c = f.dst
        if f.src != a * b:
            raise InputError("curry: source is not a (x) b")
        data = f.data.reshape(c, a, b).transpose(0, 2, 1).reshape(c * b, a)
        return Mor(a, c * b, data)

    def uncurry(self, g, b, c):
        a = g.src
        if g.dst != b * c:
            raise InputError("uncurry: target is not [b, c]")
        data = g.data.reshape(c, b, a).transpose(0, 2, 1).reshape(c, a * b)
        return Mor(a * b, c, data)

    def eval_mor(self, b, c):
        return self.uncurry(self.identity(b * c), b, c)

    # -- finite limits and colimits -------------------------------------
    def product_obj(self, objs):
        return sum(objs)

    def coproduct_obj(self, objs):
        return sum(objs)

    def _blocks(self, objs):
        objs = [self.check_obj(o) for o in objs]
        n = sum(objs)
        blocks = []
        off = 0
        for o in objs:
            m = np.zeros((o, n), dtype=np.int64)
            m[:, off:off + o] = np.eye(o, dtype=np.int64)
            blocks.append(m)
            off += o
        return n, blocks

    def product(self, objs):
        n, blocks = self._blocks(objs)
        return n, [Mor(n, b.shape[0], b) for b in blocks]

    def coproduct(self, objs):
        n, blocks = self._blocks(objs)
        return n, [Mor(b.shape[0], n, b.T) for b in blocks]

    def tuple(self, w, legs):
        for leg in legs:
            if leg.src != w:
                raise InputError("tuple: legs must share a source")
        n = sum(leg.dst for leg in legs)
        data = np.vstack([leg.data for leg in legs]) if legs else np.zeros((0, w), dtype=np.int64)
        return Mor(w, n, data.reshape(n, w))

    def cotuple(self, z, legs, src=None):
        for leg in legs:
            if leg.dst != z:
                raise InputError("cotuple: legs must share a target")
        n = sum(leg.src for leg in legs)
        if src is not None and src != n:
            raise InputError("cotuple: source mismatch")
        data = np.hstack([leg.data for leg in legs]) if legs else np.zeros((z, 0), dtype=np.int64)
        return Mor(n, z, data.reshape(z, n))

    def _parallel(self, f, g):
        if f.src != g.src or f.dst != g.dst:
            raise InputError("morphisms are not parallel")

    def equalizer(self, f, g):
        self._parallel(f, g)
        p = self.p
        K = linalg.nullspace((f.data - g.data) % p, p)
        include = Mor(K.shape[1], f.src, K)

        def factor(h):
            if h.dst != f.src or self.compose(f, h) != self.compose(g, h):
                raise PreconditionError("leg does not equalize the pair")
            u = linalg.solve(K, h.data, p)
            return Mor(h.src, K.shape[1], u)

        return Equalizer(K.shape[1], include, factor)

    def coequalizer(self, f, g):
        self._parallel(f, g)
        p = self.p
        Q = linalg.left_nullspace((f.data - g.data) % p, p)
        d = Q.shape[0]
        project = Mor(f.dst, d, Q.reshape(d, f.dst))
        # right inverse of the projection: Q S = I
        S = linalg.solve(Q.reshape(d, f.dst), np.eye(d, dtype=np.int64), p)

        def factor(h):
            if h.src != f.dst or self.compose(h, f) != self.compose(h, g):
                raise PreconditionError("leg does not coequalize the pair")
            return Mor(d, h.dst, (h.data @ S) % p)

        return Coequalizer(d, project, factor)

    # -- enumeration ---------------------------------------------------
    def hom_count(self, a, b):
        return self.p ** (a * b)

    def _iter_hom(self, a, b):
        for t in itertools.product(range(self.p), repeat=a * b):
            yield Mor(a, b, np.array(t, dtype=np.int64).reshape(b, a))

    def random_mor(self, a, b, rng):
        return Mor(a, b, rng.integers(0, self.p, size=(b, a)))

    def is_iso(self, f):
        return f.src == f.dst and linalg.rank(f.data, self.p) == f.src

    def inverse(self, f):
        inv = linalg.inverse(f.data, self.p) if f.src == f.dst else None
        if inv is None:
            raise PreconditionError("not an isomorphism")
        return Mor(f.dst, f.src, inv)


def make_base(spec="finset", **caps) -> Base:
    """Build a base from ``"finset"``, ``"finvect"`` or ``{"finvect": {"p": 3}}``."""
    if isinstance(spec, Base):
        return spec
    if spec == "finset":
        return FinSet(**caps)
    if spec == "finvect":
        return FinVect(2, **caps)
    if isinstance(spec, str) and spec.startswith("finvect") and spec[7:].isdigit():
        return FinVect(int(spec[7:]), **caps)
    if isinstance(spec, dict) and set(spec) == {"finvect"}:
        inner = spec["finvect"]
        if not isinstance(inner, dict) or set(inner) - {"p"}:
            raise InputError(f"bad finvect base spec: {spec!r}")
        return FinVect(inner.get("p", 2), **caps)
    raise InputError(f"unknown base: {spec!r}")
