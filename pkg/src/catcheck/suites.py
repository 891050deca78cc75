"""Verification suites over the fixture categories.

Each suite turns a :class:`SuiteConfig` into a :class:`Report`.  Sample
sets are exhaustive for index categories with at most two objects and
seeded random otherwise, so a fixed seed always yields the same report.
"""

from __future__ import annotations

import itertools
import zlib
from dataclasses import dataclass, field, replace

import numpy as np

from .adjoint import (
    FunctorCategoryClosure,
    KanExtension,
    eval_witness,
    evaluation_module_functor,
    verify_closed_monoidal_functorcat,
    verify_cocontinuity,
    verify_limit_consistency,
    verify_map_level_iso,
    verify_precomposition_adjunction,
    verify_two_sided_evaluation,
)
from .basecat import Base, FinSet, make_base
from .coherence import verify_coherence
from .fincat import FIXTURES, FinCat, identity_functor, point, to_terminal
from .funcat import (
    DEFAULT_MAX_NAT,
    FunctorModule,
    MFunctor,
    ModuleFunctor,
    act,
    end_of_hom_equals_nat,
    enumerate_functors,
    identity_nat,
    random_functor,
    unit_functor,
    verify_closed_module,
    verify_module_functor,
)
from .report import Report
from .yoneda import verify_density, verify_eval_adjunction, verify_lemma_eq1, verify_UV_adjunction, verify_yoneda

SUITES = ("coherence", "module", "yoneda", "density", "eval-adjunction", "kan", "closed")
EXHAUSTIVE_OBJECTS = 2


@dataclass(frozen=True)
class SuiteConfig:
    base: str | dict = "finset"
    seed: int = 0
    max_hom: int = 10**6
    max_elems: int = 10**7
    max_nat: int = DEFAULT_MAX_NAT
    # component bound for the exhaustive sample sets; None picks 3 for
    # finite sets and 2 for vector spaces
    max_size: int | None = None
    coherence_size: int | None = None
    # functors drawn for index categories too large to enumerate
    random_functors: int = 40
    module_triples: int = 60
    closed_triples: int = 36
    categories: tuple = field(default=tuple(FIXTURES))

    def make_base(self) -> Base:
        return make_base(self.base, max_hom=self.max_hom, max_elems=self.max_elems)


def _size(B: Base, cfg: SuiteConfig) -> int:
    if cfg.max_size is not None:
        return cfg.max_size
    return 3 if isinstance(B, FinSet) else 2


def _sample_size(B: Base) -> int:
    """Component bound for sampled instances whose hom-sets get enumerated."""
    return 2 if isinstance(B, FinSet) or getattr(B, "p", 2) == 2 else 1


def _rng(cfg: SuiteConfig, *salt) -> np.random.Generator:
    # one independent stream per suite and category, so suites can run in
    # any order or alone and still draw the same samples
    return np.random.default_rng([cfg.seed, *(zlib.crc32(str(s).encode()) for s in salt)])


def functor_pool(B: Base, C: FinCat, max_size: int, rng, limit: int, min_size=0) -> list[MFunctor]:
    """All functors up to ``max_size`` when ``C`` is small, else ``limit``
    distinct random ones in draw order."""
    if len(C.objects) <= EXHAUSTIVE_OBJECTS:
        return enumerate_functors(B, C, max_size, min_size=min_size)
    seen: dict = {}
    for _ in range(limit * 20):
        if len(seen) >= limit:
            break
        M = random_functor(B, C, max_size, rng, min_size=min_size)
        seen.setdefault(M.key, M)
    return list(seen.values())


def _categories(cfg: SuiteConfig) -> list[FinCat]:
    return [FIXTURES[name]() for name in cfg.categories]


def _small(cats):
    return [C for C in cats if len(C.objects) <= EXHAUSTIVE_OBJECTS]


def _pick(rng, xs, k):
    if len(xs) <= k:
        return list(xs)
    return [xs[int(j)] for j in sorted(rng.choice(len(xs), size=k, replace=False))]


# -- suites -----------------------------------------------------------------


def suite_coherence(cfg: SuiteConfig) -> Report:
    B = cfg.make_base()
    size = cfg.coherence_size if cfg.coherence_size is not None else (4 if isinstance(B, FinSet) else 3)
    return verify_coherence(B, size, cfg.seed)


def suite_module(cfg: SuiteConfig) -> Report:
    B = cfg.make_base()
    rep = Report()
    cats = _categories(cfg)
    rng = _rng(cfg, "module")
    for t in range(cfg.module_triples):
        C = cats[t % len(cats)]
        m = int(rng.integers(0, 3))
        M = random_functor(B, C, _sample_size(B), rng)
        N = random_functor(B, C, _sample_size(B), rng)
        rep.extend(verify_closed_module(m, M, N, rng, cfg.max_nat))
    for C in cats:
        pool = functor_pool(B, C, _sample_size(B), _rng(cfg, "module", C.name), 8)
        for M, N in _pick(rng, list(itertools.product(pool, pool)), 6):
            rep.extend(end_of_hom_equals_nat(M, N, cfg.max_nat))
    return rep


def end_of_hom_sweep(B: Base, cats, max_size: int, rng, limit: int, cap=DEFAULT_MAX_NAT) -> Report:
    """Every pair of pool functors: the end of the hom bifunctor against the
    brute-force count of natural transformations."""
    rep = Report()
    for C in cats:
        pool = functor_pool(B, C, max_size, rng, limit)
        for M in pool:
            for N in pool:
                rep.extend(end_of_hom_equals_nat(M, N, cap))
    return rep


def suite_yoneda(cfg: SuiteConfig) -> Report:
    B = cfg.make_base()
    rep = Report()
    rng = _rng(cfg, "yoneda")
    for s in range(3):
        for m in range(3):
            rep.extend(verify_UV_adjunction(B, s, m, rng))
    for C in _categories(cfg):
        pool = functor_pool(B, C, _size(B, cfg), _rng(cfg, "pool", C.name), cfg.random_functors)
        for i in C.objects:
            for M in pool:
                rep.extend(verify_lemma_eq1(B, C, i, M, cfg.max_nat))
                rep.extend(verify_yoneda(B, C, i, M))
    return rep


def suite_density(cfg: SuiteConfig) -> Report:
    B = cfg.make_base()
    rep = Report()
    for C in _categories(cfg):
        for M in functor_pool(B, C, _size(B, cfg), _rng(cfg, "pool", C.name), cfg.random_functors):
            rep.extend(verify_density(B, C, M))
    return rep


def suite_eval_adjunction(cfg: SuiteConfig) -> Report:
    B = cfg.make_base()
    rep = Report()
    rng = _rng(cfg, "eval")
    for C in _small(_categories(cfg)):
        pool = functor_pool(B, C, _sample_size(B), _rng(cfg, "pool2", C.name), cfg.random_functors)
        for i in C.objects:
            for m in range(3):
                for M in _pick(rng, pool, 4):
                    rep.extend(verify_eval_adjunction(B, C, i, m, M, rng, cfg.max_nat))
            for M in _pick(rng, pool, 2):
                rep.extend(verify_two_sided_evaluation(B, C, i, 2, M, rng, cfg.max_nat))
    return rep


def _precomposition_cases(cats):
    for J in cats:
        yield identity_functor(J)
        for j in J.objects:
            yield point(J, j)
        if len(J.objects) > 1:
            yield to_terminal(J)


def _module_functors(B: Base, C: FinCat, N: MFunctor):
    ident = ModuleFunctor(
        name="id",
        source=FunctorModule(B, C),
        target=FunctorModule(B, C),
        on_obj=lambda M: M,
        on_mor=lambda t: t,
        mu=lambda m, M: identity_nat(act(m, M)),
    )
    yield ident, "functors"
    yield FunctorCategoryClosure(B, N).module_functor(), "functors"
    for i in C.objects:
        yield eval_witness(B, C, i).left, "objects"
        yield evaluation_module_functor(B, C, i), "functors"


def suite_kan(cfg: SuiteConfig) -> Report:
    B = cfg.make_base()
    rep = Report()
    rng = _rng(cfg, "kan")
    cats = _categories(cfg)
    for phi in _precomposition_cases(_small(cats)):
        I, J = phi.source, phi.target
        xs = functor_pool(B, J, _sample_size(B), _rng(cfg, "pool2", J.name), cfg.random_functors)
        ys = functor_pool(B, I, _sample_size(B), _rng(cfg, "pool2", I.name), cfg.random_functors)
        for X, Y in zip(_pick(rng, xs, 3), _pick(rng, ys, 3)):
            rep.extend(verify_precomposition_adjunction(B, phi, X, Y, rng, cfg.max_nat))
        K = KanExtension(B, phi)
        samples = [(m, n, X) for m, n, X in zip(rng.integers(0, 3, 2), rng.integers(0, 3, 2), _pick(rng, xs, 2))]
        rep.extend(verify_module_functor(K.module_functor(), [(int(m), int(n), X) for m, n, X in samples]))
    for C in cats:
        pool = functor_pool(B, C, _sample_size(B), _rng(cfg, "pool2", C.name), cfg.random_functors)
        for Y in _pick(rng, pool, 3):
            rep.extend(verify_limit_consistency(B, Y, cfg.max_nat))
        N = _pick(rng, pool, 1)[0]
        for F, kind in _module_functors(B, C, N):
            if kind == "objects":
                cs = [int(c) for c in rng.integers(0, 3, 2)]
            else:
                cs = _pick(rng, pool, 2)
            samples = [(int(rng.integers(0, 3)), int(rng.integers(0, 3)), c) for c in cs]
            rep.extend(verify_module_functor(F, samples))
        for M in _pick(rng, pool, 2):
            rep.extend(verify_cocontinuity(B, M, N, point(C, C.objects[-1])))
    for C in _small(cats):
        # the comparison acts on map objects themselves, so keep them tiny
        pool = functor_pool(B, C, 1, _rng(cfg, "pool1", C.name), cfg.random_functors)
        N = _pick(rng, pool, 1)[0]
        W = FunctorCategoryClosure(B, N).witness()
        for M, P in zip(_pick(rng, pool, 2), _pick(rng, pool, 2)):
            rep.extend(verify_map_level_iso(W, M, P))
        for i in C.objects:
            W = eval_witness(B, C, i)
            for M in _pick(rng, pool, 2):
                rep.extend(verify_map_level_iso(W, int(rng.integers(0, 3)), M))
    return rep


def closed_triples(B: Base, cats, n: int, rng) -> list[tuple]:
    """Every unit-functor placement on each category, then random triples."""
    out = []
    for C in cats:
        K = unit_functor(B, C)
        X = random_functor(B, C, _sample_size(B), rng)
        Y = random_functor(B, C, _sample_size(B), rng)
        for mask in itertools.product((True, False), repeat=3):
            if not any(mask):
                continue
            fill = iter((X, Y, X))
            out.append(tuple(K if is_unit else next(fill) for is_unit in mask))
    k = 0
    while len(out) < n or k < len(cats):
        C = cats[k % len(cats)]
        out.append(tuple(random_functor(B, C, _sample_size(B), rng) for _ in range(3)))
        k += 1
    return out


def suite_closed(cfg: SuiteConfig) -> Report:
    B = cfg.make_base()
    rep = Report()
    rng = _rng(cfg, "closed")
    for M, N, P in closed_triples(B, _categories(cfg), cfg.closed_triples, rng):
        rep.extend(verify_closed_monoidal_functorcat(B, M, N, P, rng, cfg.max_nat))
    return rep


RUNNERS = {
    "coherence": suite_coherence,
    "module": suite_module,
    "yoneda": suite_yoneda,
    "density": suite_density,
    "eval-adjunction": suite_eval_adjunction,
    "kan": suite_kan,
    "closed": suite_closed,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> Report:
    cfg = cfg or SuiteConfig()
    if name == "all":
        rep = Report()
        for s in SUITES:
            rep.extend(RUNNERS[s](cfg))
        return rep
    try:
        runner = RUNNERS[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)} or all") from None
    return runner(cfg)


def with_base(cfg: SuiteConfig, base) -> SuiteConfig:
    return replace(cfg, base=base)
