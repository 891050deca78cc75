"""Command line: ``catcheck validate|check|compute``.

Exit codes: 0 everything passed, 1 a verification failed, 2 malformed
input, 3 a size cap was hit.  Every flag can also be set through an
environment variable ``CATCHECK_<FLAG>`` (e.g. ``CATCHECK_SEED``); flags
win over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import adjoint, funcat, yoneda
from .basecat import DEFAULT_MAX_ELEMS, DEFAULT_MAX_HOM, Base
from .documents import load
from .errors import CapExceeded, InputError
from .fincat import validate_category, validate_functor
from .report import Report
from .suites import SUITES, SuiteConfig, functor_pool, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
ENV_PREFIX = "CATCHECK_"
COMPUTE = ("end", "coend", "map", "kan-right", "internal-hom")


def _env(name, default):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("caps must be positive")
    return v


def _seed(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("the seed must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", choices=("finset", "finvect"), default=_env("base", None),
                        help="base category; defaults to the documents' base, else finset")
    common.add_argument("--p", type=_positive, default=_env("p", "2"), help="field size for finvect (prime)")
    common.add_argument("--seed", type=_seed, default=_env("seed", "0"))
    common.add_argument("--max-hom", type=_positive, default=_env("max_hom", str(DEFAULT_MAX_HOM)),
                        help="largest hom-set that may be enumerated")
    common.add_argument("--max-elems", type=_positive, default=_env("max_elems", str(DEFAULT_MAX_ELEMS)),
                        help="largest carrier that may be materialised")
    common.add_argument("--format", choices=("text", "records"), default=_env("format", "text"))
    common.add_argument("--legs", action="store_true", default=_env("legs", "") not in ("", "0"),
                        help="also print leg morphisms of computed objects")

    parser = argparse.ArgumentParser(prog="catcheck", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="parse and validate documents")
    v.add_argument("paths", nargs="+")

    c = sub.add_parser("check", parents=[common], help="run a verification suite",
                       description="Without documents the suite runs over the built-in fixture categories. "
                       "With documents, functors are taken in file order: module M N; yoneda, density M; "
                       "eval-adjunction M; kan Y [X] plus one catfunctor phi; closed M N P.")
    c.add_argument("suite", choices=SUITES + ("all",))
    c.add_argument("paths", nargs="*")
    c.add_argument("--object", help="index object for yoneda and eval-adjunction")
    c.add_argument("--m", type=int, default=None, help="base object for module and eval-adjunction")

    k = sub.add_parser("compute", parents=[common], help="compute and print an object",
                       description="end, map: M N; coend: M (coend of its codifferential at every j); "
                       "kan-right: Y plus a catfunctor phi; internal-hom: N P.")
    k.add_argument("what", choices=COMPUTE)
    k.add_argument("paths", nargs="+")
    return parser


def _base_spec(args):
    if args.base is None:
        return None
    return "finset" if args.base == "finset" else {"finvect": {"p": args.p}}


def _caps(args):
    return {"max_hom": args.max_hom, "max_elems": args.max_elems}


def _load(args, check=True):
    return load(args.paths, _base_spec(args), check=check, **_caps(args))


def _emit(out, args, records: list[dict], text_lines: list[str]):
    if args.format == "records":
        for r in records:
            out.write(json.dumps(r, sort_keys=True) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


# -- validate ---------------------------------------------------------------


def cmd_validate(args, out) -> int:
    ws = _load(args, check=False)
    failed = False
    records, lines = [], []
    for path, kind, value in ws.entries:
        if kind == "category":
            violations = validate_category(value).violations
        elif kind == "functor":
            violations = funcat.validate_mfunctor(value).violations
        elif kind == "nattrans":
            violations = funcat.validate_nattrans(value).violations
        else:
            violations = validate_functor(value).violations
        failed |= bool(violations)
        records.append({"path": path, "kind": kind, "ok": not violations, "violations": violations})
        lines.append(f"[{'FAIL' if violations else 'OK'}] {kind} {path}")
        lines.extend(f"  {v}" for v in violations)
    _emit(out, args, records, lines)
    return EXIT_FAIL if failed else EXIT_OK


# -- check ----------------------------------------------------------------


def _need(items, n, what):
    if len(items) < n:
        raise InputError(f"{what} needs {n} functor documents, got {len(items)}")
    return items


def _check_inputs(args, B: Base, ws) -> Report:
    rng = np.random.default_rng(args.seed)
    fs = ws.functors
    for M in fs:
        v = funcat.validate_mfunctor(M)
        if not v.ok:
            raise InputError(f"functor {M.describe()}: " + "; ".join(v.violations))
    rep = Report()
    suite = args.suite
    if suite == "coherence":
        raise InputError("the coherence suite takes no documents")
    if suite == "module":
        M, N = _need(fs, 2, suite)[:2]
        m = 1 if args.m is None else args.m
        rep.extend(funcat.verify_closed_module(m, M, N, rng))
        rep.extend(funcat.end_of_hom_equals_nat(M, N))
    elif suite in ("yoneda", "density", "eval-adjunction"):
        M = _need(fs, 1, suite)[0]
        I = M.index
        objs = [args.object] if args.object is not None else list(I.objects)
        for i in objs:
            if i not in I.objects:
                raise InputError(f"unknown object {i!r} in {I.name or 'category'}")
        if suite == "yoneda":
            for i in objs:
                rep.extend(yoneda.verify_lemma_eq1(B, I, i, M))
                rep.extend(yoneda.verify_yoneda(B, I, i, M))
        elif suite == "density":
            rep.extend(yoneda.verify_density(B, I, M))
        else:
            ms = [args.m] if args.m is not None else [0, 1, 2]
            for i in objs:
                for m in ms:
                    rep.extend(yoneda.verify_eval_adjunction(B, I, i, m, M, rng))
                rep.extend(adjoint.verify_two_sided_evaluation(B, I, i, ms[-1], M, rng))
    elif suite == "kan":
        if not ws.catfunctors:
            raise InputError("kan needs a catfunctor document for phi")
        phi = ws.catfunctors[0]
        v = validate_functor(phi)
        if not v.ok:
            raise InputError("phi: " + "; ".join(v.violations))
        Y = _need(fs, 1, suite)[0]
        if Y.index != phi.source:
            raise InputError("Y must be indexed by the source of phi")
        if len(fs) > 1:
            xs = [fs[1]]
        else:
            pool = functor_pool(B, phi.target, 2, rng, 40)
            xs = [pool[int(j)] for j in sorted(rng.choice(len(pool), size=min(3, len(pool)), replace=False))]
        for X in xs:
            rep.extend(adjoint.verify_precomposition_adjunction(B, phi, X, Y, rng))
    elif suite == "closed":
        M, N, P = _need(fs, 3, suite)[:3]
        rep.extend(adjoint.verify_closed_monoidal_functorcat(B, M, N, P, rng))
    return rep


def cmd_check(args, out) -> int:
    if args.paths:
        ws = _load(args)
        rep = _check_inputs(args, ws.base, ws)
    else:
        cfg = SuiteConfig(base=_base_spec(args) or "finset", seed=args.seed, **_caps(args))
        rep = run_suite(args.suite, cfg)
    out.write(rep.render(args.format))
    return EXIT_OK if rep.ok else EXIT_FAIL


# -- compute --------------------------------------------------------------


def _mor_record(m):
    return {"src": m.src, "dst": m.dst, "data": m.tolist()}


def cmd_compute(args, out) -> int:
    ws = _load(args)
    B = ws.base
    fs = ws.functors
    what = args.what
    rec: dict = {"compute": what, "base": B.name}
    legs: dict = {}
    if what in ("end", "map"):
        M, N = _need(fs, 2, what)[:2]
        mp = funcat.map_functors(M, N)
        rec["carrier"] = mp.carrier
        if what == "map":
            rec["elements"] = B.hom_count(B.unit(), mp.carrier)
        legs = mp.legs
    elif what == "coend":
        M = _need(fs, 1, what)[0]
        d = yoneda.density(M)
        rec["components"] = {j: d.coends[j].carrier for j in M.index.objects}
        rec["sizes"] = [d.coends[j].carrier for j in M.index.objects]
        legs = {f"j={j} i={i}": d.coends[j].colegs[i] for j in M.index.objects for i in M.index.objects}
    elif what == "kan-right":
        if not ws.catfunctors:
            raise InputError("kan-right needs a catfunctor document for phi")
        Y = _need(fs, 1, what)[0]
        G = adjoint.right_adjoint_of_precomposition(B, ws.catfunctors[0], Y)
        rec["sizes"] = list(G.sizes())
        legs = {g: G(g) for g in G.index.morphisms}
    else:
        N, P = _need(fs, 2, what)[:2]
        G = adjoint.internal_hom_functorcat(B, N, P)
        rec["sizes"] = list(G.sizes())
        legs = {g: G(g) for g in G.index.morphisms}
    if args.legs:
        rec["legs"] = {str(k): _mor_record(v) for k, v in legs.items()}
    if args.format == "records":
        out.write(json.dumps(rec, sort_keys=True) + "\n")
        return EXIT_OK
    if "carrier" in rec:
        out.write(f"{what} carrier: {rec['carrier']}\n")
    if "elements" in rec:
        out.write(f"global elements: {rec['elements']}\n")
    if "sizes" in rec:
        out.write(f"{what} sizes: (" + ",".join(str(s) for s in rec["sizes"]) + ")\n")
    for k, m in rec.get("legs", {}).items():
        out.write(f"  {k}: {m['src']} -> {m['dst']} {m['data']}\n")
    return EXIT_OK


COMMANDS = {"validate": cmd_validate, "check": cmd_check, "compute": cmd_compute}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except CapExceeded as exc:
        err.write(f"catcheck: cap exceeded: {exc.what} has size {exc.size} (cap {exc.cap})\n")
        return EXIT_CAP
    except InputError as exc:
        err.write(f"catcheck: input error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
