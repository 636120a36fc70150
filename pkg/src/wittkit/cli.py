"""Command-line front end: one verb per library operation.

Vectors, basis elements and graded elements are passed as JSON (the same
shapes the library serializes); sets and rings as spec strings.  Output
is text by default, JSON with --format json.  Exit codes: 0 success,
1 domain error (the error name is printed verbatim), 2 usage error.

Environment: WITTKIT_CACHE overrides the universal-polynomial cache
path, WITTKIT_CEILING the weight ceiling.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import drwz, laws, ptypical, series, universal, wittint
from .errors import WittkitError
from .rings import element_from_json, element_to_json, parse_ring
from .truncation import parse_truncation_set
from .universal import HARD_MAX_CEILING, PolySource
from .witt import (
    WittVector,
    delta,
    from_ghost,
    frobenius,
    ghost,
    ghost_from_json,
    restrict,
    teichmuller,
    verschiebung,
    witt_add,
    witt_from_json,
    witt_mul,
    witt_neg,
)


def _emit(args, payload, text: str | None = None):
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text if text is not None else json.dumps(payload, sort_keys=True))


def _vector(arg: str) -> WittVector:
    return witt_from_json(json.loads(arg))


def _basis(arg: str) -> wittint.BasisWittInt:
    return wittint.basis_from_json(json.loads(arg))


def _drw(arg: str) -> drwz.DrwElement:
    return drwz.drw_from_json(json.loads(arg))


# -- witt verbs --------------------------------------------------------------


def _cmd_witt(args) -> int:
    op = args.witt_op
    if op in ("add", "mul"):
        x, y = _vector(args.x), _vector(args.y)
        fn = witt_add if op == "add" else witt_mul
        out = fn(x, y, strategy=args.strategy)
    elif op == "neg":
        out = witt_neg(_vector(args.x), strategy=args.strategy)
    elif op == "ghost":
        g = ghost(_vector(args.x))
        _emit(args, g.to_json(), str(g))
        return 0
    elif op == "from-ghost":
        out = from_ghost(ghost_from_json(json.loads(args.x)))
    elif op == "teich":
        ring = parse_ring(args.ring)
        out = teichmuller(ring.from_json(json.loads(args.value)), parse_truncation_set(args.set), ring)
    elif op == "frob":
        out = frobenius(args.n, _vector(args.x), strategy=args.strategy)
    elif op == "versch":
        out = verschiebung(args.n, _vector(args.x), parse_truncation_set(args.set))
    elif op == "restrict":
        out = restrict(_vector(args.x), parse_truncation_set(args.target))
    else:  # pragma: no cover
        raise WittkitError(f"unknown witt verb {op}")
    _emit(args, out.to_json(), str(out))
    return 0


def _cmd_basis(args) -> int:
    op = args.basis_op
    if op == "teich":
        out = wittint.teich_basis(args.m, parse_truncation_set(args.set))
        _emit(args, out.to_json(), str(out))
    elif op == "to":
        vec = wittint.to_coords(_basis(args.x))
        _emit(args, vec.to_json(), str(vec))
    elif op == "from":
        out = wittint.from_coords(_vector(args.x))
        _emit(args, out.to_json(), str(out))
    else:  # pragma: no cover
        raise WittkitError(f"unknown basis verb {op}")
    return 0


def _cmd_delta(args) -> int:
    out = delta(_vector(args.x), parse_truncation_set(args.target))
    _emit(args, out.to_json(), str(out))
    return 0


def _cmd_gamma(args) -> int:
    out = series.gamma(_vector(args.x), args.precision)
    _emit(args, element_to_json(out), str(out))
    return 0


def _cmd_gamma_inv(args) -> int:
    f = element_from_json(json.loads(args.series))
    out = series.gamma_inverse(f, args.length)
    _emit(args, out.to_json(), str(out))
    return 0


def _cmd_ptypical(args) -> int:
    if args.pt_op == "decompose":
        x = _vector(args.x)
        idems = ptypical.idempotents(x.tset, args.prime, x.ring)
        comps = {
            k: ptypical.ptypical_projection(k, x, args.prime, idems[k]) for k in idems
        }
        payload = {str(k): v.to_json() for k, v in comps.items()}
        text = "\n".join(f"{k}: {v}" for k, v in sorted(comps.items()))
        _emit(args, payload, text)
    elif args.pt_op == "tau":
        iso = ptypical.tau_iso(args.prime, args.length)
        if args.value is not None:
            v = iso.to_witt(args.value)
            _emit(args, v.to_json(), str(v))
        else:
            payload = {str(k): iso.to_witt(k).to_json() for k in range(iso.modulus)}
            text = "\n".join(f"{k} -> {iso.to_witt(k)}" for k in range(iso.modulus))
            _emit(args, payload, text)
    else:  # pragma: no cover
        raise WittkitError(f"unknown ptypical verb {args.pt_op}")
    return 0


def _cmd_drwz(args) -> int:
    op = args.drwz_op
    if op == "mul":
        out = drwz.drw_mul(_drw(args.x), _drw(args.y))
    elif op == "d":
        out = drwz.drw_d(_drw(args.x))
    elif op == "frob":
        out = drwz.drw_frobenius(args.n, _drw(args.x))
    elif op == "versch":
        out = drwz.drw_verschiebung(args.n, _drw(args.x), parse_truncation_set(args.set))
    elif op == "dlog":
        out = drwz.dlog_minus_one(parse_truncation_set(args.set))
    elif op == "eta":
        out = drwz.drw_eta(_basis(args.x))
    elif op == "restrict":
        out = drwz.drw_restrict(parse_truncation_set(args.target), _drw(args.x))
    elif op == "table":
        tables = drwz.generator_tables(parse_truncation_set(args.set))
        if args.format == "json":
            print(json.dumps(tables, indent=2, sort_keys=True))
        else:
            for section, rows in tables.items():
                print(f"[{section}]")
                for k in sorted(rows):
                    print(f"  {k} = {rows[k]}")
        return 0
    else:  # pragma: no cover
        raise WittkitError(f"unknown drwz verb {op}")
    _emit(args, out.to_json(), str(out))
    return 0


def _cmd_laws(args) -> int:
    S = parse_truncation_set(args.set)
    if args.suite == "wittcomplex":
        report = laws.check_witt_complex(S, trials=args.trials, seed=args.seed)
    elif args.suite == "comonad":
        T = parse_truncation_set(args.target) if args.target else S
        report = laws.check_comonad(S, T, parse_ring(args.base), trials=args.trials, seed=args.seed)
    elif args.suite == "wittring":
        report = laws.check_witt_ring(S, parse_ring(args.base), trials=args.trials, seed=args.seed)
    else:  # pragma: no cover
        raise WittkitError(f"unknown suite {args.suite}")
    if args.json or args.format == "json":
        print(laws.report_to_json_text(report))
    else:
        print(report.summary())
    return 0 if report.passed else 1


def _cmd_cache(args) -> int:
    source = PolySource(
        cache_path=args.cache or universal.default_cache_path(), ceiling=args.ceiling
    )
    count = universal.warm_cache(args.up_to, source)
    source.flush()
    _emit(args, {"entries": count, "path": source.cache_path},
          f"computed {count} polynomials -> {source.cache_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittkit",
        description="Exact arithmetic for big Witt vectors and the explicit "
        "de Rham-Witt complex of the integers.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("witt", help="Witt vector arithmetic")
    ws = w.add_subparsers(dest="witt_op", required=True)
    for op in ("add", "mul"):
        p = ws.add_parser(op, parents=[common])
        p.add_argument("x")
        p.add_argument("y")
        p.add_argument("--strategy", default="auto",
                       choices=("auto", "ghost", "lift", "universal"))
    p = ws.add_parser("neg", parents=[common])
    p.add_argument("x")
    p.add_argument("--strategy", default="auto", choices=("auto", "ghost", "lift", "universal"))
    p = ws.add_parser("ghost", parents=[common])
    p.add_argument("x")
    p = ws.add_parser("from-ghost", parents=[common])
    p.add_argument("x")
    p = ws.add_parser("teich", parents=[common])
    p.add_argument("value", help="JSON payload of a base-ring element")
    p.add_argument("--set", required=True)
    p.add_argument("--ring", default="Z")
    p = ws.add_parser("frob", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("x")
    p.add_argument("--strategy", default="auto", choices=("auto", "ghost", "lift", "universal"))
    p = ws.add_parser("versch", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("x")
    p.add_argument("--set", required=True, help="target truncation set")
    p = ws.add_parser("restrict", parents=[common])
    p.add_argument("target")
    p.add_argument("x")

    b = sub.add_parser("basis", help="W_S(Z) in the V-basis")
    bs = b.add_subparsers(dest="basis_op", required=True)
    p = bs.add_parser("teich", parents=[common])
    p.add_argument("m", type=int)
    p.add_argument("--set", required=True)
    p = bs.add_parser("to", parents=[common])
    p.add_argument("x", help="basis element JSON")
    p = bs.add_parser("from", parents=[common])
    p.add_argument("x", help="Witt vector JSON over Z")

    p = sub.add_parser("delta", parents=[common], help="comonad map into the nested Witt ring")
    p.add_argument("x")
    p.add_argument("--target", required=True)

    p = sub.add_parser("gamma", parents=[common], help="Witt vector to power series")
    p.add_argument("x")
    p.add_argument("--precision", type=int, required=True)

    p = sub.add_parser("gamma-inv", parents=[common], help="series (constant term 1) to Witt vector")
    p.add_argument("series", help="series element JSON")
    p.add_argument("--length", type=int, required=True)

    pt = sub.add_parser("ptypical", help="idempotent decomposition and Z/p^n")
    pts = pt.add_subparsers(dest="pt_op", required=True)
    p = pts.add_parser("decompose", parents=[common])
    p.add_argument("x")
    p.add_argument("--prime", type=int, required=True)
    p = pts.add_parser("tau", parents=[common])
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--value", type=int)

    dz = sub.add_parser("drwz", help="the graded complex over Z")
    dzs = dz.add_subparsers(dest="drwz_op", required=True)
    p = dzs.add_parser("mul", parents=[common])
    p.add_argument("x")
    p.add_argument("y")
    p = dzs.add_parser("d", parents=[common])
    p.add_argument("x")
    p = dzs.add_parser("frob", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("x")
    p = dzs.add_parser("versch", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("x")
    p.add_argument("--set", required=True)
    p = dzs.add_parser("dlog", parents=[common])
    p.add_argument("--set", required=True)
    p = dzs.add_parser("eta", parents=[common])
    p.add_argument("x")
    p = dzs.add_parser("restrict", parents=[common])
    p.add_argument("target")
    p.add_argument("x")
    p = dzs.add_parser("table", parents=[common])
    p.add_argument("--set", required=True)

    lw = sub.add_parser("laws", help="run a law suite")
    lws = lw.add_subparsers(dest="laws_op", required=True)
    p = lws.add_parser("check", parents=[common])
    p.add_argument("--suite", required=True, choices=tuple(laws.SUITES))
    p.add_argument("--set", required=True)
    p.add_argument("--target", help="inner truncation set for the comonad suite")
    p.add_argument("--base", default="Z")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--json", action="store_true")

    c = sub.add_parser("cache", help="universal polynomial cache")
    cs = c.add_subparsers(dest="cache_op", required=True)
    p = cs.add_parser("warm", parents=[common])
    p.add_argument("--up-to", dest="up_to", type=int, required=True)
    p.add_argument("--cache", help="cache file path override")
    p.add_argument(
        "--ceiling",
        type=int,
        default=None,
        help=f"weight ceiling override (hard maximum {HARD_MAX_CEILING})",
    )
    return parser


_HANDLERS = {
    "witt": _cmd_witt,
    "basis": _cmd_basis,
    "delta": _cmd_delta,
    "gamma": _cmd_gamma,
    "gamma-inv": _cmd_gamma_inv,
    "ptypical": _cmd_ptypical,
    "drwz": _cmd_drwz,
    "laws": _cmd_laws,
    "cache": _cmd_cache,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except WittkitError as exc:
        print(f"{exc.name}: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"BadJson: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
