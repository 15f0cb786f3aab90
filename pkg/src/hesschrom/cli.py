"""Command-line front end: exact computation and identity verification
with deterministic text or JSON output.

Exit codes: 0 success / suite passed, 1 verification failure, 2 usage or
validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .base import (
    BoundExceededError,
    Composition,
    DEFAULT_MAX_N,
    Partition,
    TPoly,
)
from .betti import betti_vector
from .character import dot_character
from .chromatic import chromatic_qsym
from .hessenberg import (
    Digraph,
    HessenbergFunction,
    enumerate_hessenberg,
    incomparability_graph,
)
from .pathqsym import path_qsym
from .qsym import QSymElement, SymElement, expand_in_basis, omega, to_m_basis
from .verify import SUITES


def poly_json(p: TPoly):
    return [[e, str(p.terms[e])] for e in p.exponents()]


def sym_json(x: SymElement):
    terms = sorted(x.terms.items(), key=lambda kv: kv[0].parts, reverse=True)
    return {
        "degree": x.n,
        "basis": x.basis,
        "terms": [
            {"partition": list(lam.parts), "poly": poly_json(c)} for lam, c in terms
        ],
    }


def qsym_json(x: QSymElement):
    terms = sorted(x.terms.items(), key=lambda kv: kv[0].parts)
    return {
        "degree": x.n,
        "basis": x.basis,
        "terms": [
            {"composition": list(a.parts), "poly": poly_json(c)} for a, c in terms
        ],
    }


def _print_sym(x: SymElement, as_json: bool):
    if as_json:
        print(json.dumps(sym_json(x)))
        return
    for lam, c in sorted(x.terms.items(), key=lambda kv: kv[0].parts, reverse=True):
        print(f"{x.basis}{lam}  {c}")


def _print_qsym(x: QSymElement, as_json: bool):
    if as_json:
        print(json.dumps(qsym_json(x)))
        return
    for a, c in sorted(x.terms.items(), key=lambda kv: kv[0].parts):
        print(f"{x.basis}{a}  {c}")


def _parse_ints(text: str):
    return tuple(int(p) for p in text.split(",") if p)


def _parse_hessenberg(args) -> HessenbergFunction:
    m = _parse_ints(args.m)
    n = getattr(args, "n", None) or len(m) + 1
    return HessenbergFunction(n, m)


def _parse_digraph(args) -> Digraph:
    edges = set()
    if args.edges:
        for piece in args.edges.split(","):
            u, _, v = piece.partition(">")
            edges.add((int(u), int(v)))
    vertices = set(args.vertices and _parse_ints(args.vertices) or ())
    for u, v in edges:
        vertices.update((u, v))
    if not vertices:
        raise ValueError("digraph needs --edges and/or --vertices")
    return Digraph(frozenset(vertices), frozenset(edges))


def _cmd_xg(args) -> int:
    m = _parse_hessenberg(args)
    x = chromatic_qsym(
        incomparability_graph(m), args.stat, max_n=args.max_n, force=args.force
    )
    if args.basis == "M":
        _print_qsym(x, args.json)
    else:
        sym = to_m_basis(x)
        if args.basis != "m":
            sym = expand_in_basis(sym, args.basis)
        _print_sym(sym, args.json)
    return 0


def _cmd_omega_xg(args) -> int:
    m = _parse_hessenberg(args)
    x = chromatic_qsym(
        incomparability_graph(m), args.stat, max_n=args.max_n, force=args.force
    )
    wx = omega(x)
    if args.basis == "M":
        _print_qsym(wx, args.json)
    else:
        sym = to_m_basis(wx)
        if args.basis != "m":
            sym = expand_in_basis(sym, args.basis)
        _print_sym(sym, args.json)
    return 0


def _cmd_xi(args) -> int:
    d = _parse_digraph(args)
    xi = path_qsym(d, args.stat, max_n=args.max_n, force=args.force)
    _print_qsym(xi, args.json)
    return 0


def _cmd_betti(args) -> int:
    m = _parse_hessenberg(args)
    lam = Partition(_parse_ints(args.lam))
    bv = betti_vector(m, lam, max_n=args.max_n, force=args.force)
    if args.json:
        print(
            json.dumps(
                {
                    "m": list(m.m),
                    "lambda": list(lam.parts),
                    "weight": bv.weight,
                    "betti": [[deg, c] for deg, c in bv.values],
                }
            )
        )
    else:
        for deg, c in bv.values:
            print(f"beta[{deg}] = {c}")
    return 0


def _cmd_character(args) -> int:
    m = _parse_hessenberg(args)
    chi = dot_character(m, args.d)
    if args.json:
        print(
            json.dumps(
                {
                    "m": list(m.m),
                    "d": args.d,
                    "values": [
                        {"cycle_type": list(mu.parts), "value": v}
                        for mu, v in chi.values
                    ],
                }
            )
        )
    else:
        for mu, v in chi.values:
            print(f"chi{mu} = {v}")
    return 0


def _cmd_enumerate(args) -> int:
    funcs = enumerate_hessenberg(args.n, max_n=args.max_n, force=args.force)
    if args.json:
        print(json.dumps({"n": args.n, "count": len(funcs), "m": [list(f.m) for f in funcs]}))
    else:
        for f in funcs:
            print(str(f))
    return 0


def _cmd_verify(args) -> int:
    fn = SUITES[args.suite]
    kwargs = {}
    if args.suite == "reciprocity":
        kwargs["seed"] = args.seed
        if args.max_n is not None:
            kwargs["max_n"] = args.max_n
    elif args.suite == "omega":
        if args.max_n is not None:
            kwargs["max_degree"] = args.max_n
    elif args.max_n is not None:
        kwargs["max_n"] = args.max_n
    report = fn(**kwargs)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        status = "PASS" if report.ok else "FAIL"
        print(
            f"{status} suite={report.suite} checked={report.checked} "
            f"failures={len(report.failures)} elapsed_ms={report.elapsed_ms}"
        )
        for f in report.failures:
            print(f"  {f['input']}: expected {f['expected']}, got {f['actual']}")
    return 0 if report.ok else 1


def _common_parser(max_n_default=DEFAULT_MAX_N) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-n", type=int, default=max_n_default, help="enumeration guard")
    common.add_argument("--force", action="store_true", help="override the guard")
    common.add_argument("--stat", choices=("asc", "des"), default="asc")
    common.add_argument("--seed", type=int, default=0, help="seed for random suites")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()

    parser = argparse.ArgumentParser(
        prog="hesschrom",
        description="Chromatic/path quasisymmetric functions, Hessenberg Betti "
        "numbers and dot-action characters, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("xg", parents=[common], help="chromatic quasisymmetric function of G(m)")
    p.add_argument("--n", type=int)
    p.add_argument("--m", required=True, help="comma-separated m_1,...,m_{n-1}")
    p.add_argument("--basis", choices=("m", "M", "e", "h", "p", "s"), default="m")
    p.set_defaults(fn=_cmd_xg)

    p = sub.add_parser("omega-xg", parents=[common], help="omega X_{G(m)}(t)")
    p.add_argument("--n", type=int)
    p.add_argument("--m", required=True)
    p.add_argument("--basis", choices=("m", "M", "e", "h", "p", "s"), default="m")
    p.set_defaults(fn=_cmd_omega_xg)

    p = sub.add_parser("xi", parents=[common], help="path quasisymmetric function of a digraph")
    p.add_argument("--edges", default="", help="directed edges like 1>2,2>1")
    p.add_argument("--vertices", default="", help="extra isolated vertices, like 1,2,3")
    p.set_defaults(fn=_cmd_xi)

    p = sub.add_parser("betti", parents=[common], help="Betti numbers of a regular Hessenberg variety")
    p.add_argument("--n", type=int)
    p.add_argument("--m", required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="Jordan type, like 2,1")
    p.set_defaults(fn=_cmd_betti)

    p = sub.add_parser("character", parents=[common], help="dot-action character values")
    p.add_argument("--n", type=int)
    p.add_argument("--m", required=True)
    p.add_argument("--d", type=int, required=True, help="cohomological degree d (of H^{2d})")
    p.set_defaults(fn=_cmd_character)

    p = sub.add_parser("enumerate", parents=[common], help="list Hessenberg functions")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_enumerate)

    # verify takes suite-specific defaults when --max-n is not given
    p = sub.add_parser(
        "verify", parents=[_common_parser(max_n_default=None)],
        help="run a verification suite",
    )
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.set_defaults(fn=_cmd_verify)
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
