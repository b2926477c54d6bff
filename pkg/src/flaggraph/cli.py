"""Command line entry point ``flaggraph``.

Exit codes: 0 all checks pass, 1 a check failed, 2 invalid parameters,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from flaggraph.autsearch import automorphism_group
from flaggraph.errors import BudgetExceeded, ParameterError
from flaggraph.graphs import (
    build_aig,
    build_gpg,
    build_kneser,
    connected_components,
    write_dot,
)
from flaggraph.verify import SUITES, _jsonable, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARAMS, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAMS, f"{self.prog}: error: {message}\n")


def _type_arg(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"type must be comma-separated integers, got {text!r}")


def _summary(G) -> dict:
    degrees = sorted({G.degree(v) for v in range(G.vertex_count)})
    return {
        "kind": G.kind,
        "n": G.n,
        "params": list(G.params),
        "vertices": G.vertex_count,
        "edges": G.edge_count,
        "components": len(connected_components(G)),
        "degrees": degrees,
    }


def _emit(obj) -> None:
    print(json.dumps(_jsonable(obj), indent=2, ensure_ascii=False))


def cmd_build(args) -> int:
    G = build_gpg(args.n, args.type, args.vertex_cap)
    if args.dot:
        write_dot(G, args.dot)
    _emit(_summary(G))
    return EXIT_OK


def cmd_subsets(args) -> int:
    build = build_kneser if args.command == "kneser" else build_aig
    G = build(args.n, args.k, args.vertex_cap)
    if args.dot:
        write_dot(G, args.dot)
    _emit(_summary(G))
    return EXIT_OK


def cmd_aut(args) -> int:
    G = build_gpg(args.n, args.type, args.vertex_cap)
    result = automorphism_group(G, max_vertices=args.max_vertices)
    out = {"n": args.n, "type": sorted(args.type), "vertices": G.vertex_count,
           "order": result.order, "generators": len(result.generators),
           "orbit_lengths": result.orbit_lengths}
    if args.show_generators:
        out["generator_cycles"] = [[list(c) for c in g.cycles()] for g in result.generators]
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = {}
    for key in ("n", "a", "b", "k", "max_n", "samples"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    if args.type is not None:
        params["type"] = args.type
    if args.vertex_cap is not None:
        params["vertex_cap"] = args.vertex_cap
    report = run_suite(args.suite, params)
    text = report.to_json()
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.quiet:
        pass
    elif args.json:
        print(report.summary())
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flaggraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, with_type=True):
        p.add_argument("--n", type=int, required=with_type)
        if with_type:
            p.add_argument("--type", type=_type_arg, required=True,
                           help="comma-separated flag sizes, e.g. 1,3")
        p.add_argument("--vertex-cap", type=int, default=None)

    p = sub.add_parser("build", help="build Γ(n,T) and print a summary")
    common(p)
    p.add_argument("--dot", help="write the graph in DOT format")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("aut", help="compute the full automorphism group of Γ(n,T)")
    common(p)
    p.add_argument("--max-vertices", type=int, default=512)
    p.add_argument("--show-generators", action="store_true")
    p.set_defaults(func=cmd_aut)

    for name in ("kneser", "aig"):
        p = sub.add_parser(name, help=f"build {'KG' if name == 'kneser' else 'AIG'}(n,k)")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--vertex-cap", type=int, default=None)
        p.add_argument("--dot")
        p.set_defaults(func=cmd_subsets)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--type", type=_type_arg)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--vertex-cap", type=int)
    p.add_argument("--json", help="write the JSON report to this path")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


DEFAULT_PARAMS = {
    "formulas": {"n": 7, "a": 1, "b": 5},
    "maxima": {"n": 7, "a": 1, "b": 5},
    "secondmax": {"n": 6, "a": 1},
    "blocks": {"n": 7, "a": 1, "b": 5},
    "autgroup": {"n": 5, "type": [1, 3]},
    "matching": {"n": 3, "a": 1, "b": 2},
    "smalltype": {"n": 6, "type": [1, 2]},
    "complement": {"n": 5, "type": [2, 4]},
    "aig": {"max_n": 8},
    "edgecase": {},
}


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and all(
            getattr(args, k) is None for k in ("n", "type", "a", "b", "k", "max_n")):
        for key, value in DEFAULT_PARAMS[args.suite].items():
            setattr(args, key, value)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"flaggraph: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except BudgetExceeded as exc:
        print(f"flaggraph: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
