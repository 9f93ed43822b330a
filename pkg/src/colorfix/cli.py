"""Command-line entry point. Graphs travel between subcommands as graph6 lines."""

from __future__ import annotations

import argparse
import sys
from typing import Iterator, Sequence

from . import harness
from .coloring import chromatic_number
from .construct import ChainSpec, build_chain, close_chain, odd_wheel
from .criticality import check_criticality
from .graph import Graph, GraphError, parse_edge_list, parse_graph6, read_graph6_lines, to_graph6
from .identity import identity_partition, is_color_fixed_by_odd_cycle, semantically_fixed_vertices, separating_coloring
from .planarity import is_planar

EXIT_OK, EXIT_CLAIM_FAILED, EXIT_USAGE = 0, 1, 2


def _graphs(args: argparse.Namespace) -> Iterator[Graph]:
    if args.edges:
        with open(args.edges) as fh:
            yield parse_edge_list(fh.read())
    elif args.graph == "-":
        yield from read_graph6_lines(sys.stdin)
    elif args.graph:
        yield parse_graph6(args.graph)
    else:
        raise GraphError("no graph given; pass graph6 text, '-' for stdin, or --edges FILE")


def _one_graph(args: argparse.Namespace) -> Graph:
    graphs = list(_graphs(args))
    if len(graphs) != 1:
        raise GraphError(f"expected exactly one graph, got {len(graphs)}")
    return graphs[0]


def _fmt(values) -> str:
    return ",".join(map(str, values))


def cmd_chi(args) -> int:
    for g in _graphs(args):
        chi, col = chromatic_number(g)
        print(f"{chi}\t{' '.join(map(str, col.colors))}")
    return EXIT_OK


def cmd_critical(args) -> int:
    for g in _graphs(args):
        check = check_criticality(g, args.k)
        if check.certificate:
            print(f"critical\tk={args.k} edges={len(check.certificate.per_edge)} certificate=verified")
        else:
            extra = f" edge={_fmt(check.counterexample)}" if check.counterexample else ""
            print(f"not-critical\t{check.reason}{extra}")
    return EXIT_OK


def cmd_identity(args) -> int:
    g = _one_graph(args)
    if g.has_edge(args.u, args.v):
        print("not-identical\tadjacent")
        return EXIT_OK
    split = separating_coloring(g, args.u, args.v)
    if split is None:
        print("identical")
    else:
        print(f"not-identical\t{' '.join(map(str, split.colors))}")
    return EXIT_OK


def cmd_partition(args) -> int:
    for g in _graphs(args):
        part = identity_partition(g)
        print(f"{part.chi}\t{' '.join(_fmt(c) for c in part.classes)}")
    return EXIT_OK


def cmd_fixed(args) -> int:
    g = _one_graph(args)
    if not 0 <= args.v < g.n:
        raise GraphError(f"vertex {args.v} out of range for n={g.n}")
    cycle = is_color_fixed_by_odd_cycle(g, args.v)
    semantic = args.v in semantically_fixed_vertices(g)
    syn = f"yes cycle={_fmt(cycle)}" if cycle else "no"
    print(f"syntactic={syn}\tsemantic={'yes' if semantic else 'no'}")
    return EXIT_OK


def cmd_wheel(args) -> int:
    print(to_graph6(odd_wheel(args.length)[0]))
    return EXIT_OK


def cmd_chain(args) -> int:
    print(to_graph6(build_chain(ChainSpec.parse(args.spec)).graph))
    return EXIT_OK


def cmd_close(args) -> int:
    chain = build_chain(ChainSpec.parse(args.spec))
    pair = tuple(int(x) for x in args.pair.split(",")) if args.pair else None
    if pair is not None and len(pair) != 2:
        raise GraphError("--pair takes two hub ids, e.g. 0,2")
    print(to_graph6(close_chain(chain, pair)))
    return EXIT_OK


def cmd_planar(args) -> int:
    for g in _graphs(args):
        print("planar" if is_planar(g) else "nonplanar")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    lo = 1 if args.upto else args.n
    corpus = harness.CorpusSpec(min_n=lo, max_n=args.n)
    if args.critical:
        stream = (g for g, _ in harness.find_k_critical(corpus, args.critical))
    else:
        stream = harness.iter_corpus(corpus)
    for g in stream:
        print(to_graph6(g))
    return EXIT_OK


def cmd_verify(args) -> int:
    if (args.n is None) == (args.corpus is None):
        raise GraphError("verify needs exactly one of -n N or --corpus FILE")
    if args.n is not None:
        corpus = harness.CorpusSpec(max_n=args.n, min_degree=args.min_degree)
    else:
        corpus = harness.CorpusSpec(path=args.corpus, min_degree=args.min_degree)
    claims = harness.parse_claims(args.claims)
    chains = args.chain or harness.DEFAULT_CHAINS
    for spec in chains:
        ChainSpec.parse(spec)
    reports = harness.verify_claims(corpus, claims, budget=args.budget, jobs=args.jobs, chains=chains)
    summary = harness.write_report(reports, args.output, timing=args.timing)
    for claim, counts in summary["per_claim"].items():
        print(f"{claim}\tpass={counts['pass']} fail={counts['fail']} budget-exceeded={counts['budget-exceeded']}")
    total = summary["counts"]
    print(f"total\tpass={total['pass']} fail={total['fail']} budget-exceeded={total['budget-exceeded']}")
    if total["budget-exceeded"]:
        print("warning: some instances ran out of budget; raise --budget to decide them", file=sys.stderr)
    return EXIT_CLAIM_FAILED if total["fail"] else EXIT_OK


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="graph6 text, or '-' to read graph6 lines from stdin")
    p.add_argument("--edges", metavar="FILE", help="read an 'n m' + 'u v' edge-list file instead")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorfix", description="Colour identity and fixation tools for small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="chromatic number and a witness colouring")
    _add_graph_args(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("critical", help="k-criticality verdict")
    p.add_argument("-k", type=int, required=True)
    _add_graph_args(p)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("identity", help="is {u, v} a colour-identical pair")
    p.add_argument("graph")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.set_defaults(func=cmd_identity, edges=None)

    p = sub.add_parser("partition", help="colour-identity classes")
    _add_graph_args(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("fixed", help="syntactic and semantic fixation of a vertex")
    p.add_argument("graph")
    p.add_argument("v", type=int)
    p.set_defaults(func=cmd_fixed, edges=None)

    p = sub.add_parser("wheel", help="emit the odd wheel on a rim of the given length")
    p.add_argument("length", type=int)
    p.set_defaults(func=cmd_wheel)

    p = sub.add_parser("chain", help="emit a colour-fixation chain, e.g. 3,5,3")
    p.add_argument("spec")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("close", help="emit a chain with its end hubs joined")
    p.add_argument("spec")
    p.add_argument("--pair", help="join these two hubs instead, e.g. 0,2")
    p.set_defaults(func=cmd_close)

    p = sub.add_parser("planar", help="planarity verdict")
    _add_graph_args(p)
    p.set_defaults(func=cmd_planar)

    p = sub.add_parser("enumerate", help="stream connected graphs on n vertices as graph6")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--upto", action="store_true", help="include every order from 1 to n")
    p.add_argument("--critical", type=int, metavar="K", help="keep only K-critical graphs")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check claims over a corpus and write a JSONL report")
    p.add_argument("-n", type=int, help="built-in corpus: connected graphs on 1..n vertices")
    p.add_argument("--corpus", metavar="FILE", help="graph6 file to check instead")
    p.add_argument("--claims", required=True, help="e.g. C1,C2 or C1..C7 or all")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, help="node-expansion budget per claim and instance")
    p.add_argument("--chain", action="append", metavar="SPEC", help="chain spec for C6 (repeatable)")
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="add wall-clock times (output no longer reproducible)")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"colorfix {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
