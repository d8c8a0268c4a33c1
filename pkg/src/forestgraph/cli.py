"""Command-line front end.

Every subcommand reads a graph from a file (or '-' for stdin) in edge-list or
DOT form, runs one library operation, and prints deterministically: the same
input and options always give byte-identical output.  `--format human` is the
default; `--format structured` emits stable key=value lines for scripts and
golden tests; `--format dot` applies to subcommands whose output is a graph.

Exit codes: 0 success, 1 verification failure, 2 malformed input, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import checks
from .dynamics import CONVERGENT, WITNESS_TWO_TRIANGLES, classify, is_stable, iterate_F
from .forest_graph import build_forest_graph, exchange_path, forest_distance
from .forests import FOREST_BUDGET, MaximalForest, count_maximal_forests, maximal_forests
from .graphs import (BudgetError, Graph, GraphInputError, complete_graph,
                     components, cycle_graph, path_graph)
from .io import ParseError, format_dot, format_edge_list, parse_graph
from .roots import (DEFAULT_DEPTH_LIMIT, DEFAULT_ROOT_VERTEX_BUDGET,
                    depth_lower_bound, enumerate_graphs, find_roots,
                    whitney_identify, whitney_split, whitney_twist)

BOWTIE_EDGES = ((0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4))


def _read_graph(path) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as err:
            raise GraphInputError(f"cannot read {path}: {err.strerror}") from None
    return parse_graph(text)


def _parse_forest(g, spec) -> MaximalForest:
    try:
        ids = [int(tok) for tok in spec.split(",") if tok != ""]
    except ValueError:
        raise GraphInputError(f"forest spec {spec!r} is not a comma-separated "
                              "list of edge indices") from None
    return MaximalForest(g, ids)


def _resolve_vertex(g, token) -> int:
    if g.vertex_names:
        for v in range(g.vertex_count):
            if g.vertex_names[v] == token:
                return v
    if token.isdigit() and int(token) < g.vertex_count:
        return int(token)
    raise GraphInputError(f"unknown vertex {token!r}")


def _describe(g) -> str:
    n, m = g.vertex_count, len(g.edges)
    if m == n * (n - 1) // 2:
        return f"K_{n}"
    degrees = sorted(g.degree(v) for v in range(n))
    if len(components(g)) == 1:
        if degrees and degrees[0] == degrees[-1] == 2:
            return f"C_{n}"
        if m == n - 1 and degrees[-1] <= 2:
            return f"P_{n}"
    return f"graph({n} vertices, {m} edges)"


def _inline(g) -> str:
    return f"{g.vertex_count}:" + ",".join(f"{u}-{v}" for u, v in g.edges)


def _print_graph(g, fmt, human_title):
    if fmt == "dot":
        sys.stdout.write(format_dot(g))
    elif fmt == "structured":
        sys.stdout.write(format_edge_list(g))
    else:
        print(human_title)
        sys.stdout.write(format_edge_list(g))


def cmd_forests(args) -> int:
    g = _read_graph(args.input)
    family = maximal_forests(g, args.budget)
    if args.format == "structured":
        print(f"count={len(family)}")
        for forest in family:
            print("forest=" + ",".join(map(str, forest.edge_ids())))
    else:
        print(f"{len(family)} maximal forests")
        for i, forest in enumerate(family):
            pairs = " ".join(f"{g.name_of(u)}-{g.name_of(v)}" for u, v in forest.pairs())
            print(f"[{i}] {' '.join(map(str, forest.edge_ids()))}  ({pairs})")
    return 0


def cmd_count(args) -> int:
    g = _read_graph(args.input)
    count = count_maximal_forests(g)
    if args.format == "structured":
        print(f"count={count}")
    else:
        print(count)
    return 0


def cmd_fgraph(args) -> int:
    g = _read_graph(args.input)
    fg = build_forest_graph(g, args.budget)
    if args.format == "dot":
        labels = [" ".join(map(str, f.edge_ids())) for f in fg.family]
        sys.stdout.write(format_dot(fg.graph, labels))
        return 0
    if args.format == "structured":
        print(f"order={fg.graph.vertex_count}")
        print(f"size={len(fg.graph.edges)}")
        for i, forest in enumerate(fg.family):
            print(f"vertex {i}=" + ",".join(map(str, forest.edge_ids())))
        for u, v in fg.graph.edges:
            print(f"edge={u},{v}")
        return 0
    print(f"forest graph: {fg.graph.vertex_count} vertices, {len(fg.graph.edges)} edges")
    for i, forest in enumerate(fg.family):
        print(f"[{i}] {' '.join(map(str, forest.edge_ids()))}")
    print("edges: " + " ".join(f"{u}-{v}" for u, v in fg.graph.edges))
    return 0


def cmd_distance(args) -> int:
    g = _read_graph(args.input)
    f1 = _parse_forest(g, args.forest1)
    f2 = _parse_forest(g, args.forest2)
    d = forest_distance(f1, f2)
    print(f"distance={d}" if args.format == "structured" else d)
    return 0


def cmd_path(args) -> int:
    g = _read_graph(args.input)
    f1 = _parse_forest(g, args.forest1)
    f2 = _parse_forest(g, args.forest2)
    walk = exchange_path(g, f1, f2)
    if args.format == "structured":
        print(f"length={len(walk) - 1}")
        for forest in walk:
            print("forest=" + ",".join(map(str, forest.edge_ids())))
    else:
        print(f"{len(walk) - 1} exchanges")
        for k, forest in enumerate(walk):
            print(f"[{k}] {' '.join(map(str, forest.edge_ids()))}")
    return 0


def cmd_iterate(args) -> int:
    g = _read_graph(args.input)
    if args.steps < 0:
        raise GraphInputError("step count must be non-negative")
    result = iterate_F(g, args.steps, args.budget)
    _print_graph(result, args.format,
                 f"after {args.steps} steps: {result.vertex_count} vertices, "
                 f"{len(result.edges)} edges")
    return 0


def cmd_classify(args) -> int:
    g = _read_graph(args.input)
    verdict = classify(g)
    if args.format == "structured":
        print(verdict.to_kv())
        return 0
    if verdict.status == CONVERGENT:
        name = "K_1" if verdict.limit == "K1" else "K_3"
        unit = "step" if verdict.steps == 1 else "steps"
        print(f"Convergent; limit {name} after {verdict.steps} {unit}")
    elif verdict.witness_kind == WITNESS_TWO_TRIANGLES:
        print("Divergent; witness: two edge-disjoint triangles")
    else:
        print(f"Divergent; witness: cycle of length {verdict.witness[0].length}")
    return 0


def cmd_stable(args) -> int:
    g = _read_graph(args.input)
    flag = is_stable(g, args.budget)
    if args.format == "structured":
        print(f"stable={'true' if flag else 'false'}")
    else:
        print("stable" if flag else "not stable")
    return 0


def cmd_roots(args) -> int:
    g = _read_graph(args.input)
    result = find_roots(g, args.max_vertices, args.max_edges, args.budget)
    report = depth_lower_bound(g, args.max_vertices, args.max_edges,
                               args.max_depth, args.budget)
    if args.format == "structured":
        print(f"roots={len(result.roots)}")
        for root in result.roots:
            print(f"root={_inline(root)}")
        if result.certificate is not None:
            print(f"certificate={result.certificate.reason}")
        print(f"kind={report.kind}")
        if report.kind == "stable":
            print("depth=unbounded")
        else:
            print(f"depth={report.depth}")
            if report.stop is not None:
                print(f"stop={report.stop.reason}")
                print(f"provable={'true' if report.provable_stop else 'false'}")
        return 0
    if report.kind == "stable":
        names = ", ".join(_describe(r) for r in result.roots)
        print(f"{len(result.roots)} root: {names}; depth unbounded (stable)"
              if len(result.roots) == 1 else
              f"{len(result.roots)} roots: {names}; depth unbounded (stable)")
        return 0
    if not result.found():
        print(f"no roots ({result.certificate.reason})")
        return 0
    names = ", ".join(_describe(r) for r in result.roots)
    plural = "root" if len(result.roots) == 1 else "roots"
    stop = f"; chain stops ({report.stop.reason})" if report.stop is not None else ""
    print(f"{len(result.roots)} {plural}: {names}; depth >= {report.depth}{stop}")
    return 0


def cmd_depth(args) -> int:
    g = _read_graph(args.input)
    report = depth_lower_bound(g, args.max_vertices, args.max_edges,
                               args.max_depth, args.budget)
    if args.format == "structured":
        print(f"kind={report.kind}")
        if report.kind == "stable":
            print("depth=unbounded")
            return 0
        print(f"depth={report.depth}")
        if report.stop is not None:
            print(f"stop={report.stop.reason}")
            print(f"provable={'true' if report.provable_stop else 'false'}")
        if report.chain is not None:
            for i, graph in enumerate(report.chain.graphs):
                print("graph")
                sys.stdout.write(format_edge_list(graph))
                if i < len(report.chain.iso_maps):
                    mapping = report.chain.iso_maps[i]
                    print("map=" + ",".join(f"{a}:{b}" for a, b in enumerate(mapping)))
        return 0
    if report.kind == "stable":
        print("depth unbounded (stable)")
    elif report.kind == "pruned":
        print(f"depth 0 ({report.stop.reason})")
    else:
        arrow = " -> ".join(_describe(x) for x in report.chain.graphs) \
            if report.chain is not None else _describe(g)
        stop = report.stop.reason if report.stop is not None else "unknown"
        grade = "proof" if report.provable_stop else "search limit"
        print(f"depth >= {report.depth}; chain: {arrow}; stops: {stop} ({grade})")
    return 0


def cmd_whitney(args) -> int:
    g = _read_graph(args.input)
    if args.operation == "identify":
        pairs = []
        for spec in args.args:
            left, sep, right = spec.partition(":")
            if not sep:
                raise GraphInputError(f"identify takes vertex pairs as A:B, got {spec!r}")
            pairs.append((_resolve_vertex(g, left), _resolve_vertex(g, right)))
        result = whitney_identify(g, pairs)
    elif args.operation == "split":
        if len(args.args) != 2:
            raise GraphInputError("split takes a vertex and a comma-separated side")
        v = _resolve_vertex(g, args.args[0])
        side = [_resolve_vertex(g, tok) for tok in args.args[1].split(",") if tok]
        result = whitney_split(g, v, side)
    elif args.operation == "twist":
        if len(args.args) != 3:
            raise GraphInputError("twist takes two vertices and a comma-separated side")
        u = _resolve_vertex(g, args.args[0])
        v = _resolve_vertex(g, args.args[1])
        side = [_resolve_vertex(g, tok) for tok in args.args[2].split(",") if tok]
        result = whitney_twist(g, u, v, side)
    else:
        raise GraphInputError(f"unknown whitney operation {args.operation!r}")
    if args.format == "dot":
        sys.stdout.write(format_dot(result.graph))
        return 0
    if args.format == "structured":
        sys.stdout.write(format_edge_list(result.graph))
        print("vertex_map=" + ",".join(map(str, result.vertex_map)))
        print("edge_map=" + ",".join(map(str, result.edge_map)))
        return 0
    print(f"{args.operation}: {result.graph.vertex_count} vertices, "
          f"{len(result.graph.edges)} edges")
    sys.stdout.write(format_edge_list(result.graph))
    return 0


def cmd_verify(args) -> int:
    results = checks.run_all(max_n=args.max_n, seed=args.seed, budget=args.budget,
                             whitney_count=args.trials)
    failed = []
    if args.format == "structured":
        for res in results:
            print(f"{res.name}={'pass' if res.ok else 'fail'}")
            if not res.ok:
                failed.append(res)
    else:
        width = max(len(res.name) for res in results)
        for res in results:
            mark = "pass" if res.ok else "FAIL"
            print(f"{res.name.ljust(width)}  {mark}  {res.detail}")
            if not res.ok:
                failed.append(res)
    if failed:
        print(f"verification failed: {failed[0].name}", file=sys.stderr)
        return 1
    return 0


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "bowtie":
        graphs_out = [Graph(5, BOWTIE_EDGES)]
    else:
        if args.n is None:
            raise GraphInputError(f"gen {kind} needs a vertex count")
        if kind == "cycle":
            graphs_out = [cycle_graph(args.n)]
        elif kind == "complete":
            graphs_out = [complete_graph(args.n)]
        elif kind == "path":
            graphs_out = [path_graph(args.n)]
        elif kind == "all":
            graphs_out = enumerate_graphs(args.n)
        else:
            raise GraphInputError(f"unknown generator {kind!r}")
    for i, g in enumerate(graphs_out):
        if len(graphs_out) > 1:
            print(f"# graph {i}")
        if args.format == "dot":
            sys.stdout.write(format_dot(g))
        else:
            sys.stdout.write(format_edge_list(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=FOREST_BUDGET,
                        help="maximal-forest budget (default 10^6)")
    common.add_argument("--format", choices=("human", "structured", "dot"),
                        default="human", help="output format")

    parser = argparse.ArgumentParser(
        prog="forestgraph",
        description="Maximal forests, the forest-graph operator, and its dynamics.")
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    def add(name, func, help_text, with_input=True, parents=(common,)):
        p = sub.add_parser(name, help=help_text, parents=list(parents))
        if with_input:
            p.add_argument("input", help="graph file (edge list or DOT), or - for stdin")
        p.set_defaults(func=func)
        return p

    add("forests", cmd_forests, "list all maximal forests")
    add("count", cmd_count, "count maximal forests exactly")
    add("fgraph", cmd_fgraph, "build the forest graph")

    p = add("distance", cmd_distance, "exchange distance between two forests")
    p.add_argument("forest1", help="comma-separated edge indices")
    p.add_argument("forest2", help="comma-separated edge indices")

    p = add("path", cmd_path, "shortest exchange path between two forests")
    p.add_argument("forest1", help="comma-separated edge indices")
    p.add_argument("forest2", help="comma-separated edge indices")

    p = add("iterate", cmd_iterate, "apply the forest-graph operator repeatedly")
    p.add_argument("steps", type=int, help="number of applications")

    add("classify", cmd_classify, "convergent or divergent, with evidence")
    add("stable", cmd_stable, "is the graph isomorphic to its forest graph")

    for name, func, help_text in (
            ("roots", cmd_roots, "search for graphs whose forest graph is this one"),
            ("depth", cmd_depth, "chase roots of roots; longest chain found")):
        p = add(name, func, help_text)
        p.add_argument("--max-vertices", type=int, default=DEFAULT_ROOT_VERTEX_BUDGET,
                       help="candidate vertex budget (default 6)")
        p.add_argument("--max-edges", type=int, default=None,
                       help="candidate edge budget (default none)")
        p.add_argument("--max-depth", type=int, default=DEFAULT_DEPTH_LIMIT,
                       help="chain length limit (default 8)")

    p = add("whitney", cmd_whitney, "apply a forest-preserving rewrite")
    p.add_argument("operation", choices=("identify", "split", "twist"))
    p.add_argument("args", nargs="+",
                   help="identify: A:B pairs; split: V SIDE; twist: U V SIDE "
                        "(SIDE comma-separated vertices)")

    p = add("verify", cmd_verify, "run the whole self-verification suite",
            with_input=False)
    p.add_argument("--max-n", type=int, default=5,
                   help="corpus vertex bound for exhaustive scans (default 5)")
    p.add_argument("--seed", type=int, default=0, help="randomized-trial seed")
    p.add_argument("--trials", type=int, default=100,
                   help="rewrite-invariance trial count (default 100)")

    p = add("gen", cmd_gen, "emit a named graph or a whole corpus", with_input=False)
    p.add_argument("kind", choices=("cycle", "complete", "path", "bowtie", "all"))
    p.add_argument("n", type=int, nargs="?", default=None, help="vertex count")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except GraphInputError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except BudgetError as err:
        print(f"budget exceeded: {err}", file=sys.stderr)
        return 3


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
