"""Command line entry point: ``opgraph <subcommand> ...``."""
from __future__ import annotations

import argparse
import sys

from .colorings import (ColoringError, conflict_relation, format_coloring, is_maximal_coloring,
                        minimal_coloring)
from .dot import to_dot
from .graph import GraphError, ParseError, serialize_graph
from .partitions import (DEFAULT_CAP, EdgePartition, PartitionError, enumerate_topological_partitions,
                         format_partition, hasse_edges, parse_partition)
from .paths import MAX_LEN, PathError, admissible_paths
from .report import compare_invariants, format_report, invariant_report, load


class UsageError(Exception):
    pass


def _cmd_build(args, out):
    inv = load(args.file)
    if inv.system is None:
        raise UsageError(f"{args.file}: build expects a system file")
    out.write(serialize_graph(inv.graph))
    return 0


def _cmd_report(args, out):
    out.write(format_report(invariant_report(load(args.file), cap=args.max_partition_edges)))
    return 0


def _cmd_compare(args, out):
    a, b = load(args.a), load(args.b)
    diff = compare_invariants(a, b, respect_colors=not args.ignore_colors)
    if diff is None:
        out.write("EQUIVALENT\n")
        return 0
    name, x, y = diff
    out.write(f"DISTINGUISHED {name} {_fmt(x)} vs {_fmt(y)}\n")
    return 1


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ",".join(_fmt(x) for x in v) + "]"
    if isinstance(v, tuple):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    return str(v)


def _cmd_partitions(args, out):
    g = load(args.file).graph
    ps = enumerate_topological_partitions(g, cap=args.max_partition_edges)
    out.write(f"# {len(ps)} topological partitions\n")
    for i, p in enumerate(ps):
        out.write(f"partition {i}\n")
        out.write(format_partition(p))
    for i, j in hasse_edges(ps):
        out.write(f"cover {i} {j}\n")
    return 0


def _pick_partition(inv, spec):
    g = inv.graph
    if spec is None or spec == "canonical":
        return inv.partition
    if spec == "discrete":
        return EdgePartition.discrete(g.edge_names)
    if spec == "coarse":
        return EdgePartition.coarse(g.edge_names)
    with open(spec, encoding="ascii") as fh:
        return parse_partition(fh.read())


def _cmd_colorings(args, out):
    inv = load(args.file)
    p = _pick_partition(inv, args.partition)
    cg = conflict_relation(inv.graph, p)
    by_id = p.by_id()
    for cid in cg.nodes:
        out.write(f"# {cid}: {' '.join(by_id[cid])}\n")
    for a, b in cg.sorted_conflicts():
        out.write(f"conflict {a} {b}\n")
    k, witness = minimal_coloring(cg)
    out.write(f"minimal_color_count: {k}\n")
    out.write(format_coloring(cg.nodes, witness))
    maximal = is_maximal_coloring(inv.graph, p, witness)
    out.write(f"maximal: {'true' if maximal else 'false'}\n")
    return 0


def _cmd_paths(args, out):
    g = load(args.file).graph
    paths = admissible_paths(g, args.start, args.end, args.max_len)
    out.write(f"# {len(paths)} composable paths\n")
    for p in paths:
        out.write("path " + " ".join(p) + "\n")
    return 0


def _cmd_dot(args, out):
    out.write(to_dot(load(args.file).graph))
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opgraph", description="Graph invariants of finite dynamical-system and edge-colored graph algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="system file -> graph file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("report", help="print the invariant report")
    p.add_argument("file")
    p.add_argument("--max-partition-edges", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("compare", help="decide whether two inputs have equal invariants")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--ignore-colors", action="store_true")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("partitions", help="topological partitions and their covering pairs")
    p.add_argument("file")
    p.add_argument("--max-partition-edges", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("colorings", help="conflicts and a minimal coloring")
    p.add_argument("file")
    p.add_argument("--partition", default=None,
                   help="'canonical' (default), 'discrete', 'coarse', or a partition text file")
    p.set_defaults(func=_cmd_colorings)

    p = sub.add_parser("paths", help="composable paths between two vertices")
    p.add_argument("file")
    p.add_argument("--from", dest="start", required=True)
    p.add_argument("--to", dest="end", required=True)
    p.add_argument("--max-len", type=int, required=True, help=f"at most {MAX_LEN}")
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("dot", help="Graphviz rendering")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dot)

    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"error: {exc}\n")
    except OSError as exc:
        err.write(f"error: {exc.filename}: {exc.strerror}\n")
    except (UsageError, GraphError, PartitionError, ColoringError, PathError, ValueError) as exc:
        err.write(f"error: {getattr(args, 'file', '')}: {exc}\n")
    return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
