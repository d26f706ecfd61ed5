"""Loading input files and assembling the invariant report."""
from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_form, structural_invariants
from .colorings import conflict_relation, minimal_coloring
from .dynamics import DynamicalSystem, build_graph, parse_system
from .graph import ColoredDigraph, ParseError, color_classes, is_vertex_pair_finite, parse_graph
from .partitions import DEFAULT_CAP, EdgePartition, enumerate_topological_partitions, is_topological


@dataclass(frozen=True)
class Invariant:
    """A parsed input: its graph, the partition used for coloring, and the system if any."""

    graph: ColoredDigraph
    partition: EdgePartition
    system: DynamicalSystem | None = None


def sniff(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            return line.split()[0]
    return ""


def default_partition(g: ColoredDigraph) -> EdgePartition:
    """Group edges by stored color when that is topological, otherwise singletons.

    For a graph built from a system this reproduces the generator partition.
    """
    by_color = color_classes(g)
    p = EdgePartition.from_classes(list(by_color.values()))
    if is_topological(g, p):
        return p
    return EdgePartition.discrete(g.edge_names)


def load_text(text: str, source: str | None = None) -> Invariant:
    kind = sniff(text)
    if kind == "system":
        sys = parse_system(text, source)
        gg = build_graph(sys)
        return Invariant(gg.graph, gg.canonical_partition, sys)
    if kind == "graph":
        g = parse_graph(text, source)
        return Invariant(g, default_partition(g))
    raise ParseError("unrecognized file: expected a 'system' or 'graph' header", None, source)


def load(path: str) -> Invariant:
    with open(path, encoding="ascii") as fh:
        return load_text(fh.read(), path)


def coloring_fields(inv: Invariant) -> dict[str, object]:
    if inv.graph.algebra_class == "plain":
        return {"minimal_color_count": None, "one_colorable": None}
    cg = conflict_relation(inv.graph, inv.partition)
    return {"minimal_color_count": minimal_coloring(cg)[0], "one_colorable": not cg.conflicts}


def invariant_report(inv: Invariant, cap: int = DEFAULT_CAP) -> dict[str, object]:
    g = inv.graph
    _, max_mult = is_vertex_pair_finite(g)
    rep: dict[str, object] = {
        "algebra_class": g.algebra_class,
        "vertex_count": len(g.vertices),
        "edge_count": len(g.edges),
        "multiplicity_max": max_mult,
        "edge_free": True,
        "canonical_hash_plain": canonical_form(g, respect_colors=False).hex,
        "canonical_hash_colored": canonical_form(g, respect_colors=True).hex,
    }
    rep.update(coloring_fields(inv))
    if len(g.edges) <= cap:
        rep["topological_partition_count"] = len(enumerate_topological_partitions(g, cap))
    return rep


def _render(value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def format_report(rep: dict) -> str:
    return "".join(f"{k}: {_render(v)}\n" for k, v in rep.items())


def compare_invariants(a: Invariant, b: Invariant, respect_colors: bool = True):
    """First differing invariant as ``(name, value_a, value_b)``, or None when all agree."""
    for (name, x), (_, y) in zip(structural_invariants(a.graph), structural_invariants(b.graph)):
        if x != y:
            return name, x, y
    if respect_colors:
        ra = coloring_fields(a)
        rb = coloring_fields(b)
        for name in ra:
            if ra[name] != rb[name]:
                return name, ra[name], rb[name]
    key = "canonical_hash_colored" if respect_colors else "canonical_hash_plain"
    fa = canonical_form(a.graph, respect_colors)
    fb = canonical_form(b.graph, respect_colors)
    if fa.canonical_text != fb.canonical_text:
        return key, fa.hex, fb.hex
    return None
