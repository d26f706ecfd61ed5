"""Edge-colored directed multigraphs: the graph file format and elementary invariants.

A graph file looks like::

    graph semicrossed
    vertices 1 2 3 4
    edge f@1 1 2 1
    edge g@1 1 2 2

Each ``edge`` line is ``edge <name> <source> <range> <color>``.  Lines starting
with ``#`` and blank lines are ignored.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

ALGEBRA_CLASSES = ("tensor", "semicrossed", "colored", "plain")


class ParseError(ValueError):
    """Malformed or invalid input text.  ``line`` is 1-based, or None."""

    def __init__(self, cause: str, line: int | None = None, source: str | None = None):
        self.cause = cause
        self.line = line
        self.source = source
        super().__init__(self._render())

    def _render(self) -> str:
        where = self.source or "<input>"
        if self.line is not None:
            where = f"{where}:{self.line}"
        return f"{where}: {self.cause}"

    def with_source(self, source: str) -> "ParseError":
        return ParseError(self.cause, self.line, source)


class GraphError(ValueError):
    pass


def _check_token(tok: str, what: str) -> None:
    if not tok or not tok.isascii() or any(c.isspace() for c in tok):
        raise GraphError(f"invalid {what} name {tok!r}")


@dataclass(frozen=True)
class Edge:
    name: str
    source: str
    range: str
    color: int = 1


@dataclass(frozen=True)
class ColoredDigraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    algebra_class: str = "plain"
    _edge_index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.algebra_class not in ALGEBRA_CLASSES:
            raise GraphError(f"unknown algebra class {self.algebra_class!r}")
        seen = set()
        for v in self.vertices:
            _check_token(v, "vertex")
            if v in seen:
                raise GraphError(f"duplicate vertex {v!r}")
            seen.add(v)
        index = {}
        for e in self.edges:
            _check_token(e.name, "edge")
            if e.name in index:
                raise GraphError(f"duplicate edge {e.name!r}")
            for end in (e.source, e.range):
                if end not in seen:
                    raise GraphError(f"unknown vertex {end!r} in edge {e.name!r}")
            if isinstance(e.color, bool) or not isinstance(e.color, int) or e.color < 1:
                raise GraphError(f"non-positive color {e.color!r} on edge {e.name!r}")
            index[e.name] = e
        object.__setattr__(self, "_edge_index", index)

    def edge(self, name: str) -> Edge:
        try:
            return self._edge_index[name]
        except KeyError:
            raise GraphError(f"unknown edge {name!r}") from None

    def has_edge(self, name: str) -> bool:
        return name in self._edge_index

    @property
    def edge_names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self.edges)

    def out_edges(self, v: str) -> list[Edge]:
        return [e for e in self.edges if e.source == v]

    def in_edges(self, v: str) -> list[Edge]:
        return [e for e in self.edges if e.range == v]

    def normalized(self) -> "ColoredDigraph":
        """Same graph with vertices and edges sorted by name."""
        return ColoredDigraph(
            tuple(sorted(self.vertices)),
            tuple(sorted(self.edges, key=lambda e: e.name)),
            self.algebra_class,
        )

    def relabel(self, vertex_map: Mapping[str, str], edge_map: Mapping[str, str] | None = None,
                color_map: Mapping[int, int] | None = None) -> "ColoredDigraph":
        """Apply a vertex bijection (and optionally edge renaming / palette map)."""
        edge_map = edge_map or {}
        color_map = color_map or {}
        edges = tuple(
            Edge(edge_map.get(e.name, e.name), vertex_map[e.source], vertex_map[e.range],
                 color_map.get(e.color, e.color))
            for e in self.edges
        )
        return ColoredDigraph(tuple(vertex_map[v] for v in self.vertices), edges, self.algebra_class)

    def with_class(self, algebra_class: str) -> "ColoredDigraph":
        return ColoredDigraph(self.vertices, self.edges, algebra_class)


def _strip(line: str) -> str:
    return line.strip()


def parse_graph(text: str, source: str | None = None) -> ColoredDigraph:
    header = None
    vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        try:
            if header is None:
                if kind != "graph" or len(fields) != 2:
                    raise ParseError("expected header 'graph <tensor|semicrossed|colored|plain>'", lineno)
                if fields[1] not in ALGEBRA_CLASSES:
                    raise ParseError(f"unknown algebra class {fields[1]!r}", lineno)
                header = fields[1]
            elif vertices is None:
                if kind != "vertices" or len(fields) < 2:
                    raise ParseError("expected 'vertices <v1> ... <vk>'", lineno)
                vertices = fields[1:]
                dup = [v for v, n in Counter(vertices).items() if n > 1]
                if dup:
                    raise ParseError(f"duplicate vertex {dup[0]!r}", lineno)
                vset = set(vertices)
            else:
                if kind != "edge" or len(fields) != 5:
                    raise ParseError("malformed line, expected 'edge <name> <source> <range> <color>'", lineno)
                _, name, src, rng, col = fields
                for end in (src, rng):
                    if end not in vset:
                        raise ParseError(f"unknown vertex {end!r}", lineno)
                if any(e.name == name for e in edges):
                    raise ParseError(f"duplicate edge {name!r}", lineno)
                try:
                    color = int(col)
                except ValueError:
                    raise ParseError(f"color {col!r} is not an integer", lineno) from None
                if color < 1:
                    raise ParseError(f"non-positive color {color}", lineno)
                edges.append(Edge(name, src, rng, color))
        except ParseError as exc:
            raise exc.with_source(source) if source else exc
    if header is None or vertices is None:
        raise ParseError("missing 'graph' header or 'vertices' line", None, source)
    try:
        return ColoredDigraph(tuple(vertices), tuple(edges), header)
    except GraphError as exc:
        raise ParseError(str(exc), None, source) from None


def serialize_graph(g: ColoredDigraph) -> str:
    """Normalized text: vertices and edges sorted by name, LF line endings."""
    n = g.normalized()
    lines = [f"graph {n.algebra_class}", "vertices " + " ".join(n.vertices)]
    lines += [f"edge {e.name} {e.source} {e.range} {e.color}" for e in n.edges]
    return "\n".join(lines) + "\n"


def normalize_text(text: str) -> str:
    return serialize_graph(parse_graph(text))


def multiplicity(g: ColoredDigraph) -> dict[tuple[str, str], int]:
    """Table keyed by (range, source); every ordered vertex pair is present."""
    table = {(w, v): 0 for w in g.vertices for v in g.vertices}
    for e in g.edges:
        table[e.range, e.source] += 1
    return table


def is_vertex_pair_finite(g: ColoredDigraph) -> tuple[bool, int]:
    # Finite graphs always are; the interesting output is the largest multiplicity.
    return True, max(multiplicity(g).values(), default=0)


def degree_profile(g: ColoredDigraph) -> list[tuple[int, int]]:
    """Sorted (out-degree, in-degree) pairs, one per vertex."""
    out = Counter(e.source for e in g.edges)
    inn = Counter(e.range for e in g.edges)
    return sorted((out[v], inn[v]) for v in g.vertices)


def multiplicity_profile(g: ColoredDigraph) -> list[int]:
    return sorted(multiplicity(g).values())


def color_classes(g: ColoredDigraph) -> dict[int, list[str]]:
    out: dict[int, list[str]] = {}
    for e in g.edges:
        out.setdefault(e.color, []).append(e.name)
    return out


def make_graph(vertices: Iterable[str], edges: Iterable[tuple], algebra_class: str = "plain") -> ColoredDigraph:
    """Shorthand: ``edges`` are ``(name, source, range[, color])`` tuples."""
    return ColoredDigraph(tuple(vertices), tuple(Edge(*e) for e in edges), algebra_class)
