"""Finite multivariable dynamical systems and the graph they generate.

System file::

    system semicrossed
    points 1 2 3 4
    map f 1->2 2->3 3->3 4->3
    map g 1->2 2->4 3->4 4->4

Every map must send each point somewhere exactly once.  Maps need not be
injective or surjective.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import ColoredDigraph, Edge, ParseError
from .partitions import EdgePartition

SYSTEM_CLASSES = ("tensor", "semicrossed")


@dataclass(frozen=True)
class DynamicalSystem:
    algebra_class: str
    points: tuple[str, ...]
    maps: tuple[tuple[str, dict], ...]

    def __post_init__(self):
        if self.algebra_class not in SYSTEM_CLASSES:
            raise ValueError(f"system class must be tensor or semicrossed, got {self.algebra_class!r}")
        pts = set(self.points)
        if len(pts) != len(self.points):
            raise ValueError("point listed twice")
        names = [name for name, _ in self.maps]
        if len(set(names)) != len(names):
            raise ValueError("duplicate map name")
        for name, fn in self.maps:
            if set(fn) != pts:
                raise ValueError(f"map {name!r} not total")
            bad = [y for y in fn.values() if y not in pts]
            if bad:
                raise ValueError(f"map {name!r} references unknown point {bad[0]!r}")

    # dict fields make the generated hash unusable
    __hash__ = None

    def relabel(self, sigma: dict) -> "DynamicalSystem":
        maps = tuple((name, {sigma[x]: sigma[y] for x, y in fn.items()}) for name, fn in self.maps)
        return DynamicalSystem(self.algebra_class, tuple(sigma[p] for p in self.points), maps)

    def image(self, name: str) -> set:
        return set(dict(self.maps)[name].values())


@dataclass(frozen=True)
class GeneratedGraph:
    graph: ColoredDigraph
    canonical_partition: EdgePartition


def parse_system(text: str, source: str | None = None) -> DynamicalSystem:
    def fail(cause, line=None):
        return ParseError(cause, line, source)

    header = points = None
    pset: set = set()
    maps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if fields[0] != "system" or len(fields) != 2:
                raise fail("expected header 'system <tensor|semicrossed>'", lineno)
            if fields[1] not in SYSTEM_CLASSES:
                raise fail(f"unknown system class {fields[1]!r}", lineno)
            header = fields[1]
        elif points is None:
            if fields[0] != "points" or len(fields) < 2:
                raise fail("expected 'points <p1> ... <pk>'", lineno)
            points = fields[1:]
            pset = set()
            for p in points:
                if p in pset:
                    raise fail(f"point listed twice: {p!r}", lineno)
                pset.add(p)
        else:
            if fields[0] != "map" or len(fields) < 2:
                raise fail("malformed line, expected 'map <name> <x>-><y> ...'", lineno)
            name = fields[1]
            if any(name == m for m, _ in maps):
                raise fail(f"duplicate map name {name!r}", lineno)
            fn = {}
            for pair in fields[2:]:
                x, arrow, y = pair.partition("->")
                if not arrow or not x or not y:
                    raise fail(f"malformed assignment {pair!r}", lineno)
                for p in (x, y):
                    if p not in pset:
                        raise fail(f"map {name!r} references unknown point {p!r}", lineno)
                if x in fn:
                    raise fail(f"map {name!r} assigns point {x!r} twice", lineno)
                fn[x] = y
            missing = [p for p in points if p not in fn]
            if missing:
                raise fail(f"map not total: {name!r} has no image for point {missing[0]!r}", lineno)
            maps.append((name, fn))
    if header is None or points is None:
        raise fail("missing 'system' header or 'points' line")
    return DynamicalSystem(header, tuple(points), tuple(maps))


def serialize_system(sys: DynamicalSystem) -> str:
    lines = [f"system {sys.algebra_class}", "points " + " ".join(sys.points)]
    for name, fn in sys.maps:
        lines.append(" ".join(["map", name] + [f"{x}->{fn[x]}" for x in sys.points]))
    return "\n".join(lines) + "\n"


def build_graph(sys: DynamicalSystem) -> GeneratedGraph:
    """One edge ``<map>@<point>`` per (map, point); color is the 1-based map index."""
    edges = []
    classes = []
    for i, (name, fn) in enumerate(sys.maps, 1):
        cls = []
        for x in sys.points:
            e = Edge(f"{name}@{x}", x, fn[x], i)
            edges.append(e)
            cls.append(e.name)
        if cls:
            classes.append((name, cls))
    g = ColoredDigraph(sys.points, tuple(edges), sys.algebra_class)
    part = EdgePartition.from_classes([c for _, c in classes], labels=[n for n, _ in classes])
    return GeneratedGraph(g, part)
