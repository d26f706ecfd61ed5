"""Conflict graphs on partition classes and coloring functions over them.

Two distinct classes conflict when they hold edges with a common range and
the algebra class says such a pair is forced apart:

* ``tensor``: never (generators have orthogonal ranges already);
* ``semicrossed``: always;
* ``colored``: when the two edges carry different stored colors;
* ``plain``: no coloring semantics, refused.

A coloring function is a plain ``dict`` from class id to a positive integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import ColoredDigraph
from .partitions import EdgePartition, is_topological


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class ConflictGraph:
    nodes: tuple[str, ...]
    conflicts: frozenset  # of sorted 2-tuples of node ids

    def __post_init__(self):
        known = set(self.nodes)
        for a, b in self.conflicts:
            if a == b:
                raise ColoringError(f"self-conflict on {a!r}")
            if a not in known or b not in known:
                raise ColoringError(f"conflict names unknown class in {(a, b)!r}")

    @classmethod
    def build(cls, nodes, pairs) -> "ConflictGraph":
        return cls(tuple(nodes), frozenset(tuple(sorted(p)) for p in pairs))

    def adjacency(self) -> dict[str, set]:
        adj = {v: set() for v in self.nodes}
        for a, b in self.conflicts:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def sorted_conflicts(self) -> list[tuple[str, str]]:
        pos = {v: i for i, v in enumerate(self.nodes)}
        return sorted(self.conflicts, key=lambda ab: sorted((pos[ab[0]], pos[ab[1]])))


def _graph(gg) -> ColoredDigraph:
    return getattr(gg, "graph", gg)


def _range_meetings(g: ColoredDigraph, p: EdgePartition):
    """Yield (class id a, class id b, edge a, edge b) for edges in distinct classes with a common range."""
    ids = p.class_ids
    by_range: dict[str, list] = {}
    for cid, cls in zip(ids, p.classes):
        for name in cls:
            e = g.edge(name)
            by_range.setdefault(e.range, []).append((cid, e))
    for entries in by_range.values():
        for (ca, ea), (cb, eb) in combinations(entries, 2):
            if ca != cb:
                yield ca, cb, ea, eb


def conflict_relation(gg, p: EdgePartition) -> ConflictGraph:
    g = _graph(gg)
    if g.algebra_class == "plain":
        raise ColoringError("coloring semantics undefined for plain graphs")
    if not is_topological(g, p):
        raise ColoringError("partition is not topological for this graph")
    pairs = set()
    if g.algebra_class != "tensor":
        for ca, cb, ea, eb in _range_meetings(g, p):
            if g.algebra_class == "semicrossed" or ea.color != eb.color:
                pairs.add((ca, cb))
    return ConflictGraph.build(p.class_ids, pairs)


def _require_total(nodes, f) -> None:
    missing = [v for v in nodes if v not in f]
    if missing:
        raise ColoringError(f"coloring misses class {missing[0]!r}")
    bad = [v for v in nodes if not isinstance(f[v], int) or f[v] < 1]
    if bad:
        raise ColoringError(f"class {bad[0]!r} has non-positive color")


def is_valid_coloring(cg: ConflictGraph, f: dict) -> bool:
    _require_total(cg.nodes, f)
    return all(f[a] != f[b] for a, b in cg.conflicts)


def _greedy_count(nodes, adj) -> int:
    color = {}
    for v in sorted(nodes, key=lambda v: -len(adj[v])):
        used = {color[u] for u in adj[v] if u in color}
        color[v] = next(c for c in range(1, len(nodes) + 1) if c not in used)
    return max(color.values(), default=0)


def _greedy_clique(nodes, adj) -> int:
    best = 0
    for start in nodes:
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(sorted(cand), key=lambda u: len(adj[u] & cand))
            clique.append(v)
            cand &= adj[v]
        best = max(best, len(clique))
    return best


def _lex_least(nodes, adj, k):
    """Lexicographically least coloring with colors 1..k in node order, or None."""
    pos = {v: i for i, v in enumerate(nodes)}
    earlier = [[pos[u] for u in adj[v] if pos[u] < i] for i, v in enumerate(nodes)]
    col = [0] * len(nodes)

    def rec(i, top):
        if i == len(nodes):
            return True
        blocked = {col[j] for j in earlier[i]}
        # the least witness never opens color top+2 before using top+1
        for c in range(1, min(k, top + 1) + 1):
            if c in blocked:
                continue
            col[i] = c
            if rec(i + 1, max(top, c)):
                return True
        return False

    return dict(zip(nodes, col)) if rec(0, 0) else None


def minimal_coloring(cg: ConflictGraph) -> tuple[int, dict]:
    """Chromatic number of the conflict graph and its lexicographically least witness."""
    nodes = list(cg.nodes)
    if not nodes:
        return 0, {}
    adj = cg.adjacency()
    lo = max(1, _greedy_clique(nodes, adj))
    hi = _greedy_count(nodes, adj)
    for k in range(lo, hi + 1):
        witness = _lex_least(nodes, adj, k)
        if witness is not None:
            return k, witness
    raise AssertionError("greedy upper bound was not attained")  # pragma: no cover


def is_one_colorable(gg, p: EdgePartition) -> bool:
    return not conflict_relation(gg, p).conflicts


def coloring_leq(f: dict, g: dict) -> bool:
    """``f <= g`` iff some permutation of the classes makes g dominate f pointwise."""
    if set(f) != set(g):
        raise ColoringError("colorings are over different class sets")
    return all(a <= b for a, b in zip(sorted(f.values()), sorted(g.values())))


def common_range_pairs(gg, p: EdgePartition) -> set[tuple[str, str]]:
    g = _graph(gg)
    return {tuple(sorted((ca, cb))) for ca, cb, _, _ in _range_meetings(g, p)}


def is_maximal_coloring(gg, p: EdgePartition, f: dict) -> bool:
    """Distinct colors on every pair of classes meeting at a common range, whatever the algebra class."""
    _require_total(p.class_ids, f)
    return all(f[a] != f[b] for a, b in common_range_pairs(gg, p))


def format_coloring(nodes, f: dict) -> str:
    return "".join(f"color {v} {f[v]}\n" for v in nodes)


def parse_coloring(text: str) -> dict:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] != "color" or len(fields) != 3:
            raise ColoringError(f"line {lineno}: expected 'color <class-id> <positive-int>'")
        try:
            value = int(fields[2])
        except ValueError:
            raise ColoringError(f"line {lineno}: color {fields[2]!r} is not an integer") from None
        if value < 1:
            raise ColoringError(f"line {lineno}: non-positive color")
        out[fields[1]] = value
    return out
