"""Canonical labeling and equivalence of edge-colored digraphs.

Two graphs are equivalent when a vertex bijection, an edge bijection and a
palette bijection carry one onto the other.  Palette semantics depend on the
algebra class: tensor and plain graphs carry no coloring, so their stored
colors are erased before any comparison; semicrossed and colored graphs keep
theirs.  With ``respect_colors=False`` every graph is compared uncolored.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import permutations

from .graph import ColoredDigraph, Edge, degree_profile, multiplicity_profile, serialize_graph

FNV_OFFSET = 14695981039346656037
FNV_PRIME = 1099511628211
MASK64 = 0xFFFFFFFFFFFFFFFF

BRUTE_FORCE_MAX_VERTICES = 8


def fnv1a_64(data: bytes) -> int:
    h = FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * FNV_PRIME) & MASK64
    return h


def effective_colors(g: ColoredDigraph, respect_colors: bool = True) -> dict[str, int]:
    if not respect_colors or g.algebra_class in ("tensor", "plain"):
        return {e.name: 1 for e in g.edges}
    return {e.name: e.color for e in g.edges}


@dataclass(frozen=True)
class CanonicalForm:
    canonical_text: str
    hash: int

    @property
    def hex(self) -> str:
        return f"{self.hash:016x}"


@dataclass
class _Labeling:
    order: list[str]              # vertex at canonical position i
    edges: tuple                  # canonical sorted (s, r, c) triples
    edge_key: dict[str, tuple]    # original edge -> its (s, r, c) triple
    palette: dict[int, int]       # effective color -> canonical color


def _refine(cells, out_adj, in_adj):
    """Equitable refinement of an ordered partition; cell order stays canonical."""
    while True:
        cell_of = {v: i for i, c in enumerate(cells) for v in c}
        new = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {}
            for v in c:
                sig[v] = (
                    tuple(sorted(Counter(cell_of[w] for w in out_adj[v]).items())),
                    tuple(sorted(Counter(cell_of[w] for w in in_adj[v]).items())),
                )
            groups = defaultdict(list)
            for v in c:
                groups[sig[v]].append(v)
            new.extend(groups[s] for s in sorted(groups))
        if len(new) == len(cells):
            return new
        cells = new


def _encode(g, col, order) -> _Labeling:
    idx = {v: i for i, v in enumerate(order)}
    by_color = defaultdict(list)
    for e in g.edges:
        by_color[col[e.name]].append((idx[e.source], idx[e.range]))
    # palette-independent first numbering: colors ranked by their sorted edge lists
    ranked = sorted(by_color, key=lambda c: sorted(by_color[c]))
    first = {c: i for i, c in enumerate(ranked, 1)}
    prelim = sorted((idx[e.source], idx[e.range], first[col[e.name]]) for e in g.edges)
    renum: dict[int, int] = {}
    for _, _, c in prelim:
        renum.setdefault(c, len(renum) + 1)
    palette = {c: renum[first[c]] for c in by_color}
    edge_key = {e.name: (idx[e.source], idx[e.range], palette[col[e.name]]) for e in g.edges}
    return _Labeling(list(order), tuple(sorted(edge_key.values())), edge_key, palette)


def _best_labeling(g: ColoredDigraph, respect_colors: bool) -> _Labeling:
    col = effective_colors(g, respect_colors)
    out_adj = {v: [] for v in g.vertices}
    in_adj = {v: [] for v in g.vertices}
    for e in g.edges:
        out_adj[e.source].append(e.range)
        in_adj[e.range].append(e.source)

    def key(v):
        outs = g.out_edges(v)
        ins = g.in_edges(v)
        return (
            len(outs), len(ins), sum(e.range == v for e in outs),
            tuple(sorted(Counter(col[e.name] for e in outs).values())),
            tuple(sorted(Counter(col[e.name] for e in ins).values())),
        )

    groups = defaultdict(list)
    for v in g.vertices:
        groups[key(v)].append(v)
    start = _refine([groups[k] for k in sorted(groups)], out_adj, in_adj)

    best = None

    def search(cells):
        nonlocal best
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            lab = _encode(g, col, [c[0] for c in cells])
            if best is None or lab.edges < best.edges:
                best = lab
            return
        for v in cells[target]:
            rest = [w for w in cells[target] if w != v]
            search(_refine(cells[:target] + [[v], rest] + cells[target + 1:], out_adj, in_adj))

    search(start)
    return best


def _canonical_graph(g: ColoredDigraph, lab: _Labeling, respect_colors: bool) -> ColoredDigraph:
    k = len(lab.order)
    vnames = [f"v{i}" for i in range(1, k + 1)]
    edges = tuple(Edge(f"e{i}", vnames[s], vnames[r], c) for i, (s, r, c) in enumerate(lab.edges, 1))
    return ColoredDigraph(tuple(vnames), edges, "colored" if respect_colors else "plain")


def _form(g, lab, respect_colors) -> CanonicalForm:
    text = serialize_graph(_canonical_graph(g, lab, respect_colors))
    return CanonicalForm(text, fnv1a_64(text.encode("utf-8")))


def canonical_form(g: ColoredDigraph, respect_colors: bool = True) -> CanonicalForm:
    return _form(g, _best_labeling(g, respect_colors), respect_colors)


@dataclass(frozen=True)
class Witness:
    vertex_map: dict
    edge_map: dict
    palette: dict  # effective color of g1 -> effective color of g2


@dataclass(frozen=True)
class Verdict:
    equivalent: bool
    invariant: str | None = None      # first differing invariant when distinguished
    values: tuple | None = None
    witness: Witness | None = None

    @property
    def label(self) -> str:
        return "EQUIVALENT" if self.equivalent else "DISTINGUISHED"


def structural_invariants(g: ColoredDigraph) -> list[tuple[str, object]]:
    return [
        ("vertex_count", len(g.vertices)),
        ("edge_count", len(g.edges)),
        ("degree_profile", degree_profile(g)),
        ("multiplicity_profile", multiplicity_profile(g)),
    ]


def are_equivalent(g1: ColoredDigraph, g2: ColoredDigraph, respect_colors: bool = True) -> Verdict:
    for (name, a), (_, b) in zip(structural_invariants(g1), structural_invariants(g2)):
        if a != b:
            return Verdict(False, name, (a, b))
    l1 = _best_labeling(g1, respect_colors)
    l2 = _best_labeling(g2, respect_colors)
    c1 = _form(g1, l1, respect_colors)
    c2 = _form(g2, l2, respect_colors)
    if c1.canonical_text != c2.canonical_text:
        return Verdict(False, "canonical_hash", (c1.hex, c2.hex))
    vmap = dict(zip(l1.order, l2.order))
    pool = defaultdict(list)
    for e in g2.edges:
        pool[l2.edge_key[e.name]].append(e.name)
    emap = {e.name: pool[l1.edge_key[e.name]].pop(0) for e in g1.edges}
    back = {c: orig for orig, c in l2.palette.items()}
    palette = {orig: back[c] for orig, c in l1.palette.items()}
    return Verdict(True, witness=Witness(vmap, emap, palette))


def apply_witness(g1: ColoredDigraph, g2: ColoredDigraph, w: Witness, respect_colors: bool = True) -> bool:
    """Check that ``w`` carries g1 edge-exactly onto g2."""
    col1 = effective_colors(g1, respect_colors)
    col2 = effective_colors(g2, respect_colors)
    if sorted(w.vertex_map) != sorted(g1.vertices) or sorted(w.vertex_map.values()) != sorted(g2.vertices):
        return False
    if sorted(w.edge_map) != sorted(g1.edge_names) or sorted(w.edge_map.values()) != sorted(g2.edge_names):
        return False
    if len(set(w.palette.values())) != len(w.palette):
        return False
    for e in g1.edges:
        f = g2.edge(w.edge_map[e.name])
        if (w.vertex_map[e.source], w.vertex_map[e.range]) != (f.source, f.range):
            return False
        if w.palette.get(col1[e.name]) != col2[f.name]:
            return False
    return True


def brute_force_iso(g1: ColoredDigraph, g2: ColoredDigraph, respect_colors: bool = True) -> Witness | None:
    """Exhaustive search over vertex bijections and palette bijections."""
    if max(len(g1.vertices), len(g2.vertices)) > BRUTE_FORCE_MAX_VERTICES:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_MAX_VERTICES} vertices")
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None
    col1 = effective_colors(g1, respect_colors)
    col2 = effective_colors(g2, respect_colors)
    pal1 = sorted(set(col1.values()))
    pal2 = sorted(set(col2.values()))
    if len(pal1) != len(pal2):
        return None
    target_plain = Counter((e.source, e.range) for e in g2.edges)
    target = Counter((e.source, e.range, col2[e.name]) for e in g2.edges)
    for image in permutations(g2.vertices):
        sigma = dict(zip(g1.vertices, image))
        if Counter((sigma[e.source], sigma[e.range]) for e in g1.edges) != target_plain:
            continue
        for pimage in permutations(pal2):
            pi = dict(zip(pal1, pimage))
            if Counter((sigma[e.source], sigma[e.range], pi[col1[e.name]]) for e in g1.edges) == target:
                pool = defaultdict(list)
                for e in g2.edges:
                    pool[e.source, e.range, col2[e.name]].append(e.name)
                emap = {e.name: pool[sigma[e.source], sigma[e.range], pi[col1[e.name]]].pop()
                        for e in g1.edges}
                return Witness(sigma, emap, pi)
    return None
