"""Composable edge sequences.

A path is listed in application order ``[e1, e2, ..., en]``: ``e1`` is taken
first, so the path runs from ``source(e1)`` to ``range(en)`` and needs
``source(e_{k+1}) == range(e_k)`` throughout.
"""
from __future__ import annotations

import numpy as np

from .graph import ColoredDigraph

MAX_LEN = 16


class PathError(ValueError):
    pass


def is_admissible(g: ColoredDigraph, seq) -> bool:
    seq = list(seq)
    if not seq:
        raise PathError("empty edge sequence")
    for name in seq:
        if not g.has_edge(name):
            raise PathError(f"unknown edge {name!r}")
    edges = [g.edge(n) for n in seq]
    return all(b.source == a.range for a, b in zip(edges, edges[1:]))


def admissible_paths(g: ColoredDigraph, start: str, end: str, max_len: int) -> list[tuple[str, ...]]:
    """All composable paths start -> end of length 1..max_len, sorted by edge-name tuple."""
    for v in (start, end):
        if v not in g.vertices:
            raise PathError(f"unknown vertex {v!r}")
    if not 1 <= max_len <= MAX_LEN:
        raise PathError(f"max_len must be between 1 and {MAX_LEN}")
    out_edges = {v: [] for v in g.vertices}
    for e in g.edges:
        out_edges[e.source].append(e)

    found = []
    prefix: list[str] = []

    def walk(v, depth):
        for e in out_edges[v]:
            prefix.append(e.name)
            if e.range == end:
                found.append(tuple(prefix))
            if depth + 1 < max_len:
                walk(e.range, depth + 1)
            prefix.pop()

    walk(start, 0)
    return sorted(found)


def path_count_matrices(g: ColoredDigraph, max_len: int) -> list[np.ndarray]:
    """``M[L-1][i, j]`` counts paths of length L from vertex i to vertex j (vertex order of g)."""
    idx = {v: i for i, v in enumerate(g.vertices)}
    a = np.zeros((len(idx), len(idx)), dtype=np.int64)
    for e in g.edges:
        a[idx[e.source], idx[e.range]] += 1
    mats = []
    m = np.eye(len(idx), dtype=np.int64)
    for _ in range(max_len):
        m = m @ a
        mats.append(m)
    return mats


def path_count_profile(g: ColoredDigraph, max_len: int) -> dict[tuple[str, str, int], int]:
    mats = path_count_matrices(g, max_len)
    return {
        (v, w, L): int(mats[L - 1][i, j])
        for L in range(1, max_len + 1)
        for i, v in enumerate(g.vertices)
        for j, w in enumerate(g.vertices)
    }
