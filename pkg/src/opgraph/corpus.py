"""Seeded random instances for property checks and demos."""
from __future__ import annotations

import random

from .dynamics import DynamicalSystem
from .graph import ColoredDigraph, Edge


def random_graph(rng: random.Random, max_vertices: int = 6, max_edges: int = 10,
                 max_colors: int = 3, algebra_class: str = "colored") -> ColoredDigraph:
    k = rng.randint(1, max_vertices)
    vertices = [f"x{i}" for i in range(k)]
    m = rng.randint(0, max_edges)
    ncol = rng.randint(1, max_colors)
    edges = [
        Edge(f"a{i}", rng.choice(vertices), rng.choice(vertices), rng.randint(1, ncol))
        for i in range(m)
    ]
    return ColoredDigraph(tuple(vertices), tuple(edges), algebra_class)


def random_relabeling(rng: random.Random, g: ColoredDigraph, prefix: str = "y"):
    """A random vertex bijection onto fresh names, applied; also returns the bijection."""
    images = [f"{prefix}{i}" for i in range(len(g.vertices))]
    rng.shuffle(images)
    sigma = dict(zip(g.vertices, images))
    return g.relabel(sigma), sigma


def random_system(rng: random.Random, algebra_class: str, max_points: int = 6,
                  max_maps: int = 3) -> DynamicalSystem:
    n = rng.randint(1, max_points)
    points = tuple(str(i) for i in range(1, n + 1))
    maps = []
    for i in range(rng.randint(1, max_maps)):
        maps.append((f"m{i + 1}", {x: rng.choice(points) for x in points}))
    return DynamicalSystem(algebra_class, points, tuple(maps))
