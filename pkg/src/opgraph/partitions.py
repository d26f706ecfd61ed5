"""Topological partitions of an edge set and their refinement order.

Terminology used throughout: the *discrete* partition has one class per edge
and is the largest element of the order; a *coarse* partition has a single
class and, when it is topological, is the smallest.  ``p1 <= p2`` means that
``p2`` refines ``p1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Sequence

DEFAULT_CAP = 10


class PartitionError(ValueError):
    pass


class UnknownEdgeError(PartitionError):
    pass


class DuplicateEdgeError(PartitionError):
    pass


class CapExceeded(PartitionError):
    pass


@dataclass(frozen=True)
class EdgePartition:
    """Normalized partition: edges sorted in each class, classes by least edge."""

    classes: tuple[tuple[str, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @classmethod
    def from_classes(cls, classes, labels=None) -> "EdgePartition":
        raw = [tuple(sorted(c)) for c in classes]
        if any(not c for c in raw):
            raise PartitionError("empty class")
        order = sorted(range(len(raw)), key=lambda i: raw[i])
        lab = None
        if labels is not None:
            labels = list(labels)
            if len(labels) != len(raw) or len(set(labels)) != len(labels):
                raise PartitionError("labels must be distinct, one per class")
            lab = tuple(labels[i] for i in order)
        return cls(tuple(raw[i] for i in order), lab)

    @classmethod
    def discrete(cls, edges) -> "EdgePartition":
        return cls.from_classes([[e] for e in edges])

    @classmethod
    def coarse(cls, edges) -> "EdgePartition":
        edges = list(edges)
        return cls.from_classes([edges] if edges else [])

    @property
    def class_ids(self) -> tuple[str, ...]:
        if self.labels is not None:
            return self.labels
        return tuple(f"c{i}" for i in range(1, len(self.classes) + 1))

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(e for c in self.classes for e in c)

    @cached_property
    def _where(self) -> dict[str, int]:
        return {e: i for i, c in enumerate(self.classes) for e in c}

    def block_of(self) -> dict[str, int]:
        return dict(self._where)

    def by_id(self) -> dict[str, tuple[str, ...]]:
        return dict(zip(self.class_ids, self.classes))

    def rename_edges(self, edge_map) -> "EdgePartition":
        return EdgePartition.from_classes([[edge_map[e] for e in c] for c in self.classes], self.labels)

    def __len__(self):
        return len(self.classes)

    def __str__(self):
        return format_partition(self)


def format_partition(p: EdgePartition) -> str:
    return "".join("class " + " ".join(c) + "\n" for c in p.classes)


def parse_partition(text: str) -> EdgePartition:
    classes = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] != "class" or len(fields) < 2:
            raise PartitionError(f"line {lineno}: expected 'class <edge> ...'")
        classes.append(fields[1:])
    return EdgePartition.from_classes(classes)


def _check_names(g, p: EdgePartition) -> None:
    seen = set()
    for c in p.classes:
        for e in c:
            if not g.has_edge(e):
                raise UnknownEdgeError(f"unknown edge {e!r}")
            if e in seen:
                raise DuplicateEdgeError(f"edge {e!r} appears in more than one class")
            seen.add(e)


def is_topological(g, p: EdgePartition) -> bool:
    """Coverage plus distinct sources inside every class.

    Unknown or repeated edge names raise; an incomplete cover returns False.
    """
    _check_names(g, p)
    if len(p.edges) != len(g.edges):
        return False
    for c in p.classes:
        sources = [g.edge(e).source for e in c]
        if len(set(sources)) != len(sources):
            return False
    return True


def enumerate_topological_partitions(g, cap: int = DEFAULT_CAP) -> list[EdgePartition]:
    """All topological partitions in restricted-growth-string order over the name-sorted edges."""
    if len(g.edges) > cap:
        raise CapExceeded(
            f"{len(g.edges)} edges exceeds the enumeration cap of {cap}; "
            f"raise it with --max-partition-edges"
        )
    names = sorted(g.edge_names)
    src = [g.edge(e).source for e in names]
    shared = frozenset(names)
    # sources already present in each block of the current prefix
    block_sources: list[set] = []

    out = []
    n = len(names)
    a = [0] * n

    def rec(i):
        if i == n:
            p = EdgePartition.from_classes(_rgs_blocks(names, a))
            p.__dict__["edges"] = shared  # one edge set object makes comparisons cheap
            out.append(p)
            return
        for b in range(len(block_sources) + 1):
            if b == len(block_sources):
                block_sources.append({src[i]})
                a[i] = b
                rec(i + 1)
                block_sources.pop()
            elif src[i] not in block_sources[b]:
                block_sources[b].add(src[i])
                a[i] = b
                rec(i + 1)
                block_sources[b].discard(src[i])

    rec(0)
    return out


def _rgs_blocks(names, a):
    blocks: list[list[str]] = []
    for name, b in zip(names, a):
        if b == len(blocks):
            blocks.append([])
        blocks[b].append(name)
    return blocks


def partition_leq(p1: EdgePartition, p2: EdgePartition) -> bool:
    """True when every class of p2 sits inside a class of p1."""
    if p1.edges is not p2.edges and p1.edges != p2.edges:
        raise PartitionError("partitions are over different edge sets")
    where = p1._where
    for c in p2.classes:
        b = where[c[0]]
        if any(where[e] != b for e in c[1:]):
            return False
    return True


def _lt(p, q) -> bool:
    return p != q and partition_leq(p, q)


def poset_extremes(ps: Sequence[EdgePartition]) -> tuple[list[EdgePartition], list[EdgePartition]]:
    ps = list(ps)
    minimal = [p for p in ps if not any(_lt(q, p) for q in ps)]
    maximal = [p for p in ps if not any(_lt(p, q) for q in ps)]
    return minimal, maximal


def _splits(p: EdgePartition):
    """Partitions obtained by splitting one class of p into two nonempty parts."""
    for i, c in enumerate(p.classes):
        if len(c) < 2:
            continue
        first, rest = c[0], c[1:]
        # subsets of rest joined to `first`, excluding the full class
        for r in range(len(rest)):
            for keep in combinations(rest, r):
                left = (first,) + keep
                right = tuple(e for e in rest if e not in keep)
                yield EdgePartition.from_classes(p.classes[:i] + (left, right) + p.classes[i + 1:])


def hasse_edges(ps: Sequence[EdgePartition]) -> list[tuple[int, int]]:
    """Covering pairs ``(i, j)`` with ``ps[i] < ps[j]`` and nothing of ``ps`` strictly between.

    Lists closed under splitting a class (every enumeration of topological
    partitions is) are handled through single splits; other lists fall back
    to pairwise comparison.
    """
    ps = list(ps)
    index = {p.classes: i for i, p in enumerate(ps)}
    pairs = []
    closed = True
    for i, p in enumerate(ps):
        for q in _splits(p):
            j = index.get(q.classes)
            if j is None:
                closed = False
                break
            pairs.append((i, j))
        if not closed:
            break
    if closed:
        return sorted(set(pairs))
    return _hasse_pairwise(ps)


def _hasse_pairwise(ps):
    n = len(ps)
    below = [[i for i in range(n) if _lt(ps[i], ps[j])] for j in range(n)]
    pairs = []
    for j in range(n):
        # covers of j are the maximal elements of its down-set; scan finer candidates first
        cand = sorted(below[j], key=lambda i: -len(ps[i]))
        covers: list[int] = []
        for i in cand:
            if not any(_lt(ps[i], ps[c]) for c in covers):
                covers.append(i)
        pairs.extend((i, j) for i in covers)
    return sorted(pairs)
