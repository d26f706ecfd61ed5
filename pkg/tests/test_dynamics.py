import random

import pytest
from hypothesis import given, settings, strategies as st

from opgraph.canon import canonical_form
from opgraph.corpus import random_system
from opgraph.dynamics import build_graph, parse_system, serialize_system
from opgraph.graph import ParseError, multiplicity
from opgraph.partitions import is_topological

from conftest import read


def test_parse_four_point_system():
    sys = parse_system(read("four_point_semicrossed.sys"))
    assert len(sys.points) == 4 and len(sys.maps) == 2
    assert sys.image("f") == {"2", "3"}
    assert sys.image("g") == {"2", "4"}


def test_parse_identity_system():
    sys = parse_system(read("three_loops.sys"))
    assert len(sys.points) == 3
    name, fn = sys.maps[0]
    assert all(fn[x] == x for x in sys.points)


@pytest.mark.parametrize("text, cause", [
    ("system tensor\npoints 1 2 3\nmap f 1->1 2->2\n", "map not total"),
    ("system tensor\npoints 1 2 2\n", "point listed twice"),
    ("system tensor\npoints 1 2\nmap f 1->3 2->2\n", "unknown point"),
    ("system tensor\npoints 1\nmap f 1->1\nmap f 1->1\n", "duplicate map name"),
    ("system tensor\npoints 1\nmap f 1-1\n", "malformed"),
    ("system other\npoints 1\n", "unknown system class"),
    ("system tensor\npoints 1 2\nmap f 1->1 1->2 2->2\n", "twice"),
])
def test_parse_errors(text, cause):
    with pytest.raises(ParseError, match=cause):
        parse_system(text)


def test_build_four_point_graph(four_point_semicrossed):
    g = four_point_semicrossed.graph
    assert len(g.vertices) == 4 and len(g.edges) == 8
    from_1 = [e for e in g.edges if e.source == "1"]
    assert sorted(e.range for e in from_1) == ["2", "2"]
    at_3 = {(e.name, e.range) for e in g.edges if e.source == "3"}
    assert at_3 == {("f@3", "3"), ("g@3", "4")}
    at_4 = {(e.name, e.range) for e in g.edges if e.source == "4"}
    assert at_4 == {("g@4", "4"), ("f@4", "3")}
    assert g.edge("f@2").color == 1 and g.edge("g@2").color == 2


def test_canonical_partition(four_point_semicrossed):
    p = four_point_semicrossed.canonical_partition
    assert p.by_id() == {"f": ("f@1", "f@2", "f@3", "f@4"), "g": ("g@1", "g@2", "g@3", "g@4")}
    assert is_topological(four_point_semicrossed.graph, p)


def test_identity_system_loops(three_loops):
    g = three_loops.graph
    assert len(g.edges) == 3
    assert all(e.source == e.range for e in g.edges)
    table = multiplicity(g)
    assert all(table[v, v] == 1 for v in g.vertices)


def test_zero_maps():
    gg = build_graph(parse_system("system tensor\npoints a b\n"))
    assert gg.graph.vertices == ("a", "b") and gg.graph.edges == ()
    assert gg.canonical_partition.classes == ()


def test_serialize_round_trip():
    sys = parse_system(read("four_point_tensor.sys"))
    assert parse_system(serialize_system(sys)) == sys


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(["tensor", "semicrossed"]))
def test_construction_properties(seed, cls):
    rng = random.Random(seed)
    sys = random_system(rng, cls)
    gg = build_graph(sys)
    g = gg.graph
    assert len(g.edges) == len(sys.points) * len(sys.maps)
    maps = dict(sys.maps)
    for e in g.edges:
        name, point = e.name.split("@")
        assert e.source == point and e.range == maps[name][point]
    for cls_edges in gg.canonical_partition.classes:
        sources = [g.edge(e).source for e in cls_edges]
        assert len(set(sources)) == len(sources)
    # relabel the points and rebuild: same canonical form
    images = list(sys.points)
    rng.shuffle(images)
    sigma = {p: "q" + q for p, q in zip(sys.points, images)}
    rebuilt = build_graph(sys.relabel(sigma)).graph
    for respect in (True, False):
        assert canonical_form(rebuilt, respect) == canonical_form(g, respect)
