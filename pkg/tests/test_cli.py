import io
import subprocess
import sys

import pytest

from opgraph.cli import run
from opgraph.dot import dot_color
from opgraph.graph import parse_graph


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_build(data_dir):
    code, out, _ = call("build", data_dir / "four_point_semicrossed.sys")
    assert code == 0
    g = parse_graph(out)
    assert len(g.vertices) == 4 and len(g.edges) == 8
    assert len(out.splitlines()) == 10


def test_build_rejects_graph_file(tmp_path, data_dir):
    graph = tmp_path / "g.graph"
    graph.write_text(call("build", data_dir / "three_loops.sys")[1])
    code, _, err = call("build", graph)
    assert code == 2 and "system file" in err


def test_report_fields(data_dir):
    code, out, _ = call("report", data_dir / "three_loops.sys")
    assert code == 0
    keys = [line.split(":")[0] for line in out.splitlines()]
    assert keys == ["algebra_class", "vertex_count", "edge_count", "multiplicity_max", "edge_free",
                    "canonical_hash_plain", "canonical_hash_colored", "minimal_color_count",
                    "one_colorable", "topological_partition_count"]
    assert "topological_partition_count: 5" in out
    assert "edge_free: true" in out


def test_report_cap_drops_partition_count(data_dir):
    code, out, _ = call("report", data_dir / "four_point_tensor.sys", "--max-partition-edges", 4)
    assert code == 0 and "topological_partition_count" not in out


def test_report_graph_file_matches_system(tmp_path, data_dir):
    graph = tmp_path / "s.graph"
    graph.write_text(call("build", data_dir / "four_point_semicrossed.sys")[1])
    assert call("report", graph)[1] == call("report", data_dir / "four_point_semicrossed.sys")[1]


def test_report_plain_graph(tmp_path):
    f = tmp_path / "p.graph"
    f.write_text("graph plain\nvertices a\nedge e a a 1\n")
    code, out, _ = call("report", f)
    assert code == 0 and "one_colorable: n/a" in out


def test_compare(data_dir):
    t, s = data_dir / "four_point_tensor.sys", data_dir / "four_point_semicrossed.sys"
    code, out, _ = call("compare", t, s, "--ignore-colors")
    assert (code, out) == (0, "EQUIVALENT\n")
    code, out, _ = call("compare", t, s)
    assert code == 1 and out == "DISTINGUISHED minimal_color_count 1 vs 2\n"
    code2, out2, _ = call("compare", s, t)
    assert code2 == 1 and out2.split()[:2] == ["DISTINGUISHED", "minimal_color_count"]


def test_compare_edge_count(data_dir):
    code, out, _ = call("compare", data_dir / "three_loops.sys", data_dir / "two_identities.sys")
    assert code == 1 and out.startswith("DISTINGUISHED edge_count 3 vs 6")


def test_partitions(data_dir):
    code, out, _ = call("partitions", data_dir / "three_loops.sys")
    assert code == 0
    assert out.count("partition ") == 5
    assert out.count("cover ") == 6


def test_partitions_cap(data_dir):
    code, _, err = call("partitions", data_dir / "four_point_tensor.sys", "--max-partition-edges", 3)
    assert code == 2 and "--max-partition-edges" in err


def test_colorings(data_dir, tmp_path):
    code, out, _ = call("colorings", data_dir / "four_point_semicrossed.sys")
    assert code == 0
    assert "conflict f g" in out
    assert "minimal_color_count: 2" in out
    assert "color f 1\ncolor g 2\n" in out
    assert "maximal: true" in out
    code, out, _ = call("colorings", data_dir / "four_point_semicrossed.sys", "--partition", "discrete")
    assert code == 0 and "minimal_color_count: 3" in out  # f@2, f@3, f@4 all land on 3
    part = tmp_path / "p.txt"
    part.write_text("class a@0 a@1 a@2\n")
    code, out, _ = call("colorings", data_dir / "three_loops.sys", "--partition", part)
    assert code == 0 and "minimal_color_count: 1" in out
    code, _, err = call("colorings", data_dir / "four_point_semicrossed.sys", "--partition", "coarse")
    assert code == 2 and "not topological" in err


def test_paths(data_dir):
    code, out, _ = call("paths", data_dir / "four_point_semicrossed.sys", "--from", 1, "--to", 3, "--max-len", 2)
    assert code == 0
    assert out.splitlines()[1:] == ["path f@1 f@2", "path g@1 f@2"]
    code, _, err = call("paths", data_dir / "four_point_semicrossed.sys", "--from", 1, "--to", 3, "--max-len", 99)
    assert code == 2


def test_dot(data_dir):
    code, out, _ = call("dot", data_dir / "four_point_semicrossed.sys")
    assert code == 0 and out.startswith("digraph")
    assert 'color="black"' in out and 'color="red"' in out
    assert dot_color(12) == "teal"
    assert dot_color(13) == "/spectral11/3"


def test_parse_error_reports_file_and_line(tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("graph plain\nvertices 1 2 3 4\nedge e 5 1 1\n")
    code, out, err = call("report", bad)
    assert code == 2 and out == ""
    assert f"{bad}:3: unknown vertex" in err
    bad.write_text("system tensor\npoints 1 2 3\nmap f 1->1 2->2\n")
    code, _, err = call("report", bad)
    assert code == 2 and ":3: map not total" in err
    code, _, err = call("report", tmp_path / "missing.sys")
    assert code == 2
    bad.write_text("nonsense\n")
    assert call("report", bad)[0] == 2


def test_bad_usage():
    assert call("frobnicate")[0] == 2


def test_module_entry_point(data_dir):
    proc = subprocess.run([sys.executable, "-m", "opgraph", "report", str(data_dir / "three_loops.sys")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "topological_partition_count: 5" in proc.stdout
