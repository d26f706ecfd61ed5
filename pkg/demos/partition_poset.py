"""
The poset of topological partitions
===================================

With the identity map on three points every edge is a loop with its own
source, so every set partition of the three edges is topological.  Adding a
second edge out of one point forbids the partitions that put both together.
"""

from opgraph import enumerate_topological_partitions, hasse_edges, make_graph, poset_extremes
from opgraph.partitions import format_partition

loops = make_graph("012", [(f"a@{v}", v, v) for v in "012"], "semicrossed")
ps = enumerate_topological_partitions(loops)
print(len(ps), "partitions")
for i, p in enumerate(ps):
    print(i, format_partition(p).replace("\n", " | "))

print("covers:", hasse_edges(ps))
lo, hi = poset_extremes(ps)
print("bottom:", lo[0].classes)
print("top:   ", hi[0].classes)

# a second edge out of vertex 0: the one-class partition is gone and there are two minimal elements
clash = make_graph("012", [("a@0", "0", "0"), ("b@0", "0", "1"), ("a@1", "1", "1")], "semicrossed")
ps = enumerate_topological_partitions(clash)
lo, hi = poset_extremes(ps)
print(len(ps), "partitions; minimal:", [p.classes for p in lo])
