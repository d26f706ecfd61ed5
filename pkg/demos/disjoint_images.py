"""
When is a semicrossed product 1-colorable?
==========================================

Draw random systems and compare the coloring verdict with a direct check that
the maps' images are pairwise disjoint.
"""

import random
from itertools import combinations

from opgraph import build_graph
from opgraph.colorings import is_one_colorable
from opgraph.corpus import random_system

rng = random.Random(0)
rows = []
for _ in range(20):
    sys = random_system(rng, "semicrossed", max_points=5, max_maps=2)
    gg = build_graph(sys)
    images = [sorted(set(fn.values())) for _, fn in sys.maps]
    disjoint = all(not set(a) & set(b) for a, b in combinations(images, 2))
    rows.append((images, disjoint, is_one_colorable(gg, gg.canonical_partition)))

for images, disjoint, verdict in rows:
    print(f"{str(images):40s} disjoint={disjoint!s:5s} one_colorable={verdict}")
assert all(d == v for _, d, v in rows)

# the same systems read as tensor algebras are always 1-colorable
sys = random_system(rng, "tensor")
gg = build_graph(sys)
print("tensor:", is_one_colorable(gg, gg.canonical_partition))
