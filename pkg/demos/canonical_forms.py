"""
Canonical forms and equivalence witnesses
=========================================

Relabel vertices and permute the palette; the canonical text and hash do not
move, and ``are_equivalent`` hands back an explicit bijection.
"""

import random

from opgraph import are_equivalent, brute_force_iso, canonical_form
from opgraph.canon import apply_witness
from opgraph.corpus import random_graph, random_relabeling

rng = random.Random(5)
g = random_graph(rng, max_vertices=5, max_edges=7)
h, sigma = random_relabeling(rng, g)
h = h.relabel({v: v for v in h.vertices}, color_map={1: 9, 2: 4, 3: 6})

print(canonical_form(g).canonical_text)
print(canonical_form(g).hex, canonical_form(h).hex)

v = are_equivalent(g, h)
print(v.label, v.witness.vertex_map, v.witness.palette)
print("witness checks out:", apply_witness(g, h, v.witness))
print("brute force agrees:", brute_force_iso(g, h) is not None)
