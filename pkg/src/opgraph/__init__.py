"""Graph invariants for operator algebras of finite dynamical systems and edge-colored graphs."""
from .canon import (CanonicalForm, Verdict, Witness, apply_witness, are_equivalent, brute_force_iso,
                    canonical_form, fnv1a_64)
from .colorings import (ConflictGraph, coloring_leq, conflict_relation, is_maximal_coloring,
                        is_one_colorable, is_valid_coloring, minimal_coloring)
from .dynamics import DynamicalSystem, GeneratedGraph, build_graph, parse_system
from .graph import (ColoredDigraph, Edge, ParseError, is_vertex_pair_finite, make_graph, multiplicity,
                    parse_graph, serialize_graph)
from .partitions import (EdgePartition, enumerate_topological_partitions, hasse_edges, is_topological,
                         partition_leq, poset_extremes)
from .paths import admissible_paths, is_admissible
from .report import invariant_report, load, load_text

__version__ = "0.1.0"
