"""Graphviz DOT export with a fixed color palette."""
from __future__ import annotations

from .graph import ColoredDigraph

PALETTE = ("black", "red", "blue", "green", "orange", "purple",
           "brown", "cyan", "magenta", "olive", "navy", "teal")


def dot_color(k: int) -> str:
    if 1 <= k <= len(PALETTE):
        return PALETTE[k - 1]
    return f"/spectral11/{k % 11 + 1}"


def to_dot(g: ColoredDigraph, name: str = "G") -> str:
    n = g.normalized()
    lines = [f"digraph {name} {{", f'  label="{n.algebra_class}";']
    lines += [f'  "{v}";' for v in n.vertices]
    for e in n.edges:
        lines.append(f'  "{e.source}" -> "{e.range}" [label="{e.name}", color="{dot_color(e.color)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
