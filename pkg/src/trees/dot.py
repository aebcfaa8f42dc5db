"""Graphviz DOT export of bicoloured trees."""

from itertools import count
from typing import List

from .model import BicolouredTree, TreeNode


def to_dot(t: BicolouredTree, name: str = "tree") -> str:
    """DOT digraph keeping child order; node ids are preorder ranks."""
    ranks = count()
    lines: List[str] = [
        f"digraph {name} {{",
        "  ordering=out;",
        "  node [shape=circle];",
    ]
    edges: List[str] = []

    def visit(vertex: TreeNode) -> str:
        node_id = f"n{next(ranks)}"
        if vertex.is_white:
            lines.append(f'  {node_id} [label="{vertex.label}"];')
        else:
            lines.append(f'  {node_id} [label="", style=filled, fillcolor=black, width=0.2];')
        for child in vertex.children:
            edges.append(f"  {node_id} -> {visit(child)};")
        return node_id

    visit(t.root)
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
