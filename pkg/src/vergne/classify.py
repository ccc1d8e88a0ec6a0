"""Exhaustive enumeration per dimension, labels, and the extension tree.

A dimension-n algebra is determined by the n-4 free bits of its e_2 row,
so enumeration walks all 2^(n-4) rows and keeps the Jacobi-consistent
ones.  A forward search that extends algebras by their admissible
cocycles is kept as an independent cross-check of the same node set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .cohomology import betti
from .core import JacobiViolation, RowVector, VergneAlgebra, from_row
from .extensions import admissible_cocycles, central_extension, reduce

__all__ = [
    "ExtensionTree",
    "enumerate_algebras",
    "enumerate_by_extension",
    "extension_tree",
    "label",
    "to_dot",
    "dimension_json_dict",
]

# Classification labels for dimensions 7..12, keyed by (dimension, e_2 row).
# g(n,i) and h(n,i) carry the same Betti numbers; the all-zero and the
# m2 rows are labelled m0(n)/m2(n) directly by label().
_LABELS: dict[tuple[int, tuple[int, ...]], str] = {
    (7, (0, 0, 0, 1, 0, 0)): "g(7,1)",
    (8, (0, 0, 0, 1, 0, 0, 0)): "g(8,1)",
    (9, (0, 0, 0, 1, 0, 0, 0, 0)): "g(9,1)",
    (9, (0, 0, 0, 0, 0, 1, 0, 0)): "g(9,2)",
    (10, (0, 0, 0, 1, 0, 0, 1, 0, 0)): "g(10,1)",
    (10, (0, 0, 0, 0, 0, 1, 1, 0, 0)): "g(10,2)",
    (11, (0, 0, 0, 1, 0, 0, 1, 0, 0, 0)): "g(11,1)",
    (11, (0, 0, 0, 0, 0, 1, 1, 0, 0, 0)): "g(11,2)",
    (11, (0, 0, 0, 1, 0, 0, 1, 1, 0, 0)): "g(11,3)",
    (11, (0, 0, 0, 0, 0, 0, 0, 1, 0, 0)): "g(11,4)",
    (12, (0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0)): "g(12,1)",
    (12, (0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0)): "g(12,2)",
    (12, (0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0)): "g(12,3)",
    (12, (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0)): "g(12,4)",
    (7, (0, 1, 1, 0, 0, 0)): "h(7,1)",
    (8, (0, 1, 1, 0, 1, 0, 0)): "h(8,1)",
    (9, (0, 1, 1, 0, 1, 1, 0, 0)): "h(9,1)",
    (9, (0, 1, 1, 1, 1, 0, 0, 0)): "h(9,2)",
    (10, (0, 1, 1, 0, 1, 1, 0, 0, 0)): "h(10,1)",
    (10, (0, 1, 1, 1, 1, 0, 0, 0, 0)): "h(10,2)",
    (11, (0, 1, 1, 0, 1, 1, 0, 1, 0, 0)): "h(11,1)",
    (11, (0, 1, 1, 1, 1, 0, 0, 1, 0, 0)): "h(11,2)",
    (11, (0, 1, 1, 0, 1, 1, 0, 0, 0, 0)): "h(11,3)",
    (11, (0, 1, 1, 1, 1, 1, 1, 0, 0, 0)): "h(11,4)",
    (12, (0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0)): "h(12,1)",
    (12, (0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0)): "h(12,2)",
    (12, (0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 0)): "h(12,3)",
    (12, (0, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0)): "h(12,4)",
}


@lru_cache(maxsize=None)
def enumerate_algebras(n: int) -> tuple[VergneAlgebra, ...]:
    """All Vergne-type algebras of dimension n, rows ascending.

    Walks the 2^(n-4) candidate rows (free positions 3..n-2) in
    lexicographic order and keeps those passing Jacobi completion.
    """
    if not 5 <= n <= 64:
        raise ValueError(f"dimension must be in 5..64, got {n}")
    out = []
    for free in product((0, 1), repeat=n - 4):
        row = RowVector((0,) + free + (0, 0))
        try:
            out.append(from_row(row))
        except JacobiViolation:
            continue
    return tuple(out)


def enumerate_by_extension(n: int) -> tuple[VergneAlgebra, ...]:
    """Forward search: grow from the two dimension-5 roots by admissible
    cocycles.  Must coincide with enumerate_algebras (cross-check path)."""
    if not 5 <= n <= 64:
        raise ValueError(f"dimension must be in 5..64, got {n}")
    level = list(enumerate_algebras(5))
    for _ in range(5, n):
        level = [
            central_extension(g, omega)
            for g in level
            for omega in admissible_cocycles(g)
        ]
    return tuple(sorted(level, key=lambda g: g.row().bits))


def label(g: VergneAlgebra) -> str:
    """m0(n)/m2(n), a table label for dimensions 7..12, else the row string."""
    bits = g.row().bits
    if not any(bits):
        return f"m0({g.n})"
    if bits == tuple(1 if 3 <= j <= g.n - 2 else 0 for j in range(2, g.n + 1)):
        return f"m2({g.n})"
    return _LABELS.get((g.n, bits), str(g.row()))


@dataclass(frozen=True)
class ExtensionTree:
    """All algebras of dimension 5..n_max linked by one-step truncation.

    ``nodes`` maps (dimension, row bits) to a node id; ``edges`` holds
    (child id, parent id) pairs where the parent is the child's
    truncation; the two dimension-5 models are the only roots.
    """

    nodes: dict[tuple[int, tuple[int, ...]], int]
    edges: tuple[tuple[int, int], ...]
    labels: dict[int, str]


def extension_tree(n_max: int) -> ExtensionTree:
    if n_max < 5:
        raise ValueError("n_max must be at least 5")
    nodes: dict[tuple[int, tuple[int, ...]], int] = {}
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    for n in range(5, n_max + 1):
        for g in enumerate_algebras(n):
            node_id = len(nodes)
            nodes[(n, g.row().bits)] = node_id
            labels[node_id] = label(g)
    for n in range(6, n_max + 1):
        for g in enumerate_algebras(n):
            base, _ = reduce(g)
            parent_key = (n - 1, base.row().bits)
            if parent_key not in nodes:
                raise AssertionError(f"truncation of {g!r} is not enumerated")
            edges.append((nodes[(n, g.row().bits)], nodes[parent_key]))
    return ExtensionTree(nodes=nodes, edges=tuple(edges), labels=labels)


def to_dot(tree: ExtensionTree) -> str:
    """Deterministic DOT digraph; edges run parent -> child."""
    lines = ["digraph vergne_extensions {"]
    for key in sorted(tree.nodes):
        lines.append(f'  "{tree.labels[tree.nodes[key]]}";')
    for child, parent in sorted(tree.edges):
        lines.append(f'  "{tree.labels[parent]}" -> "{tree.labels[child]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dimension_json_dict(n: int) -> dict:
    """JSON-ready listing of one dimension: rows, labels, Betti vectors."""
    return {
        "dimension": n,
        "algebras": [
            {
                "row": str(g.row()),
                "label": label(g),
                "betti": list(betti(g).b),
            }
            for g in enumerate_algebras(n)
        ],
    }
