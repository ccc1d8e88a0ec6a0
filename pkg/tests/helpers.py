"""Shared test utilities: random generators, a mini DOT parser, oracles."""

from __future__ import annotations

import re

from vergne.exterior import Form
from vergne.gf2 import BitMatrix


def random_bitmatrix(rng, max_rows: int, max_cols: int) -> BitMatrix:
    rows = rng.randrange(max_rows + 1)
    cols = rng.randrange(max_cols + 1)
    data = [rng.getrandbits(cols) if cols else 0 for _ in range(rows)]
    return BitMatrix(rows, cols, data)


def matvec(m: BitMatrix, v: int) -> int:
    """M v over GF(2); v is a bitmask over columns, result over rows."""
    out = 0
    for r, row in enumerate(m.data):
        if (row & v).bit_count() & 1:
            out |= 1 << r
    return out


def random_form(rng, n: int, max_terms: int = 6) -> Form:
    """A random form with mixed topological degrees."""
    return Form(n, [rng.getrandbits(n) for _ in range(rng.randrange(max_terms + 1))])


def random_homogeneous_form(rng, n: int, k: int, max_terms: int = 5) -> Form:
    """A random form whose terms all have topological degree k."""
    from itertools import combinations

    pool = list(combinations(range(1, n + 1), k))
    count = rng.randrange(1, max_terms + 1)
    masks = set()
    for _ in range(count):
        combo = rng.choice(pool)
        mask = 0
        for i in combo:
            mask |= 1 << (i - 1)
        masks.symmetric_difference_update({mask})
    return Form(n, masks)


_DOT_HEADER = re.compile(r"^digraph\s+\w+\s*\{$")
_DOT_NODE = re.compile(r'^\s*"([^"]+)"\s*;$')
_DOT_EDGE = re.compile(r'^\s*"([^"]+)"\s*->\s*"([^"]+)"\s*;$')


def parse_dot(text: str) -> tuple[list[str], list[tuple[str, str]]]:
    """Parse the minimal DOT dialect the package emits.

    Raises ValueError on anything outside the grammar: a header line,
    quoted node statements, quoted edge statements, a closing brace.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not _DOT_HEADER.match(lines[0].strip()):
        raise ValueError("missing digraph header")
    if lines[-1].strip() != "}":
        raise ValueError("missing closing brace")
    nodes: list[str] = []
    edges: list[tuple[str, str]] = []
    for ln in lines[1:-1]:
        m = _DOT_EDGE.match(ln)
        if m:
            edges.append((m.group(1), m.group(2)))
            continue
        m = _DOT_NODE.match(ln)
        if m:
            nodes.append(m.group(1))
            continue
        raise ValueError(f"unparseable DOT line: {ln!r}")
    return nodes, edges
