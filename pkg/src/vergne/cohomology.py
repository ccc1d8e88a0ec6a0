"""Cocycle dimensions, Betti numbers and conjugation-square checks.

The differential preserves the degree grading, so the cochain complex
splits into small blocks indexed by (topological degree k, degree m) and
every rank is computed per block.  An unsliced full-matrix path is kept
as an oracle for the block computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .core import VergneAlgebra, differential, involution
from .exterior import Form, basis, graded_masks, matrix_of
from .gf2 import nullity, rank

__all__ = [
    "BettiTable",
    "cocycle_dim",
    "cocycle_dim_full",
    "betti",
    "graded_betti",
    "verify_commuting_square",
]


@dataclass
class BettiTable:
    """Betti numbers b_0..b_n with their graded refinement.

    ``graded`` maps (k, m) to dim H^k_m; zero entries are omitted.
    ``z`` holds the cocycle-space dimensions dim Z_0..Z_n.
    """

    n: int
    b: list[int]
    graded: dict[tuple[int, int], int]
    z: list[int]

    def violations(self) -> list[str]:
        """Internal-consistency failures; empty when the table is sound."""
        out = []
        n = self.n
        if self.b[0] != 1:
            out.append(f"b_0 = {self.b[0]} != 1")
        if any(v < 0 for v in self.b):
            out.append("negative Betti number")
        for k in range(n + 1):
            total = sum(v for (kk, m), v in self.graded.items() if kk == k)
            if total != self.b[k]:
                out.append(f"graded sum {total} != b_{k} = {self.b[k]}")
        lo = lambda k: k * (k + 1) // 2
        hi = lambda k: k * n - k * (k - 1) // 2
        for (k, m), v in self.graded.items():
            if v < 0:
                out.append(f"negative graded dimension at {(k, m)}")
            if not lo(k) <= m <= hi(k):
                out.append(f"graded degree {m} outside [{lo(k)}, {hi(k)}] for k={k}")
        alternating = sum((-1) ** k * bk for k, bk in enumerate(self.b))
        if alternating != 0:
            out.append(f"alternating sum {alternating} != 0")
        return out

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "betti": list(self.b),
            "graded": {
                f"{k},{m}": v for (k, m), v in sorted(self.graded.items())
            },
            "cocycle_dims": list(self.z),
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    def to_csv(self) -> str:
        lines = ["k,betti,cocycle_dim,graded"]
        for k in range(self.n + 1):
            cells = " ".join(
                f"{m}={v}" for (kk, m), v in sorted(self.graded.items()) if kk == k
            )
            lines.append(f"{k},{self.b[k]},{self.z[k]},{cells}")
        return "\n".join(lines) + "\n"


def _slice_ranks(g: VergneAlgebra, k: int) -> dict[int, int]:
    """Rank of the differential on each degree slice of the k-forms."""
    cache = g._slice_ranks
    got = cache.get(k)
    if got is not None:
        return got
    d = differential(g)
    target = graded_masks(g.n, k + 1) if k + 1 <= g.n else {}
    ranks = {}
    for m, monos in graded_masks(g.n, k).items():
        ranks[m] = rank(matrix_of(d, monos, target.get(m, ())))
    cache[k] = ranks
    return ranks


def cocycle_dim(g: VergneAlgebra, k: int) -> int:
    """dim ker(d) on k-forms, accumulated over the graded blocks."""
    if not 0 <= k <= g.n:
        raise ValueError(f"topological degree {k} outside 0..{g.n}")
    ranks = _slice_ranks(g, k)
    return comb(g.n, k) - sum(ranks.values())


def cocycle_dim_full(g: VergneAlgebra, k: int) -> int:
    """Same as cocycle_dim but on the single unsliced matrix (oracle path)."""
    if not 0 <= k <= g.n:
        raise ValueError(f"topological degree {k} outside 0..{g.n}")
    d = differential(g)
    codomain = basis(g.n, k + 1) if k + 1 <= g.n else ()
    return nullity(matrix_of(d, basis(g.n, k), codomain))


def graded_betti(g: VergneAlgebra, k: int, m: int) -> int:
    """dim H^k_m: closed k-forms of degree m modulo exact ones."""
    if not 0 <= k <= g.n:
        raise ValueError(f"topological degree {k} outside 0..{g.n}")
    monos = graded_masks(g.n, k).get(m)
    if not monos:
        return 0
    kernel = len(monos) - _slice_ranks(g, k)[m]
    image = _slice_ranks(g, k - 1).get(m, 0) if k >= 1 else 0
    return kernel - image


def betti(g: VergneAlgebra) -> BettiTable:
    """Full Betti table via b_k = dim Z_k + dim Z_{k-1} - C(n, k-1)."""
    if g._betti is not None:
        return g._betti
    n = g.n
    z = [cocycle_dim(g, k) for k in range(n + 1)]
    b = [1] + [z[k] + z[k - 1] - comb(n, k - 1) for k in range(1, n + 1)]
    graded: dict[tuple[int, int], int] = {}
    for k in range(n + 1):
        for m in graded_masks(n, k):
            v = graded_betti(g, k, m)
            if v:
                graded[(k, m)] = v
    table = BettiTable(n=n, b=b, graded=graded, z=z)
    # VergneAlgebra forbids plain attribute writes; fill the cache slot directly.
    object.__setattr__(g, "_betti", table)
    return table


def verify_commuting_square(g1: VergneAlgebra, g2: VergneAlgebra, k: int) -> bool:
    """Whether d2(f(h)) = f(d1(h)) for every basis k-monomial h.

    d1, d2 are the differentials of g1, g2 and f the involution.  Since f
    is an involution this single orientation decides the square both ways.
    """
    if g1.n != g2.n:
        raise ValueError(f"dimension mismatch: {g1.n} != {g2.n}")
    if k < 2:
        raise ValueError("the involution needs topological degree at least 2")
    n = g1.n
    d1, d2 = differential(g1), differential(g2)
    for mono in basis(n, k):
        h = Form.single(mono)
        if d2(involution(h)) != involution(d1(h)):
            return False
    return True
