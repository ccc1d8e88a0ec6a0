"""Filiform Lie algebras of Vergne type over GF(2).

An algebra of dimension n has a basis e_1..e_n with [e_1, e_i] = e_{i+1}
for 2 <= i <= n-1 and [e_i, e_j] = c_{i,j} e_{i+j} for i, j >= 2 with
i+j <= n.  Over GF(2) the bracket is symmetric in its structure constants
(signs vanish), c_{i,i} = 0, and the Jacobi identities involving e_1
collapse to the completion rule

    c_{i+1,j} = c_{i,j} + c_{i,j+1}        (out-of-range entries read 0)

so the whole table is determined by the e_2 row.  That row is encoded as
[0, c_{2,3}, ..., c_{2,n-2}, 0, 0] with forced zero padding at positions
2, n-1 and n.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .exterior import Derivation, Form, _from_masks, _mask_from_indices

__all__ = [
    "MIN_DIMENSION",
    "JacobiViolation",
    "RowVector",
    "VergneAlgebra",
    "m0",
    "m2",
    "from_row",
    "row_of",
    "parse_row",
    "differential",
    "lowering_operator",
    "tail_operator",
    "involution",
    "jacobi_holds",
]

# The structure theory below (pairing, decomposition to the two
# dimension-5 models) starts at dimension 5; smaller inputs are rejected.
MIN_DIMENSION = 5


class JacobiViolation(ValueError):
    """The given structure constants do not define a Lie algebra.

    Carries the first failing constraint: either ``triple`` (i, j, k) for a
    cyclic Jacobi identity, or ``index`` i when the derived diagonal entry
    c_{i,i} comes out nonzero.
    """

    def __init__(self, message: str, *, triple: tuple[int, int, int] | None = None,
                 index: int | None = None):
        super().__init__(message)
        self.triple = triple
        self.index = index


class RowVector:
    """The e_2 bracket row [0, c_{2,3}, ..., c_{2,n-2}, 0, 0].

    ``bits[j-2]`` is the coefficient of e_{2+j} in [e_2, e_j], j = 2..n.
    Positions 2, n-1 and n are padding and must be zero.
    """

    __slots__ = ("n", "bits")

    def __init__(self, bits: Iterable[int]):
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("row entries must be 0 or 1")
        n = len(bits) + 1
        if n < MIN_DIMENSION:
            raise ValueError(f"row of length {len(bits)} encodes dimension {n} < {MIN_DIMENSION}")
        if bits[0] != 0:
            raise JacobiViolation("row position 2 must be 0 (c_{2,2} = 0)", index=2)
        if bits[-2] != 0 or bits[-1] != 0:
            raise JacobiViolation(
                f"row positions {n - 1} and {n} must be 0 ([e_2, e_j] would leave the algebra)"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("RowVector is immutable")

    def bit(self, j: int) -> int:
        """Coefficient c_{2,j}; zero outside 2..n."""
        if 2 <= j <= self.n:
            return self.bits[j - 2]
        return 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RowVector):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __str__(self) -> str:
        return "[" + ", ".join(str(b) for b in self.bits) + "]"

    def __repr__(self) -> str:
        return f"RowVector({self})"


def parse_row(text: str) -> RowVector:
    """Parse ``[0, 1, 1, 0, 0, 0]``; brackets and whitespace optional."""
    inner = text.strip()
    if inner.startswith("["):
        if not inner.endswith("]"):
            raise ValueError(f"unbalanced brackets in {text!r}")
        inner = inner[1:-1]
    parts = [p.strip() for p in inner.split(",")] if inner.strip() else []
    if not parts or any(p not in ("0", "1") for p in parts):
        raise ValueError(f"row entries must be 0 or 1: {text!r}")
    return RowVector(int(p) for p in parts)


def _symmetric_get(c: Mapping[tuple[int, int], int], i: int, j: int) -> int:
    if i == j:
        return 0
    if i > j:
        i, j = j, i
    return c.get((i, j), 0)


def _jacobi_failure(c: Mapping[tuple[int, int], int], n: int) -> JacobiViolation | None:
    """First violated constraint among the e_1 identities and cyclic triples."""
    # e_1 identities: c_{i,j} + c_{i+1,j} + c_{i,j+1} = 0 whenever e_{i+j+1}
    # exists; with j = i+1 this forces the derived diagonal to vanish.
    for i in range(2, n):
        for j in range(i + 1, n - i):
            if _symmetric_get(c, i, j) ^ _symmetric_get(c, i + 1, j) ^ _symmetric_get(c, i, j + 1):
                if i + 1 == j:
                    return JacobiViolation(
                        f"derived diagonal entry c[{j},{j}] is nonzero", index=j
                    )
                return JacobiViolation(
                    f"completion identity fails at c[{i},{j}]", triple=(1, i, j)
                )
    for i in range(2, n):
        for j in range(i + 1, n):
            for k in range(j + 1, n - i - j + 1):
                total = (
                    _symmetric_get(c, j, k) & _symmetric_get(c, i, j + k)
                    ^ _symmetric_get(c, i, k) & _symmetric_get(c, j, i + k)
                    ^ _symmetric_get(c, i, j) & _symmetric_get(c, k, i + j)
                )
                if total:
                    return JacobiViolation(
                        f"Jacobi identity fails on (e{i}, e{j}, e{k})", triple=(i, j, k)
                    )
    return None


def jacobi_holds(c: Mapping[tuple[int, int], int], n: int) -> bool:
    """Check a raw structure-constant table: completion identities,
    vanishing derived diagonal, and all cyclic Jacobi triples."""
    table = {}
    for (i, j), v in c.items():
        if v not in (0, 1):
            raise ValueError("structure constants must be 0 or 1")
        if i == j:
            if v:
                return False
            continue
        if i > j:
            i, j = j, i
        if v:
            if not (2 <= i and i + j <= n):
                raise ValueError(f"constant c[{i},{j}] out of range for dimension {n}")
            table[(i, j)] = 1
    return _jacobi_failure(table, n) is None


def _raw_differential(n: int, c: Mapping[tuple[int, int], int]) -> Derivation:
    """Chevalley-Eilenberg differential of a (possibly unvalidated) table."""
    images: dict[int, set[int]] = {}
    for k in range(3, n + 1):
        masks = {_mask_from_indices((1, k - 1), n)}
        for i in range(2, k):
            j = k - i
            if i < j and _symmetric_get(c, i, j):
                masks.add(_mask_from_indices((i, j), n))
        images[k] = masks
    return Derivation(n, images)


class VergneAlgebra:
    """Immutable, validated Vergne-type algebra: dimension plus c-table.

    Construction checks every bracket constraint (completion identities,
    derived diagonal, Jacobi triples) and cross-checks d o d = 0 on the
    generators, so any held instance is a genuine Lie algebra.
    """

    __slots__ = ("n", "c", "_diff", "_slice_ranks", "_betti")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]]):
        if n < MIN_DIMENSION:
            raise ValueError(f"dimension must be at least {MIN_DIMENSION}, got {n}")
        if n > 64:
            raise ValueError("dimension capped at 64")
        table = set()
        for i, j in pairs:
            if i > j:
                i, j = j, i
            if not (2 <= i < j and i + j <= n):
                raise ValueError(f"structure constant c[{i},{j}] out of range")
            table.add((i, j))
        failure = _jacobi_failure({p: 1 for p in table}, n)
        if failure is not None:
            raise failure
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", frozenset(table))
        d = _raw_differential(n, {p: 1 for p in table})
        for k in range(3, n + 1):
            if d.apply_masks(d.apply_mask(_mask_from_indices((k,), n))):
                raise JacobiViolation(f"d(d(e^{k})) != 0", index=k)
        object.__setattr__(self, "_diff", d)
        object.__setattr__(self, "_slice_ranks", {})
        object.__setattr__(self, "_betti", None)

    def __setattr__(self, name, value):
        raise AttributeError("VergneAlgebra is immutable")

    def structure_constant(self, i: int, j: int) -> int:
        """c_{i,j}, symmetrized; zero for i = j and out-of-range pairs."""
        if i == j:
            return 0
        if i > j:
            i, j = j, i
        return 1 if (i, j) in self.c else 0

    def bracket_index(self, i: int, j: int) -> tuple[int, int]:
        """[e_i, e_j] as (coefficient, target index); (0, 0) when zero."""
        if i == j:
            return (0, 0)
        if i > j:
            i, j = j, i
        if i == 1:
            return (1, j + 1) if 2 <= j <= self.n - 1 else (0, 0)
        if i + j <= self.n and (i, j) in self.c:
            return (1, i + j)
        return (0, 0)

    def row(self) -> RowVector:
        return RowVector(
            tuple(self.structure_constant(2, j) for j in range(2, self.n + 1))
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VergneAlgebra):
            return NotImplemented
        return self.n == other.n and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.n, self.c))

    def __repr__(self) -> str:
        return f"VergneAlgebra(n={self.n}, row={self.row()})"


def m0(n: int) -> VergneAlgebra:
    """The model algebra with [e_1, e_i] = e_{i+1} only."""
    return VergneAlgebra(n, ())


def m2(n: int) -> VergneAlgebra:
    """The model algebra with the extra relations [e_2, e_j] = e_{j+2}."""
    return from_row(RowVector(
        tuple(1 if 3 <= j <= n - 2 else 0 for j in range(2, n + 1))
    ))


def _complete_row(row: RowVector) -> dict[tuple[int, int], int]:
    """Fill the full c-table from the e_2 row by the completion rule.

    Purely mechanical: derived diagonal entries are treated as zero, so the
    result may still violate the diagonal or triple constraints.  Those are
    caught by validation (the completion identities for the off-diagonal
    pairs hold by construction).
    """
    n = row.n
    c: dict[tuple[int, int], int] = {}
    for j in range(3, n - 1):
        if row.bit(j):
            c[(2, j)] = 1
    for i in range(2, n):
        nxt = i + 1
        for j in range(nxt + 1, n - nxt + 1):
            if _symmetric_get(c, i, j) ^ _symmetric_get(c, i, j + 1):
                c[(nxt, j)] = 1
    return c


def from_row(row: RowVector | str) -> VergneAlgebra:
    """Build the algebra encoded by an e_2 row, completing via Jacobi.

    Raises JacobiViolation when the row does not encode a Lie algebra
    (first failing diagonal index or triple attached).
    """
    if isinstance(row, str):
        row = parse_row(row)
    return VergneAlgebra(row.n, _complete_row(row).keys())


def row_of(g: VergneAlgebra) -> RowVector:
    """Inverse of from_row: extract the e_2 row."""
    return g.row()


def differential(g: VergneAlgebra) -> Derivation:
    """The Chevalley-Eilenberg differential: d(e^1) = d(e^2) = 0 and

    d(e^k) = e^1^e^{k-1} + sum over i+j = k, 1 < i < j of c_{i,j} e^i^e^j.

    Maps each graded slice of k-forms into the same-degree slice of
    (k+1)-forms.
    """
    return g._diff


@lru_cache(maxsize=None)
def lowering_operator(n: int, step: int = 1) -> Derivation:
    """Derivation sending e^i to e^{i-step} (zero for i <= 2*step).

    step=1 and step=2 are the two shifts that assemble the model
    differentials: d_{m0} = e^1 ^ shift_1 and d_{m2} = e^1 ^ shift_1 +
    e^2 ^ shift_2.
    """
    if step < 1:
        raise ValueError("step must be positive")
    images = {
        i: {_mask_from_indices((i - step,), n)}
        for i in range(2 * step + 1, n + 1)
    }
    return Derivation(n, images)


def tail_operator(g: VergneAlgebra) -> Derivation:
    """The differential minus its leading e^1-part: e^k maps to the pure
    bracket terms sum of c_{i,j} e^i^e^j over i+j = k, 1 < i < j.

    Vanishes on e^1..e^4; its image avoids e^1 entirely.  Equals
    d + e^1 ^ lowering_operator(n, 1) (same thing over GF(2)).
    """
    n = g.n
    images: dict[int, set[int]] = {}
    for k in range(5, n + 1):
        masks = {
            _mask_from_indices((i, k - i), n)
            for i in range(2, k)
            if i < k - i and g.structure_constant(i, k - i)
        }
        if masks:
            images[k] = masks
    return Derivation(n, images)


def _involution_masks(n: int, masks: frozenset[int] | set[int]) -> set[int]:
    # f(h) = h + e^2 ^ D(x) where h = e^1^x + e^2^y + z and D lowers
    # indices by one.  x is the e^1-stripped part of the e^1-terms.
    lower = lowering_operator(n, 1)
    x_masks = [m ^ 1 for m in masks if m & 1]
    correction: set[int] = set()
    for dm in lower.apply_masks(x_masks):
        if dm & 2:
            continue
        t = dm | 2
        if t in correction:
            correction.remove(t)
        else:
            correction.add(t)
    return set(masks) ^ correction


def involution(h: Form) -> Form:
    """The degree-preserving involution f on homogeneous k-forms, k in 2..n.

    Splitting h = e^1^x + e^2^y + z with x free of e^1 and y, z free of
    e^1, e^2, it returns e^1^x + e^2^(y + D(x)) + z where D lowers every
    generator index by one.  Applying it twice gives h back.
    """
    n = h.ambient
    if not h.terms:
        return h
    tds = {m.bit_count() for m in h.terms}
    if len(tds) != 1:
        raise ValueError("involution needs a homogeneous topological degree")
    k = tds.pop()
    if not 2 <= k <= n:
        raise ValueError(f"involution defined for topological degree 2..{n}, got {k}")
    return _from_masks(n, _involution_masks(n, h.terms))
