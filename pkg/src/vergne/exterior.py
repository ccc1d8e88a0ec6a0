"""The exterior algebra on generators e^1..e^n over GF(2).

Monomials e^{i1}^...^e^{ik} are bitmasks (bit i-1 set means e^i present),
forms are finite sets of monomials with symmetric difference as addition.
In characteristic two there are no signs, so the wedge product is
commutative and any generator-wise map extends to a derivation by the
plain Leibniz rule D(a^b) = D(a)^b + a^D(b).

Each monomial carries two weights: the topological degree (number of
factors) and the degree (sum of the generator indices).  The degree is
preserved by every operator built here, which is what makes the graded,
block-diagonal cohomology computation possible.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .gf2 import BitMatrix

__all__ = [
    "MAX_AMBIENT",
    "AmbientMismatch",
    "ImageOutsideCodomain",
    "Monomial",
    "Form",
    "Derivation",
    "derivation",
    "wedge",
    "basis",
    "basis_graded",
    "graded_masks",
    "matrix_of",
    "parse_form",
]

# One machine word per monomial; far above the interesting range n <= 14.
MAX_AMBIENT = 64


class AmbientMismatch(ValueError):
    """Operands live in exterior algebras of different ambient dimension."""


class ImageOutsideCodomain(ValueError):
    """An operator image escaped the stated codomain span (grading bug)."""


def _mask_from_indices(indices: Iterable[int], ambient: int) -> int:
    mask = 0
    for i in indices:
        if not 1 <= i <= ambient:
            raise ValueError(f"generator index {i} outside 1..{ambient}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated generator index {i}")
        mask |= bit
    return mask


def _indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def _mask_degree(mask: int) -> int:
    total = 0
    while mask:
        low = mask & -mask
        total += low.bit_length()
        mask ^= low
    return total


class Monomial(NamedTuple):
    """A basis monomial, encoded as an index bitmask plus its ambient n."""

    mask: int
    ambient: int

    @classmethod
    def from_indices(cls, indices: Iterable[int], ambient: int) -> "Monomial":
        _check_ambient(ambient)
        return cls(_mask_from_indices(indices, ambient), ambient)

    @property
    def indices(self) -> tuple[int, ...]:
        return _indices(self.mask)

    @property
    def degree(self) -> int:
        """Sum of the generator indices."""
        return _mask_degree(self.mask)

    @property
    def top_degree(self) -> int:
        """Number of wedge factors."""
        return self.mask.bit_count()

    def __str__(self) -> str:
        if not self.mask:
            return "1"
        return "^".join(f"e{i}" for i in self.indices)


def _check_ambient(n: int) -> None:
    if not 0 <= n <= MAX_AMBIENT:
        raise ValueError(f"ambient dimension must be in 0..{MAX_AMBIENT}, got {n}")


class Form:
    """A GF(2) sum of monomials; the empty set is the zero form.

    ``terms`` is a frozenset of monomial bitmasks.  The constructor accepts
    masks or Monomial values and folds duplicates mod 2.
    """

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: int, terms: Iterable[Union[int, Monomial]] = ()):
        _check_ambient(ambient)
        acc: set[int] = set()
        limit = 1 << ambient
        for t in terms:
            mask = t.mask if isinstance(t, Monomial) else t
            if not 0 <= mask < limit:
                raise ValueError(f"monomial {mask:#x} outside ambient dimension {ambient}")
            if mask in acc:
                acc.remove(mask)
            else:
                acc.add(mask)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "terms", frozenset(acc))

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("Form is immutable")

    @classmethod
    def zero(cls, ambient: int) -> "Form":
        return cls(ambient)

    @classmethod
    def one(cls, ambient: int) -> "Form":
        return cls(ambient, (0,))

    @classmethod
    def single(cls, mono: Monomial) -> "Form":
        return cls(mono.ambient, (mono.mask,))

    def monomials(self) -> tuple[Monomial, ...]:
        """Terms in canonical order (lexicographic on sorted index tuples)."""
        return tuple(
            Monomial(m, self.ambient) for m in sorted(self.terms, key=_indices)
        )

    def __add__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"{self.ambient} != {other.ambient}")
        out = Form.__new__(Form)
        object.__setattr__(out, "ambient", self.ambient)
        object.__setattr__(out, "terms", self.terms ^ other.terms)
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ambient, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(m) for m in self.monomials())

    def __repr__(self) -> str:
        return f"Form({self.ambient}, {self})"


def _from_masks(ambient: int, masks: Iterable[int]) -> Form:
    # internal fast path: masks already deduplicated and range-checked
    out = Form.__new__(Form)
    object.__setattr__(out, "ambient", ambient)
    object.__setattr__(out, "terms", frozenset(masks))
    return out


def wedge(a: Form, b: Form) -> Form:
    """Exterior product, bilinear over GF(2); x^x = 0, no signs in char 2."""
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"{a.ambient} != {b.ambient}")
    acc: set[int] = set()
    for x in a.terms:
        for y in b.terms:
            if x & y:
                continue
            m = x | y
            if m in acc:
                acc.remove(m)
            else:
                acc.add(m)
    return _from_masks(a.ambient, acc)


class Derivation:
    """A derivation of the exterior algebra given by its generator images.

    Acts on a monomial by the Leibniz expansion (replace one factor at a
    time by its image, sum the results mod 2) and additively on forms.
    Generators without an entry map to zero; scalars map to zero.
    """

    __slots__ = ("ambient", "images")

    def __init__(self, ambient: int, images: Mapping[int, Iterable[int]]):
        _check_ambient(ambient)
        limit = 1 << ambient
        table: dict[int, frozenset[int]] = {}
        for i, masks in images.items():
            if not 1 <= i <= ambient:
                raise ValueError(f"generator index {i} outside 1..{ambient}")
            ms = frozenset(masks)
            for m in ms:
                if not 0 <= m < limit:
                    raise ValueError("image monomial outside ambient dimension")
            if ms:
                table[i] = ms
        self.ambient = ambient
        self.images = table

    def image_of_generator(self, i: int) -> Form:
        return _from_masks(self.ambient, self.images.get(i, frozenset()))

    def apply_mask(self, mask: int) -> set[int]:
        """Leibniz expansion of a single monomial, returned as a mask set."""
        acc: set[int] = set()
        images = self.images
        m = mask
        while m:
            low = m & -m
            m ^= low
            imgs = images.get(low.bit_length())
            if not imgs:
                continue
            rest = mask ^ low
            for img in imgs:
                if img & rest:
                    continue
                t = img | rest
                if t in acc:
                    acc.remove(t)
                else:
                    acc.add(t)
        return acc

    def apply_masks(self, masks: Iterable[int]) -> set[int]:
        acc: set[int] = set()
        for mask in masks:
            acc ^= self.apply_mask(mask)
        return acc

    def __call__(self, x: Union[Form, Monomial]) -> Form:
        if isinstance(x, Monomial):
            if x.ambient != self.ambient:
                raise AmbientMismatch(f"{x.ambient} != {self.ambient}")
            return _from_masks(self.ambient, self.apply_mask(x.mask))
        if x.ambient != self.ambient:
            raise AmbientMismatch(f"{x.ambient} != {self.ambient}")
        return _from_masks(self.ambient, self.apply_masks(x.terms))

    def __repr__(self) -> str:
        return f"Derivation(ambient={self.ambient}, generators={sorted(self.images)})"


def derivation(ambient: int, gen_images: Mapping[int, Form]) -> Derivation:
    """Derivation extension of a map on generators (images given as forms)."""
    table = {}
    for i, form in gen_images.items():
        if form.ambient != ambient:
            raise AmbientMismatch(f"image of e{i} has ambient {form.ambient} != {ambient}")
        table[i] = form.terms
    return Derivation(ambient, table)


@lru_cache(maxsize=None)
def basis(n: int, k: int) -> tuple[Monomial, ...]:
    """All k-subsets of {1..n} in lexicographic order of the index tuples."""
    _check_ambient(n)
    if not 0 <= k <= n:
        raise ValueError(f"topological degree {k} outside 0..{n}")
    return tuple(
        Monomial(_mask_from_indices(c, n), n) for c in combinations(range(1, n + 1), k)
    )


@lru_cache(maxsize=None)
def _graded_buckets(n: int, k: int) -> dict[int, tuple[Monomial, ...]]:
    buckets: dict[int, list[Monomial]] = {}
    for mono in basis(n, k):
        buckets.setdefault(mono.degree, []).append(mono)
    return {m: tuple(v) for m, v in sorted(buckets.items())}


def basis_graded(n: int, k: int, m: int) -> tuple[Monomial, ...]:
    """The k-monomials of degree m (index sum), lexicographically ordered.

    Empty whenever m is outside [k(k+1)/2, kn - k(k-1)/2].
    """
    return _graded_buckets(n, k).get(m, ())


def graded_masks(n: int, k: int) -> dict[int, tuple[Monomial, ...]]:
    """Degree -> monomials bucketing of basis(n, k); keys ascending."""
    return _graded_buckets(n, k)


def matrix_of(
    op: Derivation,
    domain: Sequence[Monomial],
    codomain: Sequence[Monomial],
) -> BitMatrix:
    """Matrix of ``op`` with columns indexed by ``domain``, rows by ``codomain``.

    Column j holds the coordinates of op(domain[j]).  Raises
    ImageOutsideCodomain when an image term is not a codomain element,
    which always indicates a grading bookkeeping bug upstream.
    """
    position = {mono.mask: r for r, mono in enumerate(codomain)}
    columns = []
    for mono in domain:
        bits = 0
        for t in op.apply_mask(mono.mask):
            r = position.get(t)
            if r is None:
                raise ImageOutsideCodomain(
                    f"image term {Monomial(t, op.ambient)} of {mono} not in codomain"
                )
            bits |= 1 << r
        columns.append(bits)
    return BitMatrix.from_columns(len(codomain), columns)


_TERM_SPLIT = "+"


def parse_form(text: str, ambient: int) -> Form:
    """Parse the textual syntax ``e1^e6 + e3^e4`` (also ``0`` and ``1``).

    Caret is the wedge, plus the GF(2) sum; term order and whitespace are
    irrelevant.  Round-trips with ``str(form)``.
    """
    _check_ambient(ambient)
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty form expression")
    masks: list[int] = []
    for term in compact.split(_TERM_SPLIT):
        if not term:
            raise ValueError(f"empty term in {text!r}")
        if term == "0":
            continue
        if term == "1":
            masks.append(0)
            continue
        indices = []
        for factor in term.split("^"):
            if not factor.startswith("e") or not factor[1:].isdigit():
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            indices.append(int(factor[1:]))
        masks.append(_mask_from_indices(indices, ambient))
    return Form(ambient, masks)
