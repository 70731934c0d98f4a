"""Finite abelian groups as explicit products of cyclic factors.

A group is a tuple of cyclic moduli [n1, ..., nd]; elements are coordinate
tuples reduced modulo the factors.  Every element also has a canonical integer
index given by mixed-radix (row-major) encoding over the factors in the order
given, which is what bitmapped element sets and all serialized artifacts use.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import config
from .primes import check_distinct_primes

__all__ = [
    "GroupSpec",
    "GroupElement",
    "ElementSet",
    "CrtSplit",
    "make_group",
    "crt_split",
    "parse_group_literal",
]


@dataclass(frozen=True)
class GroupElement:
    """An element of a product group, as a tuple of reduced coordinates."""

    coords: tuple[int, ...]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True)
class GroupSpec:
    """Product of cyclic groups Z_{n1} x ... x Z_{nd}."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        if not self.moduli:
            raise ValueError("a group needs at least one cyclic factor")
        for n in self.moduli:
            if not isinstance(n, int) or n < 2:
                raise ValueError(f"cyclic factor {n!r} must be an int >= 2")
        if self.order > config.INDEX_TYPE_MAX:
            raise ValueError(
                f"group order {self.order} does not fit the platform index type"
            )

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def strides(self) -> tuple[int, ...]:
        acc, out = 1, []
        for n in reversed(self.moduli):
            out.append(acc)
            acc *= n
        return tuple(reversed(out))

    # -- element construction ------------------------------------------------

    def element(self, coords: Sequence[int]) -> GroupElement:
        if len(coords) != self.rank:
            raise ValueError(
                f"dimension mismatch: got {len(coords)} coords for rank {self.rank}"
            )
        return GroupElement(tuple(c % n for c, n in zip(coords, self.moduli)))

    def zero(self) -> GroupElement:
        return GroupElement((0,) * self.rank)

    def index(self, g: GroupElement) -> int:
        """Canonical mixed-radix index of an element."""
        self._check(g)
        return sum(c * s for c, s in zip(g.coords, self.strides))

    def from_index(self, idx: int) -> GroupElement:
        if not 0 <= idx < self.order:
            raise ValueError(f"index {idx} out of range for order {self.order}")
        coords = []
        for s, n in zip(self.strides, self.moduli):
            coords.append((idx // s) % n)
        return GroupElement(tuple(coords))

    def elements(self) -> Iterator[GroupElement]:
        for idx in range(self.order):
            yield self.from_index(idx)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check(a)
        self._check(b)
        return GroupElement(
            tuple((x + y) % n for x, y, n in zip(a.coords, b.coords, self.moduli))
        )

    def neg(self, a: GroupElement) -> GroupElement:
        self._check(a)
        return GroupElement(tuple((-x) % n for x, n in zip(a.coords, self.moduli)))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.add(a, self.neg(b))

    def scalar_mul(self, c: int, a: GroupElement) -> GroupElement:
        """c*a for any integer c; each coordinate is reduced mod its factor."""
        self._check(a)
        return GroupElement(tuple((c * x) % n for x, n in zip(a.coords, self.moduli)))

    def _check(self, g: GroupElement) -> None:
        if len(g.coords) != self.rank:
            raise ValueError(
                f"dimension mismatch: element has {len(g.coords)} coords, "
                f"group rank is {self.rank}"
            )
        for c, n in zip(g.coords, self.moduli):
            if not 0 <= c < n:
                raise ValueError(f"coordinate {c} out of range for modulus {n}")

    # -- vectorized index helpers --------------------------------------------

    def indices_to_coords(self, idx: np.ndarray) -> np.ndarray:
        """(N,) indices -> (N, rank) coordinate array."""
        return np.stack(
            np.unravel_index(np.asarray(idx, dtype=np.int64), self.moduli), axis=-1
        )

    def coords_to_indices(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords, dtype=np.int64)
        return np.ravel_multi_index(
            tuple(coords[..., i] % n for i, n in enumerate(self.moduli)), self.moduli
        ).astype(np.int64)

    def negate_indices(self, idx: np.ndarray) -> np.ndarray:
        coords = self.indices_to_coords(idx)
        neg = (-coords) % np.asarray(self.moduli, dtype=np.int64)
        return self.coords_to_indices(neg)

    # -- formatting ----------------------------------------------------------

    @property
    def literal(self) -> str:
        """Canonical text form: Z(7), Z(3)^4, Z(2)xZ(3)xZ(5), ..."""
        parts = []
        i = 0
        while i < self.rank:
            j = i
            while j < self.rank and self.moduli[j] == self.moduli[i]:
                j += 1
            run = j - i
            parts.append(f"Z({self.moduli[i]})" + (f"^{run}" if run > 1 else ""))
            i = j
        return "x".join(parts)

    def __str__(self) -> str:
        return self.literal


def make_group(moduli: Sequence[int]) -> GroupSpec:
    """Build a product group from a list of cyclic moduli (each >= 2)."""
    return GroupSpec(tuple(int(n) for n in moduli))


_LITERAL_PART = re.compile(r"^(Zm?)\((\d+)\)(?:\^(\d+))?$")


def parse_group_literal(text: str) -> GroupSpec:
    """Parse a group literal: "Z(7)", "Z(3)^4", "Z(2)xZ(3)", "Zm(15015)".

    The Zm(...) form denotes a single cyclic group whose modulus is expected to
    be squarefree; pair it with crt_split to get the coordinate view.
    """
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty group literal")
    moduli: list[int] = []
    for part in text.split("x"):
        mobj = _LITERAL_PART.match(part)
        if not mobj:
            raise ValueError(f"bad group literal component {part!r}")
        kind, n, power = mobj.group(1), int(mobj.group(2)), mobj.group(3)
        if kind == "Zm" and power is not None:
            raise ValueError("Zm(...) does not take a power")
        moduli.extend([n] * (int(power) if power else 1))
    return make_group(moduli)


# ---------------------------------------------------------------------------
# Element sets
# ---------------------------------------------------------------------------


class ElementSet:
    """A subset of a group, stored as a dense bitmap over canonical indices.

    Mutation is single-writer: build the set, then freeze() it before sharing.
    The serialized form is a run-length-encoded bitmap with a header recording
    the group literal, so files are portable across machines.
    """

    def __init__(self, group: GroupSpec, bits: np.ndarray | None = None):
        if group.order > config.MATERIALIZE_CAP:
            raise ValueError(
                f"group order {group.order} exceeds the materialization cap "
                f"{config.MATERIALIZE_CAP}"
            )
        self.group = group
        if bits is None:
            bits = np.zeros(group.order, dtype=bool)
        else:
            bits = np.asarray(bits, dtype=bool)
            if bits.shape != (group.order,):
                raise ValueError("bitmap length does not match group order")
            bits = bits.copy()
        self._bits = bits
        self._frozen = False

    # -- constructors --------------------------------------------------------

    @classmethod
    def empty(cls, group: GroupSpec) -> "ElementSet":
        return cls(group)

    @classmethod
    def full(cls, group: GroupSpec) -> "ElementSet":
        return cls(group, np.ones(group.order, dtype=bool))

    @classmethod
    def from_indices(cls, group: GroupSpec, indices: Iterable[int]) -> "ElementSet":
        s = cls(group)
        idx = np.asarray(list(indices) if not isinstance(indices, np.ndarray) else indices,
                         dtype=np.int64)
        if idx.size:
            if idx.min() < 0 or idx.max() >= group.order:
                raise ValueError("element index out of range")
            s._bits[idx] = True
        return s

    @classmethod
    def from_elements(cls, group: GroupSpec, elems: Iterable[GroupElement]) -> "ElementSet":
        return cls.from_indices(group, [group.index(e) for e in elems])

    @classmethod
    def from_mask(cls, group: GroupSpec, mask: np.ndarray) -> "ElementSet":
        return cls(group, mask)

    # -- mutation ------------------------------------------------------------

    def _writable(self):
        if self._frozen:
            raise ValueError("ElementSet is frozen")

    def add(self, g: GroupElement) -> None:
        self._writable()
        self._bits[self.group.index(g)] = True

    def discard(self, g: GroupElement) -> None:
        self._writable()
        self._bits[self.group.index(g)] = False

    def freeze(self) -> "ElementSet":
        self._frozen = True
        self._bits.setflags(write=False)
        return self

    # -- queries -------------------------------------------------------------

    @property
    def count(self) -> int:
        return int(self._bits.sum())

    def __len__(self) -> int:
        return self.count

    def contains_index(self, idx: int) -> bool:
        return bool(self._bits[idx])

    def __contains__(self, g: GroupElement) -> bool:
        return bool(self._bits[self.group.index(g)])

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self._bits).astype(np.int64)

    def elements(self) -> list[GroupElement]:
        return [self.group.from_index(int(i)) for i in self.indices()]

    def mask(self) -> np.ndarray:
        return self._bits

    # -- set algebra (returns new frozen-able sets) --------------------------

    def _same_group(self, other: "ElementSet"):
        if self.group != other.group:
            raise ValueError("element sets live in different groups")

    def union(self, other: "ElementSet") -> "ElementSet":
        self._same_group(other)
        return ElementSet(self.group, self._bits | other._bits)

    def intersection(self, other: "ElementSet") -> "ElementSet":
        self._same_group(other)
        return ElementSet(self.group, self._bits & other._bits)

    def difference(self, other: "ElementSet") -> "ElementSet":
        self._same_group(other)
        return ElementSet(self.group, self._bits & ~other._bits)

    def negated(self) -> "ElementSet":
        """The set {-a : a in self}."""
        out = np.zeros_like(self._bits)
        idx = self.indices()
        if idx.size:
            out[self.group.negate_indices(idx)] = True
        return ElementSet(self.group, out)

    def symmetrized_without_zero(self) -> "ElementSet":
        """self | (-self), with the identity removed."""
        s = self.union(self.negated())
        s._bits[0] = False
        return s

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.group == other.group and bool(np.array_equal(self._bits, other._bits))

    def __repr__(self) -> str:
        return f"ElementSet({self.group.literal}, count={self.count})"

    # -- serialization -------------------------------------------------------

    FORMAT_TAG = "BITS1"

    def to_rle_text(self) -> str:
        """Header line with the group literal, then value:length runs."""
        runs = []
        bits = self._bits
        n = bits.size
        i = 0
        while i < n:
            v = bits[i]
            j = i + 1
            # np.argmax on the boolean flip finds the run end in C speed
            flip = np.flatnonzero(bits[i:] != v)
            j = i + (int(flip[0]) if flip.size else n - i)
            runs.append(f"{int(v)}:{j - i}")
            i = j
        return f"{self.FORMAT_TAG} {self.group.literal}\n" + " ".join(runs) + "\n"

    @classmethod
    def from_rle_text(cls, text: str) -> "ElementSet":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty bitset file")
        header = lines[0].split(None, 1)
        if len(header) != 2 or header[0] != cls.FORMAT_TAG:
            raise ValueError(f"bad bitset header {lines[0]!r}")
        group = parse_group_literal(header[1])
        bits = np.zeros(group.order, dtype=bool)
        pos = 0
        for tok in " ".join(lines[1:]).split():
            v, sep, ln = tok.partition(":")
            if sep != ":" or v not in ("0", "1"):
                raise ValueError(f"bad run token {tok!r}")
            length = int(ln)
            if length < 0 or pos + length > group.order:
                raise ValueError("run lengths exceed group order")
            if v == "1":
                bits[pos:pos + length] = True
            pos += length
        if pos != group.order:
            raise ValueError(f"runs cover {pos} of {group.order} elements")
        return cls(group, bits)

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(self.to_rle_text())

    @classmethod
    def load(cls, path) -> "ElementSet":
        with open(path, "r", encoding="ascii") as fh:
            return cls.from_rle_text(fh.read())


# ---------------------------------------------------------------------------
# Chinese remainder splitting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrtSplit:
    """Isomorphism Z_m ~ Z_{p1} x ... x Z_{pn} for squarefree m = p1*...*pn."""

    m: int
    primes: tuple[int, ...]

    def __post_init__(self):
        check_distinct_primes(self.primes)
        if math.prod(self.primes) != self.m:
            raise ValueError(
                f"product of primes {self.primes} is {math.prod(self.primes)}, not {self.m}"
            )

    @property
    def product_group(self) -> GroupSpec:
        return make_group(self.primes)

    @property
    def line_group(self) -> GroupSpec:
        return make_group([self.m])

    def to_coords(self, x: int) -> tuple[int, ...]:
        x %= self.m
        return tuple(x % p for p in self.primes)

    def to_scalar(self, residues: Sequence[int]) -> int:
        if len(residues) != len(self.primes):
            raise ValueError("residue tuple has wrong length")
        x = 0
        for r, p in zip(residues, self.primes):
            big = self.m // p
            x = (x + (r % p) * big * pow(big, -1, p)) % self.m
        return x

    def coords_table(self) -> np.ndarray:
        """(m, n) residue table; requires m within the materialization cap."""
        if self.m > config.MATERIALIZE_CAP:
            raise ValueError(f"m={self.m} exceeds the materialization cap")
        xs = np.arange(self.m, dtype=np.int64)
        return np.stack([xs % p for p in self.primes], axis=1)

    def index_maps(self) -> tuple[np.ndarray, np.ndarray]:
        """(to_product, to_line): inverse index maps between Z_m and the product.

        to_product[x] is the mixed-radix index of the residue vector of x;
        to_line[i] recovers x from a product-group index i.
        """
        tab = self.coords_table()
        to_product = self.product_group.coords_to_indices(tab)
        to_line = np.empty(self.m, dtype=np.int64)
        to_line[to_product] = np.arange(self.m, dtype=np.int64)
        return to_product, to_line


def crt_split(m: int, primes: Sequence[int]) -> CrtSplit:
    """Validated CRT split of Z_m along an explicit list of prime factors."""
    return CrtSplit(int(m), tuple(int(p) for p in primes))
