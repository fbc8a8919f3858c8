"""Universes, blocks, and coverings of finite universes.

A ``Universe`` fixes an ordering of element labels.  A ``Block`` is a
nonempty subset of a universe stored as a bit vector (element index 0 is the
lowest bit).  A ``Covering`` is a duplicate-free family of blocks whose
union is the whole universe, kept in canonical order: ascending by bit
vector read as an integer.  All three types are immutable, so instances can
be shared between threads freely.

The covering file format lives here too::

    {"universe": ["1", "2", "3"], "blocks": [["1"], ["1", "2"], ["3"]]}

The ``universe`` list fixes the element indices; the writer emits blocks in
canonical order with the elements of each block in universe order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    DuplicateBlock,
    EmptyBlock,
    FileFormatError,
    InvalidUniverse,
    NotACover,
    UniverseTooLarge,
    UnknownElement,
)

# One machine word.  The exhaustive tooling never needs more than 5 elements;
# this cap only bounds the bit-vector representation for direct library use.
MAX_UNIVERSE_SIZE = 64


@dataclass(frozen=True)
class Universe:
    """Ordered, finite, nonempty collection of distinct element labels."""

    names: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        if not names:
            raise InvalidUniverse("a universe needs at least one element")
        if not all(isinstance(name, str) for name in names):
            raise InvalidUniverse("element labels must be strings")
        if len(set(names)) != len(names):
            raise InvalidUniverse("element labels must be pairwise distinct")
        if len(names) > MAX_UNIVERSE_SIZE:
            raise UniverseTooLarge(
                f"universe has {len(names)} elements; the bit-vector core "
                f"supports at most {MAX_UNIVERSE_SIZE}"
            )
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def full_bits(self) -> int:
        """Bit vector with every element present."""
        return (1 << len(self.names)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement(f"unknown element {label!r}") from None

    def block(self, labels: Iterable[str]) -> "Block":
        """Build a block from element labels (order and repeats ignored)."""
        bits = 0
        for label in labels:
            bits |= 1 << self.index(label)
        return Block(self, bits)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __str__(self) -> str:
        return "{" + ", ".join(self.names) + "}"


@dataclass(frozen=True)
class Block:
    """Nonempty subset of a universe, stored as a bit vector."""

    universe: Universe
    bits: int

    def __post_init__(self) -> None:
        if self.bits == 0:
            raise EmptyBlock("a block must be a nonempty subset")
        if self.bits < 0 or self.bits > self.universe.full_bits:
            raise UnknownElement(
                f"bit vector {self.bits:#x} does not fit a universe of "
                f"size {self.universe.size}"
            )

    def members(self) -> tuple[str, ...]:
        """Element labels of this block, in universe order."""
        return tuple(
            name for i, name in enumerate(self.universe.names) if self.bits >> i & 1
        )

    def issubset(self, other: "Block") -> bool:
        return self.bits & ~other.bits == 0

    def __contains__(self, label: object) -> bool:
        if not isinstance(label, str) or label not in self.universe:
            return False
        return self.bits >> self.universe.index(label) & 1 == 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return "{" + ", ".join(self.members()) + "}"


@dataclass(frozen=True)
class Covering:
    """Duplicate-free family of blocks whose union is the universe.

    The constructor validates and normalizes: blocks may arrive in any
    order and are stored sorted ascending by bit vector.
    """

    universe: Universe
    blocks: tuple[Block, ...]
    _bitset: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        blocks = tuple(sorted(self.blocks, key=lambda b: b.bits))
        union = 0
        seen: set[int] = set()
        for b in blocks:
            if b.universe != self.universe:
                raise UnknownElement(
                    f"block {b} belongs to a different universe {b.universe}"
                )
            if b.bits in seen:
                raise DuplicateBlock(f"block {b} appears twice")
            seen.add(b.bits)
            union |= b.bits
        if union != self.universe.full_bits:
            missing = [
                name
                for i, name in enumerate(self.universe.names)
                if not union >> i & 1
            ]
            raise NotACover(
                "union of blocks misses element(s): " + ", ".join(missing)
            )
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "_bitset", frozenset(seen))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __contains__(self, block: object) -> bool:
        return (
            isinstance(block, Block)
            and block.universe == self.universe
            and block.bits in self._bitset
        )

    def has_bits(self, bits: int) -> bool:
        """Membership test on a raw bit vector."""
        return bits in self._bitset

    def __str__(self) -> str:
        return "{" + ", ".join(str(b) for b in self.blocks) + "}"


def make_covering(universe: Universe, subsets: Iterable[Iterable[str]]) -> Covering:
    """Validate a family of label lists and return the canonical covering.

    Within one subset, label order and repeats do not matter; two subsets
    naming the same set of elements are an error rather than being merged.
    Raises ``EmptyBlock``, ``UnknownElement``, ``DuplicateBlock`` or
    ``NotACover``, with the offending block index in the message.
    """
    blocks: list[Block] = []
    seen: dict[int, int] = {}
    for i, labels in enumerate(subsets):
        bits = 0
        for label in labels:
            if label not in universe:
                raise UnknownElement(f"block #{i}: unknown element {label!r}")
            bits |= 1 << universe.index(label)
        if bits == 0:
            raise EmptyBlock(f"block #{i} is empty")
        if bits in seen:
            raise DuplicateBlock(f"blocks #{seen[bits]} and #{i} are identical")
        seen[bits] = i
        blocks.append(Block(universe, bits))
    return Covering(universe, tuple(blocks))


def is_partition(c: Covering) -> bool:
    """True iff the blocks are pairwise disjoint."""
    union = 0
    for b in c.blocks:
        if union & b.bits:
            return False
        union |= b.bits
    return True


def blocks_containing(c: Covering, x: str) -> list[Block]:
    """All blocks whose bit for ``x`` is set, in canonical order.

    Never empty: a covering covers every element.
    """
    i = c.universe.index(x)
    return [b for b in c.blocks if b.bits >> i & 1]


# --- covering file format ---------------------------------------------------


def covering_to_dict(c: Covering) -> dict:
    """JSON-ready form of a covering (canonical block order)."""
    return {
        "universe": list(c.universe.names),
        "blocks": [list(b.members()) for b in c.blocks],
    }


def covering_from_dict(data: object) -> Covering:
    """Parse the file-format dictionary, applying full validation."""
    if not isinstance(data, dict):
        raise FileFormatError("covering file must be a JSON object")
    try:
        universe_names = data["universe"]
        block_lists = data["blocks"]
    except KeyError as exc:
        raise FileFormatError(f"covering file is missing key {exc}") from None
    if not isinstance(universe_names, list) or not all(
        isinstance(n, str) for n in universe_names
    ):
        raise FileFormatError('"universe" must be a list of strings')
    if not isinstance(block_lists, list):
        raise FileFormatError('"blocks" must be a list')
    for i, b in enumerate(block_lists):
        if not isinstance(b, list) or not all(isinstance(x, str) for x in b):
            raise FileFormatError(f"block #{i} must be a list of strings")
    return make_covering(Universe(tuple(universe_names)), block_lists)


def covering_to_json(c: Covering) -> str:
    return json.dumps(covering_to_dict(c))


def covering_from_json(text: str) -> Covering:
    return covering_from_dict(json.loads(text))


def read_covering(path: str) -> Covering:
    with open(path, encoding="utf-8") as fh:
        return covering_from_dict(json.load(fh))


def write_covering(c: Covering, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(covering_to_json(c))
        fh.write("\n")
