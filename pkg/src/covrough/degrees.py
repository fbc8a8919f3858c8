"""Repeat degrees and core blocks.

The membership repeat degree of an element counts the blocks it belongs to;
the common block repeat degree of a pair counts the blocks containing both.
The core block of an element x, when it exists, is the unique block that
contains x and equals the intersection of all blocks containing x.
"""

from __future__ import annotations

from dataclasses import dataclass

from .setsys import Block, Covering


@dataclass(frozen=True)
class DegreeProfile:
    """Full degree tables of a covering.

    ``membership`` maps each element to its membership repeat degree;
    ``common`` maps every ordered pair to its common block repeat degree
    (the table is symmetric and its diagonal equals ``membership``).
    """

    membership: dict[str, int]
    common: dict[tuple[str, str], int]


@dataclass(frozen=True)
class CoreBlockAssignment:
    """Core block of each element (``None`` where no core block exists) and
    the set of blocks that are the core block of at least one element."""

    per_element: dict[str, Block | None]
    core_blocks: frozenset[Block]


def membership_repeat_degree(c: Covering, x: str) -> int:
    """Number of blocks of ``c`` containing ``x``; at least 1."""
    i = c.universe.index(x)
    return sum(1 for b in c.blocks if b.bits >> i & 1)


def common_block_repeat_degree(c: Covering, x: str, y: str) -> int:
    """Number of blocks of ``c`` containing both ``x`` and ``y``.

    May be 0; for ``x == y`` it equals the membership repeat degree.
    """
    pair = 1 << c.universe.index(x) | 1 << c.universe.index(y)
    return sum(1 for b in c.blocks if b.bits & pair == pair)


def core_block(c: Covering, x: str) -> Block | None:
    """Core block of ``x``, or ``None`` when it has no core block.

    Computed as the intersection of all blocks containing ``x``, kept only
    when that intersection is itself a block of ``c``.  This agrees with
    the defining condition (x in K and every y in K shares all of x's
    blocks); the test suite compares both routes.
    """
    i = c.universe.index(x)
    inter = -1
    for b in c.blocks:
        if b.bits >> i & 1:
            inter &= b.bits
    return Block(c.universe, inter) if c.has_bits(inter) else None


def core_block_assignment(c: Covering) -> CoreBlockAssignment:
    per = {x: core_block(c, x) for x in c.universe.names}
    return CoreBlockAssignment(
        per_element=per,
        core_blocks=frozenset(b for b in per.values() if b is not None),
    )


def non_core_blocks(c: Covering) -> list[Block]:
    """Blocks of ``c`` that are the core block of no element, in canonical
    order.  Empty for partitions."""
    cores = core_block_assignment(c).core_blocks
    return [b for b in c.blocks if b not in cores]


def degree_profile(c: Covering) -> DegreeProfile:
    """Materialize both degree tables; meant for reporting, not for point
    queries (the table is quadratic in the universe size)."""
    names = c.universe.names
    index_sets = {x: 0 for x in names}
    for j, b in enumerate(c.blocks):
        for i, x in enumerate(names):
            if b.bits >> i & 1:
                index_sets[x] |= 1 << j
    membership = {x: index_sets[x].bit_count() for x in names}
    common = {
        (x, y): (index_sets[x] & index_sets[y]).bit_count()
        for x in names
        for y in names
    }
    return DegreeProfile(membership=membership, common=common)
