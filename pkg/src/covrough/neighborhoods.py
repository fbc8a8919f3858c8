"""Neighborhoods induced by a covering.

The neighborhood of an element is the intersection of all blocks containing
it; the neighborhoods of a covering form the deduplicated family of all
element neighborhoods, itself a covering.  A covering equals its own
neighborhoods exactly when it is a fixed point of this operator, and the
operator is idempotent, so the fixed points are exactly the families that
arise as neighborhoods of anything.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .reduction import _witness_bits
from .setsys import Block, Covering


@dataclass(frozen=True)
class NeighborhoodMap:
    """Per-element neighborhoods plus their deduplicated family."""

    covering: Covering
    per_element: dict[str, Block]
    family: Covering


class RejectReason(enum.Enum):
    """Cheap necessary-condition failures for being a neighborhoods family."""

    TOO_MANY_BLOCKS = "more blocks than universe elements"
    REDUCIBLE_BLOCK = "a block is a union of other blocks"


def _neighborhood_bits(c: Covering) -> list[int]:
    """Intersection of the containing blocks, per element index."""
    inter = [-1] * c.universe.size
    for b in c.blocks:
        bits = b.bits
        while bits:
            low = bits & -bits
            inter[low.bit_length() - 1] &= b.bits
            bits ^= low
    return inter


def neighborhood(c: Covering, x: str) -> Block:
    """Intersection of all blocks of ``c`` containing ``x``."""
    i = c.universe.index(x)
    inter = -1
    for b in c.blocks:
        if b.bits >> i & 1:
            inter &= b.bits
    return Block(c.universe, inter)


def neighborhood_map(c: Covering) -> NeighborhoodMap:
    inter = _neighborhood_bits(c)
    per = {
        name: Block(c.universe, bits)
        for name, bits in zip(c.universe.names, inter)
    }
    family = Covering(
        c.universe, tuple(Block(c.universe, m) for m in sorted(set(inter)))
    )
    return NeighborhoodMap(covering=c, per_element=per, family=family)


def cov(c: Covering) -> Covering:
    """The neighborhoods of ``c``: the deduplicated family of all element
    neighborhoods, in canonical order.  Always a valid covering."""
    masks = sorted(set(_neighborhood_bits(c)))
    return Covering(c.universe, tuple(Block(c.universe, m) for m in masks))


def is_cov_fixed_point(c: Covering) -> bool:
    """True iff the neighborhoods of ``c`` equal ``c`` itself, i.e. iff
    ``c`` arises as the neighborhoods of some covering."""
    return cov(c) == c


def quick_reject_neighborhoods(c: Covering) -> RejectReason | None:
    """Necessary-condition screen, cheaper than computing the neighborhoods.

    Returns the first failed condition (block count checked before
    reducibility) or ``None`` when neither fails.  A returned reason
    guarantees that ``c`` is not a fixed point; ``None`` guarantees
    nothing.
    """
    if len(c.blocks) > c.universe.size:
        return RejectReason.TOO_MANY_BLOCKS
    bits = [b.bits for b in c.blocks]
    if any(_witness_bits(bits, k) == k for k in bits):
        return RejectReason.REDUCIBLE_BLOCK
    return None
