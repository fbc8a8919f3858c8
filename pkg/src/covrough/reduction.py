"""Reducible elements, covering reduction, and invariable coverings.

A block is reducible when it equals the union of other blocks of the
covering.  Any such union can only use proper subsets of the block, so the
witness search takes the union of all proper-subset blocks and compares it
with the block itself; that is sound and complete and avoids enumerating
subfamilies.

An invariable covering is an irreducible covering in which every element
has a core block.  These are exactly the coverings equal to their own
neighborhoods; the oracle module checks that equivalence exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degrees import core_block_assignment
from .errors import BlockNotInCovering
from .setsys import Block, Covering


@dataclass(frozen=True)
class ReducibilityReport:
    """Witness (or ``None``) for every block, plus the overall verdict."""

    per_block: dict[Block, tuple[Block, ...] | None]
    is_irreducible_covering: bool


@dataclass(frozen=True)
class InvariabilityVerdict:
    """Outcome of the invariable-covering test with the failing detail.

    ``reducible_blocks`` lists blocks breaking irreducibility;
    ``elements_without_core`` lists elements that have no core block.
    Both are empty exactly when the covering is invariable.
    """

    invariable: bool
    reducible_blocks: tuple[Block, ...]
    elements_without_core: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.invariable


def _witness_bits(block_bits: list[int], k: int) -> int:
    """Union of all blocks that are proper subsets of mask ``k``."""
    union = 0
    for m in block_bits:
        if m != k and m & ~k == 0:
            union |= m
    return union


def is_reducible_element(c: Covering, k: Block) -> tuple[Block, ...] | None:
    """Witness subfamily whose union is ``k``, or ``None`` if irreducible.

    The witness is the family of all blocks of ``c`` that are proper
    subsets of ``k``; it is returned only when its union is exactly ``k``.
    """
    if k not in c:
        raise BlockNotInCovering(f"block {k} is not in the covering")
    witness = [b for b in c.blocks if b.bits != k.bits and b.issubset(k)]
    union = 0
    for b in witness:
        union |= b.bits
    return tuple(witness) if union == k.bits else None


def reducibility_report(c: Covering) -> ReducibilityReport:
    per = {b: is_reducible_element(c, b) for b in c.blocks}
    return ReducibilityReport(
        per_block=per,
        is_irreducible_covering=all(w is None for w in per.values()),
    )


def reduct(c: Covering) -> Covering:
    """Remove reducible blocks until none remain.

    Removal order is fixed (lowest canonical index first) for determinism;
    the result does not depend on the order, which the test suite verifies
    by exploring every removal order on small universes.
    """
    bits = [b.bits for b in c.blocks]
    changed = True
    while changed:
        changed = False
        for i, k in enumerate(bits):
            if _witness_bits(bits, k) == k:
                del bits[i]
                changed = True
                break
    return Covering(c.universe, tuple(Block(c.universe, m) for m in bits))


def is_invariable(c: Covering) -> InvariabilityVerdict:
    """Decide whether ``c`` is invariable: irreducible and every element
    has a core block."""
    bits = [b.bits for b in c.blocks]
    reducible = tuple(
        b for b in c.blocks if _witness_bits(bits, b.bits) == b.bits
    )
    assignment = core_block_assignment(c)
    missing = tuple(
        x for x in c.universe.names if assignment.per_element[x] is None
    )
    return InvariabilityVerdict(
        invariable=not reducible and not missing,
        reducible_blocks=reducible,
        elements_without_core=missing,
    )
