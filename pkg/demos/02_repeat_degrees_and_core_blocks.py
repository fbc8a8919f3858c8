# Repeat degrees count how often elements (and pairs) recur across blocks;
# core blocks are the blocks that act as an element's exact granule.
# Run with:  python3 demos/02_repeat_degrees_and_core_blocks.py

from covrough import (
    Universe,
    common_block_repeat_degree,
    core_block,
    make_covering,
    membership_repeat_degree,
    neighborhood,
    non_core_blocks,
)

u = Universe(("1", "2", "3", "4"))
c = make_covering(u, [["1", "2"], ["1", "2", "3"], ["3", "4"]])
print("covering:", c)

# The membership repeat degree of x counts the blocks containing x.  In a
# partition it is 1 everywhere; overlaps push it up.
for x in u:
    print(f"  degree({x}) = {membership_repeat_degree(c, x)}")

# The pair version counts blocks containing both elements at once.
print("\npairs sharing blocks:")
for x, y in [("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")]:
    print(f"  lambda({x},{y}) = {common_block_repeat_degree(c, x, y)}")

# A block is the core block of x when it contains x and every one of its
# members shares all of x's blocks.  Equivalently: it is the intersection
# of all blocks containing x, provided that intersection is a block.
for x in u:
    g = core_block(c, x)
    n = neighborhood(c, x)
    print(f"  core({x}) = {str(g) if g else 'none':<8}  N({x}) = {n}")

# Element 3 has no core block: its neighborhood {3} is not listed.  And the
# wide middle block serves nobody as a core block.
print("\nblocks that are nobody's core block:", [str(b) for b in non_core_blocks(c)])
