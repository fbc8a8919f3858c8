# Reducible blocks carry no information of their own: they are unions of
# other blocks.  Removing them never changes the neighborhoods.  The
# coverings with nothing to remove and a core block for every element are
# the invariable ones: exactly those equal to their own neighborhoods.
# Run with:  python3 demos/03_reduction_and_invariability.py

from covrough import (
    Universe,
    cov,
    is_invariable,
    is_reducible_element,
    make_covering,
    reduct,
)

u = Universe(("1", "2", "3"))
c = make_covering(u, [["1"], ["2"], ["3"], ["1", "2"]])
print("covering:", c)

for b in c:
    witness = is_reducible_element(c, b)
    if witness is None:
        print(f"  {b}: irreducible")
    else:
        print(f"  {b}: reducible = union of", ", ".join(str(w) for w in witness))

r = reduct(c)
print("reduct:", r)
print("neighborhoods preserved?", cov(r) == cov(c))

# The verdict object explains *why* a covering fails to be invariable.
for subsets in [
    [["1"], ["1", "2"], ["3"]],       # invariable, yet not a partition
    [["1", "2"], ["2", "3"]],          # element 2 has no core block
    [["1"], ["2"], ["3"], ["1", "2"]], # has a reducible block
]:
    c = make_covering(u, subsets)
    v = is_invariable(c)
    print(f"\n{c}\n  invariable? {v.invariable}")
    if v.reducible_blocks:
        print("  reducible blocks:", ", ".join(str(b) for b in v.reducible_blocks))
    if v.elements_without_core:
        print("  elements without a core block:", ", ".join(v.elements_without_core))
    print("  Cov(C) = C?", cov(c) == c)
