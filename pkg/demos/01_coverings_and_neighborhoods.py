# Build coverings of a small universe and compute the neighborhoods they
# induce.  Run with:  python3 demos/01_coverings_and_neighborhoods.py

from covrough import (
    Universe,
    cov,
    covering_to_json,
    is_cov_fixed_point,
    is_partition,
    make_covering,
    neighborhood,
)

u = Universe(("1", "2", "3"))

# A covering is any family of nonempty subsets whose union is the universe.
# This one overlaps: the element 1 sits in two blocks.
c = make_covering(u, [["1"], ["1", "2"], ["3"]])
print("covering:", c)
print("is a partition?", is_partition(c))

# The neighborhood of an element is the intersection of all blocks that
# contain it: the tightest granule the covering can say about the element.
for x in u:
    print(f"  N({x}) = {neighborhood(c, x)}")

# Collecting the distinct neighborhoods gives a new covering.  For this
# family nothing changes: it already equals its own neighborhoods, even
# though it is not a partition.
print("Cov(C) =", cov(c))
print("Cov(C) = C?", is_cov_fixed_point(c))

# With a different overlap the neighborhoods genuinely shrink: the shared
# element 2 gets the granule {2}, which was not a block before.
d = make_covering(u, [["1", "2"], ["2", "3"]])
print("\ncovering:", d)
print("Cov(D) =", cov(d))
print("Cov(D) = D?", is_cov_fixed_point(d))

# Coverings round-trip through a one-line JSON file format.
print("\nfile form:", covering_to_json(c))
