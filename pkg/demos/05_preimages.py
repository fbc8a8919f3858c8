# The inverse problem: which coverings induce a given family as their
# neighborhoods?  A family has preimages exactly when it equals its own
# neighborhoods, and then it is one of its own preimages; distinct
# coverings can share the same image.
# Run with:  python3 demos/05_preimages.py

from covrough import (
    Universe,
    cov,
    is_cov_fixed_point,
    make_covering,
    preimages,
)

u = Universe(("1", "2", "3"))

# The singleton partition is induced by many coverings: any family whose
# pairwise intersections isolate every element.
target = make_covering(u, [["1"], ["2"], ["3"]])
sources = preimages(target)
print(f"{target} has {len(sources)} preimages, e.g.:")
for c in sources[:5]:
    print("  ", c, "->", cov(c))

# A family that is not a fixed point cannot be anybody's neighborhoods.
d = make_covering(u, [["1", "2"], ["2", "3"]])
print(f"\n{d}: fixed point? {is_cov_fixed_point(d)}")
print("preimages:", preimages(d))

# Capping the search is useful when only existence matters.
print("\nfirst two preimages of the singleton partition:")
for c in preimages(target, limit=2):
    print("  ", c)
