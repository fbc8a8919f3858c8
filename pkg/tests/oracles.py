"""Brute-force reference implementations used as independent test oracles.

Deliberately naive: plain frozensets, literal subfamily enumeration, and
definitional scans.  Nothing here shares code with the package's bit-vector
paths, so agreement between the two is meaningful.
"""

from itertools import chain, combinations
from math import comb

from covrough import common_block_repeat_degree, membership_repeat_degree


def powerset(items):
    s = list(items)
    return chain.from_iterable(combinations(s, r) for r in range(len(s) + 1))


def family_of(c):
    """A covering as a frozenset of frozensets of labels."""
    return frozenset(frozenset(b.members()) for b in c.blocks)


def cov_bruteforce(c):
    """Neighborhoods family via per-element frozenset intersections."""
    fam = family_of(c)
    out = set()
    for x in c.universe.names:
        containing = [k for k in fam if x in k]
        out.add(frozenset.intersection(*containing))
    return frozenset(out)


def is_union_of_others(fam, member):
    """Literal subfamily enumeration of the reducibility condition."""
    others = [k for k in fam if k != member]
    for sub in powerset(others):
        if sub and frozenset().union(*sub) == member:
            return True
    return False


def coverings_bruteforce(labels):
    """Every covering of the given labels, as frozensets of frozensets."""
    universe = frozenset(labels)
    subsets = [frozenset(s) for s in powerset(universe) if s]
    for fam in powerset(subsets):
        if fam and frozenset().union(*fam) == universe:
            yield frozenset(fam)


def covering_count_closed_form(n):
    """Inclusion-exclusion over the elements missed by the union."""
    return sum(
        (-1) ** k * comb(n, k) * 2 ** (2 ** (n - k) - 1) for k in range(n + 1)
    )


def core_block_definitional(c, x):
    """Definitional core-block scan: every block containing x whose members
    all share the full set of x's blocks, measured through the degree
    functions.  Asserts uniqueness and returns the block or None."""
    deg = membership_repeat_degree(c, x)
    hits = [
        b
        for b in c.blocks
        if x in b
        and all(common_block_repeat_degree(c, x, y) == deg for y in b.members())
    ]
    assert len(hits) <= 1, f"core block of {x!r} is not unique in {c}"
    return hits[0] if hits else None
