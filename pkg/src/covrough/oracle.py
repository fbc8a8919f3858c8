"""Exhaustive enumeration of coverings of small universes and machine
verification of the structural laws relating neighborhoods, repeat degrees,
core blocks, reduction, and invariability.

Enumeration walks integer bitmasks over the 2**n - 1 nonempty subsets of an
n-element universe: each family mask selects a set of subsets, and families
whose union is the whole universe are kept.  The order is deterministic
(family mask ascending) and the same scheme is simple enough to
re-implement independently, which the test suite does.

The law checker works on raw bit vectors rather than on the public types;
the public operations are exercised against it by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import UniverseTooLarge
from .neighborhoods import cov, is_cov_fixed_point
from .reduction import is_invariable
from .setsys import Block, Covering, Universe, covering_to_dict, is_partition

# Enumeration is capped where exhaustion stops being a desk-scale job:
# n=5 already yields on the order of 2**31 candidate families.
MAX_ENUMERATION_SIZE = 5
MAX_VERIFY_SIZE = 4
MAX_PREIMAGE_SIZE = 4


@dataclass(frozen=True)
class CensusRow:
    """One enumerated covering with its classification flags and image."""

    covering: Covering
    is_partition: bool
    is_irreducible: bool
    is_invariable: bool
    is_cov_fixed_point: bool
    cov_image: Covering


@dataclass(frozen=True)
class VerificationSummary:
    """Counts per classification flag plus every law violation found.

    ``violations`` holds ``(covering, law-name)`` pairs and must be empty
    on a passing run.
    """

    universe_size: int
    total_coverings: int
    partitions: int
    irreducible: int
    invariable: int
    fixed_points: int
    violations: tuple[tuple[Covering, str], ...]


def summary_to_dict(s: VerificationSummary) -> dict:
    return {
        "n": s.universe_size,
        "total": s.total_coverings,
        "partitions": s.partitions,
        "irreducible": s.irreducible,
        "invariable": s.invariable,
        "fixed_points": s.fixed_points,
        "violations": [
            {"covering": covering_to_dict(c), "law": law} for c, law in s.violations
        ],
    }


def default_universe(n: int) -> Universe:
    """Universe labeled "1".."n", matching the worked examples."""
    return Universe(tuple(str(i) for i in range(1, n + 1)))


def _mask_families(n: int) -> Iterator[tuple[int, ...]]:
    """All covering families as ascending tuples of subset bit vectors.

    Family mask bit j selects the subset whose bit vector is j + 1.
    """
    full = (1 << n) - 1
    for fam in range(1, 1 << full):
        masks = []
        union = 0
        f = fam
        while f:
            low = f & -f
            m = low.bit_length()  # subset mask encoded as bit position + 1
            masks.append(m)
            union |= m
            f ^= low
        if union == full:
            yield tuple(masks)


def _covering_from_masks(universe: Universe, masks: tuple[int, ...]) -> Covering:
    return Covering(universe, tuple(Block(universe, m) for m in masks))


def enumerate_coverings(n: int) -> Iterator[Covering]:
    """Yield every covering of an n-element universe exactly once, in
    deterministic order.  Capped at n = 5."""
    yield from enumerate_coverings_over(default_universe(_check_size(n)))


def enumerate_coverings_over(universe: Universe) -> Iterator[Covering]:
    """Same enumeration over a caller-supplied universe (size capped)."""
    n = _check_size(universe.size)
    for masks in _mask_families(n):
        yield _covering_from_masks(universe, masks)


def _check_size(n: int) -> int:
    if n < 1:
        raise ValueError("universe size must be at least 1")
    if n > MAX_ENUMERATION_SIZE:
        raise UniverseTooLarge(
            f"exhaustive enumeration is capped at {MAX_ENUMERATION_SIZE} "
            f"elements; got {n}"
        )
    return n


# --- raw bit-vector law checks ----------------------------------------------


def _element_tables(n: int, masks: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Per element: intersection of containing blocks, and the set of
    containing blocks as a bitmask over block indices."""
    nbh = [-1] * n
    blkidx = [0] * n
    for j, m in enumerate(masks):
        mm = m
        while mm:
            low = mm & -mm
            x = low.bit_length() - 1
            nbh[x] &= m
            blkidx[x] |= 1 << j
            mm ^= low
    return nbh, blkidx


def _cov_masks(n: int, masks: tuple[int, ...]) -> tuple[int, ...]:
    nbh, _ = _element_tables(n, masks)
    return tuple(sorted(set(nbh)))


def _reducible_flags(masks: tuple[int, ...]) -> list[bool]:
    """Per block: does the union of its proper-subset blocks rebuild it."""
    out = []
    for k in masks:
        union = 0
        for m in masks:
            if m != k and m & ~k == 0:
                union |= m
        out.append(union == k)
    return out


def _reduct_masks(masks: tuple[int, ...]) -> tuple[int, ...]:
    bits = list(masks)
    changed = True
    while changed:
        changed = False
        for i, k in enumerate(bits):
            union = 0
            for m in bits:
                if m != k and m & ~k == 0:
                    union |= m
            if union == k:
                del bits[i]
                changed = True
                break
    return tuple(bits)


def _no_union_ok(family: tuple[int, ...]) -> bool:
    """No member equals the union of a nonempty subfamily of the others,
    checked by literal subfamily enumeration."""
    fam = list(family)
    for i, target in enumerate(fam):
        others = fam[:i] + fam[i + 1 :]
        for pick in range(1, 1 << len(others)):
            union = 0
            p = pick
            while p:
                low = p & -p
                union |= others[low.bit_length() - 1]
                p ^= low
            if union == target:
                return False
    return True


def _core_scan(
    n: int, masks: tuple[int, ...], blkidx: list[int], lam: list[list[int]]
) -> tuple[list[int | None], bool]:
    """Definitional core-block scan: for each element, the blocks K with
    x in K whose every member shares all of x's blocks.  Returns the scan
    result per element and whether every scan found at most one block."""
    result: list[int | None] = [None] * n
    unique = True
    deg = [s.bit_count() for s in blkidx]
    for x in range(n):
        hits = []
        bi = blkidx[x]
        while bi:
            low = bi & -bi
            j = low.bit_length() - 1
            bi ^= low
            m = masks[j]
            good = True
            mm = m
            while mm:
                lo = mm & -mm
                y = lo.bit_length() - 1
                mm ^= lo
                if lam[x][y] != deg[x]:
                    good = False
                    break
            if good:
                hits.append(m)
        if len(hits) > 1:
            unique = False
        if hits:
            result[x] = hits[0]
    return result, unique


def _check_covering(
    n: int, masks: tuple[int, ...]
) -> tuple[bool, bool, bool, bool, list[str]]:
    """Run every law against one covering given as raw bit vectors.

    Returns (is_partition, is_irreducible, is_invariable, is_fixed_point,
    violated law names).
    """
    bad: list[str] = []
    nbh, blkidx = _element_tables(n, masks)
    deg = [s.bit_count() for s in blkidx]

    # every element sits inside its own neighborhood
    if any(not nbh[x] >> x & 1 for x in range(n)):
        bad.append("neighborhood-reflexive")

    # y in N(x) forces N(y) inside N(x); mutual membership forces equality
    nesting_ok = True
    for x in range(n):
        nx = nbh[x]
        mm = nx
        while mm:
            low = mm & -mm
            y = low.bit_length() - 1
            mm ^= low
            if nbh[y] & ~nx:
                nesting_ok = False
            if nx >> y & 1 and nbh[y] >> x & 1 and nbh[y] != nx:
                nesting_ok = False
    if not nesting_ok:
        bad.append("neighborhood-nesting")

    # pair degrees, via block-index sets and, independently, a direct scan
    lam = [[0] * n for _ in range(n)]
    consistent = True
    for x in range(n):
        for y in range(x, n):
            lam[x][y] = lam[y][x] = (blkidx[x] & blkidx[y]).bit_count()
            pair = (1 << x) | (1 << y)
            if lam[x][y] != sum(1 for m in masks if m & pair == pair):
                consistent = False
    if not consistent:
        bad.append("lambda-consistent")
    if any(lam[x][y] != lam[y][x] for x in range(n) for y in range(n)):
        bad.append("lambda-symmetric")
    if any(lam[x][x] != deg[x] for x in range(n)):
        bad.append("lambda-diagonal")
    if any(
        lam[x][y] > min(deg[x], deg[y]) for x in range(n) for y in range(n)
    ):
        bad.append("lambda-bounded")

    # degree equality versus literal equality of the two block sets
    for x in range(n):
        for y in range(n):
            same_sets = blkidx[x] & blkidx[y] == blkidx[x]
            if same_sets != (deg[x] == lam[x][y]):
                bad.append("degree-equality-iff-same-blocks")
                break
        else:
            continue
        break

    # core blocks: definitional scan against the intersection route
    maskset = set(masks)
    scan, unique = _core_scan(n, masks, blkidx, lam)
    if not unique:
        bad.append("core-block-unique")
    routes = [nbh[x] if nbh[x] in maskset else None for x in range(n)]
    if scan != routes:
        bad.append("core-block-routes-agree")
    for x in range(n):
        g = scan[x]
        if g is None:
            continue
        if g != nbh[x]:
            bad.append("core-block-is-neighborhood")
            break
        bi = blkidx[x]
        while bi:
            low = bi & -bi
            if g & ~masks[low.bit_length() - 1]:
                bad.append("core-block-minimal")
                bi = 0
                break
            bi ^= low

    core_set = {g for g in scan if g is not None}
    for m in masks:
        if m in core_set:
            continue
        if m.bit_count() <= 1:
            bad.append("non-core-block-structure")
            break
        mm = m
        while mm:
            low = mm & -mm
            if deg[low.bit_length() - 1] <= 1:
                bad.append("non-core-block-structure")
                mm = 0
                break
            mm ^= low

    reducible = _reducible_flags(masks)
    if any(r and masks[j] in core_set for j, r in enumerate(reducible)):
        bad.append("reducible-not-core")
    all_cored = all(g is not None for g in scan)
    if all_cored and any(
        not r and masks[j] not in core_set for j, r in enumerate(reducible)
    ):
        bad.append("all-cored-non-core-reducible")

    # classification flags and the fixed-point characterizations
    union = 0
    partition = True
    for m in masks:
        if union & m:
            partition = False
            break
        union |= m
    irreducible = not any(reducible)
    invariable = irreducible and all_cored
    covfam = tuple(sorted(set(nbh)))
    fixed = covfam == masks

    if partition and not fixed:
        bad.append("partition-fixed-point")
    if invariable != fixed:
        bad.append("invariable-iff-fixed-point")
    if invariable != (all_cored and all(m in core_set for m in masks)):
        bad.append("invariable-iff-blocks-all-core")

    # the neighborhoods family: no block is a union of the others, and the
    # operator is idempotent, so every image is a fixed point and every
    # fixed point is its own preimage
    if not _no_union_ok(covfam):
        bad.append("cov-no-union")
    if _cov_masks(n, covfam) != covfam:
        bad.append("cov-idempotent")

    # cheap necessary conditions never fire on a fixed point
    if fixed and (len(masks) > n or any(reducible)):
        bad.append("quick-reject-sound")

    if _cov_masks(n, _reduct_masks(masks)) != covfam:
        bad.append("reduct-preserves-neighborhoods")

    return partition, irreducible, invariable, fixed, bad


def verify_laws(n: int, allow_large: bool = False) -> VerificationSummary:
    """Check every law against every covering of an n-element universe.

    Streams the enumeration, so memory stays flat.  n = 5 is refused
    unless ``allow_large`` is set: the family space has about 2**31
    members and the run takes a very long time.
    """
    _check_size(n)
    if n > MAX_VERIFY_SIZE and not allow_large:
        raise UniverseTooLarge(
            f"full verification is capped at {MAX_VERIFY_SIZE} elements "
            f"by default; pass allow_large=True to run n={n} anyway"
        )
    universe = default_universe(n)
    total = partitions = irreducible = invariable = fixed_points = 0
    violations: list[tuple[Covering, str]] = []
    for masks in _mask_families(n):
        p, irr, inv, fix, bad = _check_covering(n, masks)
        total += 1
        partitions += p
        irreducible += irr
        invariable += inv
        fixed_points += fix
        for law in bad:
            violations.append((_covering_from_masks(universe, masks), law))
    return VerificationSummary(
        universe_size=n,
        total_coverings=total,
        partitions=partitions,
        irreducible=irreducible,
        invariable=invariable,
        fixed_points=fixed_points,
        violations=tuple(violations),
    )


def census(n: int) -> Iterator[CensusRow]:
    """Stream every covering with its classification flags, computed
    through the public operations (not the raw law checker)."""
    for c in enumerate_coverings(n):
        verdict = is_invariable(c)
        yield CensusRow(
            covering=c,
            is_partition=is_partition(c),
            is_irreducible=not verdict.reducible_blocks,
            is_invariable=verdict.invariable,
            is_cov_fixed_point=is_cov_fixed_point(c),
            cov_image=cov(c),
        )


def preimages(d: Covering, limit: int | None = None) -> list[Covering]:
    """All coverings whose neighborhoods equal ``d``, in enumeration order.

    Empty exactly when ``d`` is not a fixed point; when it is one, the
    result contains ``d`` itself.  Exhaustive search, capped at 4-element
    universes.
    """
    n = d.universe.size
    if n > MAX_PREIMAGE_SIZE:
        raise UniverseTooLarge(
            f"preimage search is exhaustive and capped at "
            f"{MAX_PREIMAGE_SIZE} elements; got {n}"
        )
    target = tuple(b.bits for b in d.blocks)
    found: list[Covering] = []
    for masks in _mask_families(n):
        if _cov_masks(n, masks) == target:
            found.append(_covering_from_masks(d.universe, masks))
            if limit is not None and len(found) >= limit:
                break
    return found
