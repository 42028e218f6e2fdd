"""Partition combinatorics: enumeration, monomial types, subpartitions with
their index sets, the part-raising and exponent-bump operators, and monomial
symmetric dual elements.

Partitions are tuples of weakly decreasing positive ints; () is the empty
partition.  The total order used everywhere is lexicographic on the part
sequences (zero-padded), which matches plain tuple comparison.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .fields import QQ
from .poly import DualElement


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> tuple[int, ...]:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"{parts} is not a partition")
    return parts


@lru_cache(maxsize=None)
def partitions_of(d: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of d in increasing lex order; len = P(d)."""
    if d < 0:
        raise ValueError("d must be >= 0")

    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(1, min(rest, maxpart) + 1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(sorted(gen(d, d)))


def partition_count(d: int) -> int:
    return len(partitions_of(d))


def monomial_type(exps) -> tuple[int, ...]:
    """Multiset of nonzero exponents, sorted decreasingly; type(1) = ()."""
    return tuple(sorted((e for e in exps if e > 0), reverse=True))


def subpartitions(lam) -> list[tuple[int, ...]]:
    """All submultisets of lam as partitions, () and lam included, lex sorted."""
    lam = check_partition(lam)
    values = sorted(set(lam), reverse=True)
    mults = [lam.count(v) for v in values]
    out = set()
    for counts in product(*(range(m + 1) for m in mults)):
        gamma = []
        for v, c in zip(values, counts):
            gamma.extend([v] * c)
        out.add(tuple(sorted(gamma, reverse=True)))
    return sorted(out)


def index_set(lam, gamma) -> tuple[int, ...]:
    """T(lam, gamma): 1-based positions of gamma's parts inside lam, chosen
    greedily smallest-first."""
    lam = check_partition(lam)
    gamma = check_partition(gamma)
    used = set()
    T = []
    for g in gamma:
        k = None
        for i, p in enumerate(lam):
            if p == g and (i + 1) not in used:
                k = i + 1
                break
        if k is None:
            raise ValueError(f"{gamma} is not a subpartition of {lam}")
        used.add(k)
        T.append(k)
    return tuple(T)


def subpartitions_with_index_sets(lam):
    """Pairs (gamma, T(lam, gamma)) for every subpartition gamma of lam."""
    return [(g, index_set(lam, g)) for g in subpartitions(lam)]


def raise_part(p, i: int) -> tuple[int, ...]:
    """The partition p with part i incremented (re-sorted), 1 <= i <= #p;
    i = #p + 1 appends a new part equal to 1."""
    p = check_partition(p)
    if not 1 <= i <= len(p) + 1:
        raise ValueError(f"index {i} out of range for partition of length {len(p)}")
    if i == len(p) + 1:
        return p + (1,)
    parts = list(p)
    parts[i - 1] += 1
    return tuple(sorted(parts, reverse=True))


def changed_part_index(alpha, i: int) -> int:
    """For i in the support of exponent vector alpha: the unique 1-based
    position where the types of alpha and alpha + e_i differ."""
    if alpha[i] == 0:
        raise ValueError(f"index {i} not in the support of {alpha}")
    p = monomial_type(alpha)
    bumped = list(alpha)
    bumped[i] += 1
    q = monomial_type(bumped)
    for k in range(len(p)):
        if p[k] != q[k]:
            return k + 1
    raise AssertionError("types cannot agree after a bump")


def monomial_symmetric(lam, n: int, field=QQ) -> DualElement:
    """m_lam: the sum of all distinct dual monomials of type lam."""
    lam = check_partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more parts than n={n}")
    terms = {}
    one = field.one

    values = sorted(set(lam), reverse=True)
    groups = [[p for p in lam if p == v] for v in values]

    def assign(exps, remaining_groups, free_positions):
        if not remaining_groups:
            terms[tuple(exps)] = one
            return
        group = remaining_groups[0]
        from itertools import combinations

        for positions in combinations(free_positions, len(group)):
            for pos in positions:
                exps[pos] = group[0]
            assign(exps, remaining_groups[1:], [p for p in free_positions if p not in positions])
            for pos in positions:
                exps[pos] = 0

    assign([0] * n, groups, list(range(n)))
    return DualElement(n, terms, field)


def count_monomials_of_type(lam, n: int) -> int:
    """Number of monomials of type lam in n variables."""
    lam = check_partition(lam)
    values = sorted(set(lam), reverse=True)
    out = 1
    free = n
    from math import comb

    for v in values:
        m = lam.count(v)
        out *= comb(free, m)
        free -= m
    return out
