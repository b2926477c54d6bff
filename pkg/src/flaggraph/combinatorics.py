"""Subsets of [n] as bit masks, flags, and the counting primitives built on them.

A subset of [n] = {1, ..., n} is an ``int`` whose bit ``i - 1`` is set when
element ``i`` is a member. A flag is a tuple of such masks ordered by size, so
``flag[0]`` is the smallest member of the chain and ``flag[-1]`` the largest.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from flaggraph.errors import ParameterError

MAX_N = 28

Subset = int
Flag = tuple[int, ...]
FlagType = tuple[int, ...]


def check_ground(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParameterError(f"ground set size must be an integer, got {n!r}")
    if not 1 <= n <= MAX_N:
        raise ParameterError(f"ground set size must lie in 1..{MAX_N}, got {n}")
    return n


def check_type(n: int, sizes: Iterable[int]) -> FlagType:
    """Validate a flag type for [n] and return it as a sorted tuple.

    Sizes may be given in any order but must be distinct, nonempty, and proper
    (strictly between 0 and n).
    """
    check_ground(n)
    raw = list(sizes)
    T = tuple(sorted(raw))
    if not T:
        raise ParameterError("flag type must be nonempty")
    if len(set(T)) != len(T):
        raise ParameterError(f"flag type has repeated sizes: {raw}")
    if T[0] < 1 or T[-1] > n - 1:
        raise ParameterError(f"flag type sizes must lie in 1..{n - 1}, got {raw}")
    return T


def full_mask(n: int) -> int:
    return (1 << n) - 1


def subset(members: Iterable[int]) -> Subset:
    """Mask of a collection of 1-based elements."""
    mask = 0
    for i in members:
        if i < 1:
            raise ParameterError(f"elements are 1-based, got {i}")
        mask |= 1 << (i - 1)
    return mask


def members(mask: Subset) -> tuple[int, ...]:
    """Sorted 1-based members of a mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(mask: Subset) -> int:
    return mask.bit_count()


def complement(n: int, mask: Subset) -> Subset:
    return full_mask(n) ^ mask


def binomial(m: int, k: int) -> int:
    """m choose k, with 0 returned whenever k < 0 or k > m."""
    if m < 0:
        raise ParameterError(f"binomial needs m >= 0, got {m}")
    if k < 0 or k > m:
        return 0
    return comb(m, k)


def enumerate_subsets(n: int, k: int) -> list[Subset]:
    """All k-subsets of [n] in lexicographic order of their sorted member lists."""
    if n < 0 or not 0 <= k <= n:
        raise ParameterError(f"need 0 <= k <= n, got n={n}, k={k}")
    return [subset(c) for c in combinations(range(1, n + 1), k)]


@lru_cache(maxsize=None)
def _subset_ranks(n: int, k: int) -> dict[Subset, int]:
    return {s: r for r, s in enumerate(enumerate_subsets(n, k))}


def subset_rank(n: int, mask: Subset) -> int:
    """Position of ``mask`` within ``enumerate_subsets(n, |mask|)``."""
    return _subset_ranks(n, mask.bit_count())[mask]


def _chains_below(top: Subset, sizes: Sequence[int]) -> list[tuple[int, ...]]:
    # chains inside ``top`` with the given ascending sizes, lexicographic by the
    # rank of the largest member first
    if not sizes:
        return [()]
    elems = members(top)
    out = []
    for c in combinations(elems, sizes[-1]):
        s = subset(c)
        for lower in _chains_below(s, sizes[:-1]):
            out.append(lower + (s,))
    return out


@lru_cache(maxsize=64)
def _flags(n: int, T: FlagType) -> tuple[Flag, ...]:
    out = []
    for top in enumerate_subsets(n, T[-1]):
        for lower in _chains_below(top, T[:-1]):
            out.append(lower + (top,))
    return tuple(out)


def enumerate_flags(n: int, sizes: Iterable[int]) -> list[Flag]:
    """Every flag of the given type, in canonical vertex order.

    Flags are sorted by the tuple (rank of largest member, rank of next, ...,
    rank of smallest member), ranks taken within ``enumerate_subsets``. The
    recursion emits them in that order directly: lexicographic order on
    subsets of a fixed top set agrees with the global order.
    """
    T = check_type(n, sizes)
    return list(_flags(n, T))


def flag_count(n: int, sizes: Iterable[int]) -> int:
    """Number of flags of the given type: C(n,t_r) C(t_r,t_{r-1}) ... C(t_2,t_1)."""
    T = check_type(n, sizes)
    count = binomial(n, T[-1])
    for lo, hi in zip(T, T[1:]):
        count *= binomial(hi, lo)
    return count


def flag_type(f: Flag) -> FlagType:
    return tuple(x.bit_count() for x in f)


def is_flag(n: int, f: Sequence[Subset]) -> bool:
    """Whether ``f`` is a strict chain of nonempty proper subsets of [n], ascending."""
    full = full_mask(n)
    for x in f:
        if x <= 0 or x & ~full or x == full:
            return False
    return all(a != b and a & b == a for a, b in zip(f, f[1:]))


def complement_type(n: int, sizes: Iterable[int]) -> FlagType:
    T = check_type(n, sizes)
    return tuple(sorted(n - t for t in T))


def complement_flag(n: int, f: Flag) -> Flag:
    """Chain of complements, reordered ascending; an involution on flags of [n]."""
    full = full_mask(n)
    return tuple(full ^ x for x in reversed(f))


def format_subset(mask: Subset) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


def format_flag(f: Flag) -> str:
    return "⊂".join(format_subset(x) for x in f)
