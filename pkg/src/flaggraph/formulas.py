"""Closed-form counts and automorphism group orders for general position graphs.

Binomial convention: the source writes ``C^k_m`` for "m choose k" (the chosen
count is the superscript). Every expression below is transcribed as
``binomial(m, k)``; docstrings give both forms so the mapping can be audited.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import factorial
from typing import Iterable

from flaggraph.combinatorics import (
    Flag,
    binomial,
    check_ground,
    check_type,
    complement_type,
    flag_count,
)
from flaggraph.errors import ParameterError


@dataclass(frozen=True)
class PairShape:
    """Statistics of a flag pair f={A,B}, g={C,D} with |A|=|C|=a, |B|=|D|=b."""

    union_a: int
    inter_b: int
    contained: bool

    @classmethod
    def of(cls, f: Flag, g: Flag) -> "PairShape":
        A, B = f
        C, D = g
        u = A | C
        i = B & D
        return cls(u.bit_count(), i.bit_count(), u & i == u)


class MaxCase(str, Enum):
    TOP_SHARED = "TopShared"
    BOTTOM_SHARED = "BottomShared"
    BOTH = "Both"


def _check_two_level(n: int, a: int, b: int) -> None:
    check_ground(n)
    if not (a + b + 1 <= n and 2 * a < n < 2 * b):
        raise ParameterError(
            f"need a+b+1 <= n and a < n/2 < b, got n={n}, a={a}, b={b}")


def common_count_closed(n: int, a: int, b: int, shape: PairShape) -> int:
    """Common neighbours of two flags of type {a,b}, from their pair shape.

    Source form ``C^a_{n-2b+|B∩D|} C^{b+|B∩D|-n}_{|B∩D|-|A∪C|}``, i.e.
    ``binomial(n-2b+i, a) * binomial(i-u, b+i-n)`` with u=|A∪C|, i=|B∩D|.
    Infeasible shapes give 0.
    """
    _check_two_level(n, a, b)
    if not shape.contained:
        return 0
    top = n - 2 * b + shape.inter_b
    free = shape.inter_b - shape.union_a
    if top < 0 or free < 0:
        return 0
    return binomial(top, a) * binomial(free, b + shape.inter_b - n)


def n_max(n: int, a: int, b: int) -> tuple[int, MaxCase]:
    """Largest common-neighbour count over distinct flag pairs, and which pairs attain it.

    top-shared value   ``C^a_{n-b-1} C^{2b-n-1}_{b-a-1}`` = binomial(n-b-1, a) binomial(b-a-1, 2b-n-1)
    bottom-shared value ``C^a_{n-b} C^{2b-n}_{b-a-1}``    = binomial(n-b, a) binomial(b-a-1, 2b-n)
    """
    _check_two_level(n, a, b)
    top = binomial(n - b - 1, a) * binomial(b - a - 1, 2 * b - n - 1)
    bottom = binomial(n - b, a) * binomial(b - a - 1, 2 * b - n)
    if 3 * b > 2 * n:
        return top, MaxCase.TOP_SHARED
    if 3 * b < 2 * n:
        return bottom, MaxCase.BOTTOM_SHARED
    if top != bottom:
        raise ArithmeticError(f"maximum forms disagree at n={n}, a={a}, b={b}: {top} != {bottom}")
    return top, MaxCase.BOTH


def _check_second_max(n: int, a: int) -> int:
    check_ground(n)
    if n % 3:
        raise ParameterError(f"n must be divisible by 3, got {n}")
    b = 2 * n // 3
    if not 1 <= a <= n // 3 - 1:
        raise ParameterError(f"need 1 <= a <= n/3 - 1, got n={n}, a={a}")
    if b - a - 2 < 0:
        raise ParameterError(f"need b-a-2 >= 0, got n={n}, a={a}")
    return b


def n_second_max(n: int, a: int) -> int:
    """Second largest common-neighbour count for type {a, 2n/3}.

    ``C^a_{n-b-1} C^{2b-n-1}_{b-a-2}`` = binomial(n-b-1, a) binomial(b-a-2, 2b-n-1).
    """
    b = _check_second_max(n, a)
    return binomial(n - b - 1, a) * binomial(b - a - 2, 2 * b - n - 1)


def sm_count_shared_a(n: int, a: int) -> int:
    """|SM(f,g)| for f={A,B}, g={A,C} with |B∩C| = b-1: a(2n/3-a)(n-a-1) + a."""
    b = _check_second_max(n, a)
    return a * (b - a) * (n - a - 1) + a


def sm_count_shared_b(n: int, a: int) -> int:
    """|SM(x,y)| for x={D,E}, y={F,E} with |D∩F| = a-1: (n/3)(2n/3-a)(2n/3-1) + n/3."""
    b = _check_second_max(n, a)
    third = n // 3
    return third * (b - a) * (b - 1) + third


def sm_difference(n: int, a: int) -> int:
    """Factored difference (a - n/3)(1 - (2n/3 - a)(a - 2n/3 + 1)) of the two SM counts."""
    b = _check_second_max(n, a)
    return (a - n // 3) * (1 - (b - a) * (a - b + 1))


def matching_block_count(n: int, a: int, b: int) -> int:
    """Number of edges m = C(n,b) C(b,a) / 2 of the perfect matching Γ(n,{a,b}), a+b=n."""
    check_ground(n)
    if not (1 <= a < b and a + b == n):
        raise ParameterError(f"need 1 <= a < b and a+b = n, got n={n}, a={a}, b={b}")
    return binomial(n, b) * binomial(b, a) // 2


def matching_order(n: int, a: int, b: int) -> int:
    """|Aut| = 2^m m! of a perfect matching with m edges."""
    m = matching_block_count(n, a, b)
    return 2 ** m * factorial(m)


def small_type_order(n: int, sizes: Iterable[int]) -> int:
    """(m!)^C(n,t_r) n! for a type with every size below n/2.

    m counts the flags sharing a fixed top member: flags of type
    {t_1,...,t_{r-1}} inside a t_r-set, or 1 when the type has one size.
    """
    T = check_type(n, sizes)
    if 2 * T[-1] >= n:
        raise ParameterError(f"largest size must be < n/2, got n={n}, type={T}")
    m = flag_count(T[-1], T[:-1]) if len(T) > 1 else 1
    return factorial(m) ** binomial(n, T[-1]) * factorial(n)


def large_type_order(n: int, sizes: Iterable[int]) -> int:
    """Group order for a type with every size above n/2, via the complement type.

    Also evaluated directly as (m!)^C(n,t_1) n! with m the number of flags of
    the original type whose smallest member is a fixed t_1-set; the two must agree.
    """
    T = check_type(n, sizes)
    if 2 * T[0] <= n:
        raise ParameterError(f"smallest size must be > n/2, got n={n}, type={T}")
    reduced = small_type_order(n, complement_type(n, T))
    above = tuple(t - T[0] for t in T[1:])
    m = flag_count(n - T[0], above) if above else 1
    direct = factorial(m) ** binomial(n, T[0]) * factorial(n)
    if direct != reduced:
        raise ArithmeticError(f"complement reduction disagrees: {reduced} != {direct}")
    return reduced


def predicted_aut_order(n: int, sizes: Iterable[int]) -> int | None:
    """Automorphism group order claimed by the closed-form results, or None.

    None means no result applies: a size equal to n/2, or a type that
    straddles n/2 outside the two-size cases.
    """
    T = check_type(n, sizes)
    if any(2 * t == n for t in T):
        return None
    if len(T) == 1:
        return factorial(n)
    if 2 * T[-1] < n:
        return small_type_order(n, T)
    if 2 * T[0] > n:
        return large_type_order(n, T)
    if len(T) == 2:
        a, b = T
        if a + b == n:
            return matching_order(n, a, b)
        return factorial(n)
    return None
