from math import factorial

import pytest
from hypothesis import given, strategies as st

from flaggraph import ParameterError
from flaggraph.combinatorics import subset
from flaggraph.formulas import (
    MaxCase,
    PairShape,
    common_count_closed,
    large_type_order,
    matching_block_count,
    matching_order,
    n_max,
    n_second_max,
    predicted_aut_order,
    sm_count_shared_a,
    sm_count_shared_b,
    sm_difference,
    small_type_order,
)
from flaggraph.graphs import build_gpg, common_neighbor_count
from flaggraph.verify import second_max_bruteforce, second_max_shape

INSTANCES = [(5, 1, 3), (6, 1, 4), (7, 1, 5), (7, 2, 4)]


def distinct_pair_counts(G):
    return [common_neighbor_count(G, u, v)
            for u in range(G.vertex_count) for v in range(u + 1, G.vertex_count)]


@pytest.mark.parametrize("n,a,b", INSTANCES + [(8, 1, 5), (8, 2, 5), (9, 2, 6)])
def test_closed_form_matches_adjacency(n, a, b):
    G = build_gpg(n, (a, b))
    V = G.vertex_count
    for u in range(V):
        f = G.labels[u]
        for v in range(V):
            expected = common_neighbor_count(G, u, v)
            assert common_count_closed(n, a, b, PairShape.of(f, G.labels[v])) == expected


def test_closed_form_examples():
    F = lambda *s: tuple(subset(x) for x in s)
    f = F([1], [1, 2, 3, 4, 5])
    g = F([1], [1, 2, 3, 4, 6])
    assert PairShape.of(f, g) == PairShape(1, 4, True)
    assert common_count_closed(7, 1, 5, PairShape.of(f, g)) == 3
    # A ∪ C not inside B ∩ D: no common neighbours
    assert common_count_closed(7, 1, 5, PairShape(2, 4, False)) == 0


@pytest.mark.parametrize("n,a,b", [(4, 1, 3), (6, 3, 4), (6, 1, 3), (5, 2, 2)])
def test_closed_form_domain(n, a, b):
    with pytest.raises(ParameterError):
        common_count_closed(n, a, b, PairShape(a, b, True))


@pytest.mark.parametrize("n,a,b,value,case", [
    (5, 1, 3, 2, MaxCase.BOTTOM_SHARED),
    (6, 1, 4, 2, MaxCase.BOTH),
    (7, 1, 5, 3, MaxCase.TOP_SHARED),
    (7, 2, 4, 3, MaxCase.BOTTOM_SHARED),
])
def test_n_max(n, a, b, value, case):
    assert n_max(n, a, b) == (value, case)
    assert max(distinct_pair_counts(build_gpg(n, (a, b)))) == value


@given(st.integers(3, 28).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(1, (n - 1) // 2), st.integers(n // 2 + 1, n - 1))))
def test_n_max_forms_agree_when_both_apply(nab):
    n, a, b = nab
    if a + b + 1 > n:
        return
    # the two forms must coincide whenever b = 2n/3; otherwise n_max raises
    value, case = n_max(n, a, b)
    assert value >= 0
    assert (case is MaxCase.BOTH) == (3 * b == 2 * n)


@pytest.mark.parametrize("n,a", [(6, 1), (9, 1), (9, 2)])
def test_second_max_value(n, a):
    G = build_gpg(n, (a, 2 * n // 3))
    assert n_second_max(n, a) == second_max_bruteforce(G)


def test_second_max_values():
    assert n_second_max(6, 1) == 1
    assert n_second_max(9, 1) == 6
    assert n_second_max(9, 2) == 1


@pytest.mark.parametrize("n,a", [(6, 1), (9, 2)])
def test_second_max_pairs_with_containment(n, a):
    G = build_gpg(n, (a, 2 * n // 3))
    second = n_second_max(n, a)
    V = G.vertex_count
    for u in range(V):
        for v in range(u + 1, V):
            achieved = common_neighbor_count(G, u, v) == second
            assert achieved == second_max_shape(G, u, v, contained=True)


def test_size_statistics_alone_do_not_force_second_max():
    # |A∪C| = 2 and |B∪D| = 5, but A∪C is not inside B∩D
    G = build_gpg(6, (1, 4))
    f = tuple(subset(x) for x in ([1], [1, 2, 3, 4]))
    g = tuple(subset(x) for x in ([5], [1, 2, 3, 5]))
    u, v = G.vertex_of(f), G.vertex_of(g)
    assert second_max_shape(G, u, v)
    assert not second_max_shape(G, u, v, contained=True)
    assert common_neighbor_count(G, u, v) == 0 != n_second_max(6, 1)


@pytest.mark.parametrize("n,a,top,bottom", [(6, 1, 13, 20), (9, 1, 36, 78), (9, 2, 50, 63)])
def test_sm_polynomials(n, a, top, bottom):
    assert sm_count_shared_a(n, a) == top
    assert sm_count_shared_b(n, a) == bottom
    assert top - bottom == sm_difference(n, a)


@given(st.integers(2, 9).map(lambda k: 3 * k).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(1, n // 3 - 1))))
def test_sm_difference_factorisation(na):
    n, a = na
    assert sm_count_shared_a(n, a) - sm_count_shared_b(n, a) == sm_difference(n, a)
    assert sm_difference(n, a) != 0


@pytest.mark.parametrize("n,a", [(7, 1), (6, 2), (6, 0), (3, 1)])
def test_second_max_domain(n, a):
    with pytest.raises(ParameterError):
        n_second_max(n, a)


@pytest.mark.parametrize("n,a,b,m", [(3, 1, 2, 3), (4, 1, 3, 6), (5, 2, 3, 15), (6, 2, 4, 45)])
def test_matching_counts(n, a, b, m):
    assert matching_block_count(n, a, b) == m
    assert matching_order(n, a, b) == 2 ** m * factorial(m)
    G = build_gpg(n, (a, b))
    assert G.edge_count == m and G.vertex_count == 2 * m


def test_group_order_values():
    assert matching_order(3, 1, 2) == 48
    assert matching_order(4, 1, 3) == 46080
    assert small_type_order(6, (1, 2)) == 23592960
    assert large_type_order(6, (4, 5)) == 23592960
    assert small_type_order(5, (2,)) == 120
    assert small_type_order(7, (1, 2)) == 2 ** 21 * 5040


@pytest.mark.parametrize("n,T", [(6, (1, 3)), (4, (1, 2)), (7, (1, 4))])
def test_small_type_domain(n, T):
    with pytest.raises(ParameterError):
        small_type_order(n, T)


@given(st.integers(3, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(1, (n - 1) // 2), min_size=1, max_size=3))))
def test_complement_reduction_consistent(nT):
    n, T = nT
    big = sorted(n - t for t in T)
    assert large_type_order(n, big) == small_type_order(n, T)


def test_predicted_orders():
    assert predicted_aut_order(7, (2, 4)) == 5040
    assert predicted_aut_order(5, (2, 3)) == matching_order(5, 2, 3)
    assert predicted_aut_order(6, (4, 5)) == 23592960
    assert predicted_aut_order(4, (1, 2)) is None
    assert predicted_aut_order(7, (1, 3, 5)) is None
