import pytest
from hypothesis import given, settings, strategies as st

from flaggraph import BudgetExceeded, ParameterError
from flaggraph.combinatorics import complement_flag, enumerate_flags, subset
from flaggraph.graphs import (
    build_aig,
    build_gpg,
    build_kneser,
    common_neighbor_count,
    connected_components,
    is_general_position,
    label_map,
    to_dot,
    twin_classes,
    verify_isomorphism,
)
from flaggraph.permgroup import top_member_partition


def F(*sets):
    return tuple(subset(s) for s in sets)


def brute_common(n, T, f, g):
    # independent of the adjacency rows: scan all flags with the definition
    return sum(1 for h in enumerate_flags(n, T)
               if is_general_position(n, f, h) and is_general_position(n, g, h))


def test_general_position_examples():
    assert is_general_position(5, F([1], [1, 2, 3]), F([4], [2, 3, 4, 5]))
    assert not is_general_position(5, F([1], [1, 2, 3]), F([2], [2, 4, 5]))
    assert not is_general_position(5, F([1], [1, 2, 3]), F([1], [1, 2, 3]))


def test_gpg_matching_case():
    G = build_gpg(3, (1, 2))
    assert G.vertex_count == 6 and G.edge_count == 3
    assert all(G.degree(v) == 1 for v in range(6))


def test_gpg_4_12_is_three_k22():
    G = build_gpg(4, (1, 2))
    comps = connected_components(G)
    assert G.vertex_count == 12 and len(comps) == 3
    for comp in comps:
        # K_{2,2}: 4 vertices, all degree 2, two twin pairs
        assert len(comp) == 4 and all(G.degree(v) == 2 for v in comp)


@pytest.mark.parametrize("n,k,V,E", [(5, 2, 10, 15), (4, 2, 6, 3), (3, 2, 3, 0)])
def test_kneser(n, k, V, E):
    G = build_kneser(n, k)
    assert (G.vertex_count, G.edge_count) == (V, E)


def test_aig():
    G = build_aig(3, 1)
    assert (G.vertex_count, G.edge_count) == (3, 3)
    H = build_aig(4, 2)
    assert all(H.degree(v) == 4 for v in range(6))
    assert len(connected_components(H)) == 1


@pytest.mark.parametrize("n,k", [(4, 0), (4, 4), (0, 1)])
def test_subset_graph_domain(n, k):
    with pytest.raises(ParameterError):
        build_kneser(n, k)


def test_vertex_cap():
    with pytest.raises(BudgetExceeded):
        build_gpg(7, (2, 4), vertex_cap=100)
    assert build_gpg(7, (2, 4), vertex_cap=210).vertex_count == 210


@pytest.mark.parametrize("n,T", [(3, (1, 2)), (5, (1, 3)), (6, (1, 4)), (5, (2,)), (4, (1, 2, 3))])
def test_adjacency_symmetric_loop_free(n, T):
    G = build_gpg(n, T)
    for u in range(G.vertex_count):
        assert not G.has_edge(u, u)
        for v in G.neighbors(u):
            assert G.has_edge(v, u)


def test_common_neighbor_examples():
    G = build_gpg(3, (1, 2))
    u = 0
    (partner,) = G.neighbors(u)
    assert common_neighbor_count(G, u, partner) == 0

    G = build_gpg(7, (1, 5))
    f = F([1], [1, 2, 3, 4, 5])
    g = F([1], [1, 2, 3, 4, 6])
    u, v = G.vertex_of(f), G.vertex_of(g)
    assert common_neighbor_count(G, u, v) == brute_common(7, (1, 5), f, g) == 3

    G = build_gpg(5, (1, 3))
    f, g = F([1], [1, 2, 3]), F([2], [1, 2, 3])
    u, v = G.vertex_of(f), G.vertex_of(g)
    assert common_neighbor_count(G, u, v) == brute_common(5, (1, 3), f, g) == 2
    assert common_neighbor_count(G, u, u) == G.degree(u)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_common_neighbor_symmetric_and_matches_definition(data):
    n, T = data.draw(st.sampled_from([(5, (1, 3)), (6, (1, 4)), (5, (1, 2)), (4, (1, 2))]))
    G = build_gpg(n, T)
    u = data.draw(st.integers(0, G.vertex_count - 1))
    v = data.draw(st.integers(0, G.vertex_count - 1))
    c = common_neighbor_count(G, u, v)
    assert c == common_neighbor_count(G, v, u)
    assert c == brute_common(n, T, G.labels[u], G.labels[v])


@pytest.mark.parametrize("n,a", [(3, 1), (4, 1), (5, 2), (5, 1), (6, 2)])
def test_matching_partner_is_complement(n, a):
    G = build_gpg(n, (a, n - a))
    for v in range(G.vertex_count):
        assert G.neighbors(v) == [G.vertex_of(complement_flag(n, G.labels[v]))]


def test_components():
    assert len(connected_components(build_aig(5, 2))) == 1
    assert len(connected_components(build_kneser(4, 2))) == 3
    assert len(connected_components(build_gpg(4, (1, 2)))) == 3


def test_twin_classes():
    G = build_gpg(6, (1, 2))
    twins = twin_classes(G)
    assert len(twins) == 15 and all(len(c) == 2 for c in twins)
    assert sorted(map(tuple, twins)) == sorted(top_member_partition(6, (1, 2)).cells)
    assert len(twin_classes(build_gpg(5, (1, 3)))) == 30
    assert len(twin_classes(build_kneser(5, 2))) == 10


@pytest.mark.parametrize("n,T", [(5, (1,)), (6, (1, 2)), (7, (1, 2)), (7, (1, 3)), (7, (2, 3))])
def test_twins_are_top_member_classes(n, T):
    twins = twin_classes(build_gpg(n, T))
    assert sorted(map(tuple, twins)) == sorted(top_member_partition(n, T).cells)


def test_isomorphism_checks():
    G = build_gpg(7, (5,))
    K = build_kneser(7, 2)
    full = (1 << 7) - 1
    assert verify_isomorphism(G, K, label_map(G, K, lambda f: full ^ f[0]))
    assert verify_isomorphism(K, K, list(range(K.vertex_count)))
    A, B = build_gpg(5, (1, 3)), build_gpg(5, (2, 4))
    assert verify_isomorphism(A, B, label_map(A, B, lambda f: complement_flag(5, f)))
    # a transposition of two non-twin vertices breaks adjacency
    bad = list(range(A.vertex_count))
    bad[0], bad[1] = 1, 0
    assert not verify_isomorphism(A, A, bad)
    with pytest.raises(ParameterError):
        verify_isomorphism(A, B, [0, 1])


def test_dot_export_is_exact():
    dot = to_dot(build_gpg(3, (1, 2)))
    assert dot == (
        "graph G {\n"
        'v0 [label="{1}⊂{1,2}"]\n'
        'v1 [label="{2}⊂{1,2}"]\n'
        'v2 [label="{1}⊂{1,3}"]\n'
        'v3 [label="{3}⊂{1,3}"]\n'
        'v4 [label="{2}⊂{2,3}"]\n'
        'v5 [label="{3}⊂{2,3}"]\n'
        "v0 -- v5\n"
        "v1 -- v3\n"
        "v2 -- v4\n"
        "}\n")
    assert to_dot(build_gpg(3, (1, 2))) == dot
