from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from flaggraph import ParameterError
from flaggraph.combinatorics import enumerate_flags
from flaggraph.graphs import build_gpg
from flaggraph.permgroup import (
    DELTA,
    OMEGA,
    SIGMA,
    BlockPartition,
    Permutation,
    StabilizerChain,
    apply_to_flag,
    canonical_partition,
    closure_order,
    group_order,
    induced_block_action,
    induced_symmetric_generators,
    induced_vertex_perm,
    is_automorphism,
    is_block_system,
    kernel_order,
    symmetric_generators,
)


def perms(degree):
    return st.permutations(list(range(degree))).map(lambda p: Permutation(tuple(p)))


def test_permutation_basics():
    p = Permutation.from_cycles(4, [(0, 1, 2)])
    assert p.images == (1, 2, 0, 3)
    assert p.cycles() == [(0, 1, 2)]
    assert p.fixed_points() == [3]
    assert (p * p.inverse()).is_identity()
    q = Permutation.from_cycles(4, [(0, 3)])
    # q applied first
    assert (p * q)(0) == p(q(0)) == 3
    with pytest.raises(ParameterError):
        Permutation((0, 0, 1))


@given(st.integers(1, 7).flatmap(lambda d: st.tuples(perms(d), perms(d), perms(d))))
def test_group_axioms(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)
    assert (p * q).inverse() == q.inverse() * p.inverse()


@pytest.mark.parametrize("n", range(1, 9))
def test_symmetric_group_order(n):
    assert group_order(symmetric_generators(n) or [Permutation.identity(n)]) == factorial(n)


def test_small_group_orders():
    assert group_order([Permutation.from_cycles(6, [(0, 1, 2, 3, 4, 5)])]) == 6
    assert group_order([]) == 1
    # dihedral group of the square
    rot = Permutation.from_cycles(4, [(0, 1, 2, 3)])
    ref = Permutation.from_cycles(4, [(1, 3)])
    assert group_order([rot, ref]) == 8
    # A_5 from two even permutations
    g = Permutation.from_cycles(5, [(0, 1, 2)])
    h = Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])
    assert group_order([g, h]) == 60


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 8).flatmap(lambda d: st.lists(perms(d), min_size=1, max_size=3)))
def test_chain_order_matches_closure(gens):
    chain = StabilizerChain(gens[0].degree, gens)
    assert chain.order() == closure_order(gens, limit=50_000)
    for g in gens:
        assert chain.contains(g)


def test_chain_membership_and_elements():
    rot = Permutation.from_cycles(4, [(0, 1, 2, 3)])
    ref = Permutation.from_cycles(4, [(1, 3)])
    chain = StabilizerChain(4, [rot, ref])
    elements = set(chain.elements())
    assert len(elements) == 8
    for p in permutations(range(4)):
        assert chain.contains(p) == (p in elements)


def test_closure_limit():
    with pytest.raises(ParameterError):
        closure_order(symmetric_generators(8), limit=100)


def test_induced_perm_acts_on_flags():
    n, T = 5, (1, 3)
    flags = enumerate_flags(n, T)
    g = Permutation.from_cycles(5, [(0, 2, 4)])
    p = induced_vertex_perm(n, T, g)
    for i, f in enumerate(flags):
        assert flags[p[i]] == apply_to_flag(g, f)


@pytest.mark.parametrize("n,T", [(5, (1, 3)), (6, (1, 4)), (7, (1, 5)), (7, (2, 4)), (6, (1, 2))])
def test_induced_generators_are_automorphisms(n, T):
    G = build_gpg(n, T)
    gens = induced_symmetric_generators(n, T)
    assert all(is_automorphism(G, g) for g in gens)
    assert group_order(gens) == factorial(n)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_induced_action_is_a_homomorphism(data):
    n, T = data.draw(st.sampled_from([(5, (1, 3)), (6, (1, 4)), (4, (1, 2, 3))]))
    p = data.draw(perms(n))
    q = data.draw(perms(n))
    lhs = induced_vertex_perm(n, T, p * q)
    assert lhs == induced_vertex_perm(n, T, p) * induced_vertex_perm(n, T, q)


@pytest.mark.parametrize("n,T", [(4, (1, 3)), (5, (1, 3)), (5, (2,))])
def test_induced_action_is_faithful(n, T):
    images = {induced_vertex_perm(n, T, Permutation(p)) for p in permutations(range(n))}
    assert len(images) == factorial(n)


def test_is_automorphism_rejects():
    G = build_gpg(5, (1, 3))
    assert not is_automorphism(G, Permutation.from_cycles(G.vertex_count, [(0, 1)]))
    with pytest.raises(ParameterError):
        is_automorphism(G, (0, 1))


def test_canonical_partitions():
    sigma = canonical_partition(5, (1, 3), SIGMA)
    omega = canonical_partition(5, (1, 3), OMEGA)
    assert sigma.sizes() == [6] * 5
    assert omega.sizes() == [3] * 10
    delta = canonical_partition(4, (1, 3), DELTA)
    assert delta.sizes() == [2] * 6
    with pytest.raises(ParameterError):
        canonical_partition(5, (1, 3), DELTA)
    with pytest.raises(ParameterError):
        canonical_partition(5, (1, 3), "Bogus")


def test_block_partition_validation():
    with pytest.raises(ParameterError):
        BlockPartition.from_cells([[0, 1], [1, 2]])
    with pytest.raises(ParameterError):
        BlockPartition.from_cells([[0, 1], [3]])


@pytest.mark.parametrize("n,T,kind,cells", [
    (5, (1, 3), OMEGA, 10), (7, (1, 5), SIGMA, 7), (6, (1, 4), SIGMA, 6), (6, (1, 4), OMEGA, 15),
])
def test_block_systems_under_sn(n, T, kind, cells):
    gens = induced_symmetric_generators(n, T)
    P = canonical_partition(n, T, kind)
    assert len(P.cells) == cells
    assert is_block_system(gens, P)
    assert group_order(induced_block_action(gens, P)) == factorial(n)
    assert kernel_order(gens, P) == 1


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from([0, 1]), min_size=1, max_size=12))
def test_blocks_closed_under_random_words(word):
    n, T = 7, (1, 5)
    gens = induced_symmetric_generators(n, T)
    g = Permutation.identity(gens[0].degree)
    for i in word:
        g = gens[i] * g
    assert is_block_system([g], canonical_partition(n, T, SIGMA))


def test_non_block_system_detected():
    gens = induced_symmetric_generators(5, (1, 3))
    P = canonical_partition(5, (1, 3), OMEGA)
    cells = [list(c) for c in P.cells]
    cells[0][0], cells[1][0] = cells[1][0], cells[0][0]
    bad = BlockPartition.from_cells(cells)
    assert not is_block_system(gens, bad)
    with pytest.raises(ParameterError):
        induced_block_action(gens, bad)
