"""General position graphs, Kneser graphs and almost identical graphs.

Adjacency is stored as one ``int`` bit-row per vertex, so common-neighbour
counts are a single AND plus popcount.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from flaggraph.combinatorics import (
    Flag,
    check_ground,
    check_type,
    enumerate_flags,
    enumerate_subsets,
    flag_count,
    format_flag,
    format_subset,
    full_mask,
    binomial,
)
from flaggraph.errors import BudgetExceeded, ParameterError

DEFAULT_VERTEX_CAP = 20_000

GPG = "GPG"
KNESER = "Kneser"
AIG = "AIG"


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..vertex_count-1``.

    ``labels[i]`` is the flag (a tuple of masks) of vertex ``i`` for general
    position graphs and the subset mask for Kneser/AIG graphs.
    """

    kind: str
    n: int
    params: tuple[int, ...]
    labels: tuple
    adj: tuple[int, ...]
    index: dict = field(compare=False, repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in ascending order."""
        out = []
        for i, row in enumerate(self.adj):
            for j in _bits(row >> (i + 1)):
                out.append((i, i + 1 + j))
        return out

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def vertex_of(self, label) -> int:
        return self.index[label]

    def label_str(self, v: int) -> str:
        label = self.labels[v]
        if self.kind == "Custom":
            return str(label)
        if isinstance(label, tuple):
            return format_flag(label)
        return format_subset(label)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _build(kind, n, params, labels, adjacent) -> Graph:
    labels = tuple(labels)
    rows = [0] * len(labels)
    for i in range(len(labels)):
        li = labels[i]
        for j in range(i + 1, len(labels)):
            if adjacent(li, labels[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    index = {lab: i for i, lab in enumerate(labels)}
    return Graph(kind, n, tuple(params), labels, tuple(rows), index)


def _check_cap(count: int, vertex_cap: int | None) -> None:
    cap = DEFAULT_VERTEX_CAP if vertex_cap is None else vertex_cap
    if count > cap:
        raise BudgetExceeded(f"{count} vertices exceeds the vertex cap {cap}")


def is_general_position(n: int, f: Flag, g: Flag) -> bool:
    """Every member of f is disjoint from, or covers [n] together with, every member of g."""
    full = full_mask(n)
    return all(x & y == 0 or x | y == full for x in f for y in g)


def build_gpg(n: int, sizes: Iterable[int], vertex_cap: int | None = None) -> Graph:
    T = check_type(n, sizes)
    _check_cap(flag_count(n, T), vertex_cap)
    full = full_mask(n)

    def adjacent(f, g):
        return all(x & y == 0 or x | y == full for x in f for y in g)

    return _build(GPG, n, T, enumerate_flags(n, T), adjacent)


def _check_k(n: int, k: int) -> None:
    check_ground(n)
    if not 1 <= k <= n - 1:
        raise ParameterError(f"need 1 <= k <= n-1, got n={n}, k={k}")


def build_kneser(n: int, k: int, vertex_cap: int | None = None) -> Graph:
    _check_k(n, k)
    _check_cap(binomial(n, k), vertex_cap)
    return _build(KNESER, n, (k,), enumerate_subsets(n, k), lambda x, y: x & y == 0)


def build_aig(n: int, k: int, vertex_cap: int | None = None) -> Graph:
    _check_k(n, k)
    _check_cap(binomial(n, k), vertex_cap)
    return _build(AIG, n, (k,), enumerate_subsets(n, k),
                  lambda x, y: (x & y).bit_count() == k - 1)


def common_neighbor_count(G: Graph, u: int, v: int) -> int:
    """|N(u) ∩ N(v)|; for u == v this is the degree."""
    return (G.adj[u] & G.adj[v]).bit_count()


def connected_components(G: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    unseen = (1 << G.vertex_count) - 1
    comps = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        unseen &= ~comp
        comps.append(_bits(comp))
    return comps


def twin_classes(G: Graph) -> list[list[int]]:
    """Classes of vertices with identical open neighbourhoods, ordered by smallest vertex."""
    groups: dict[int, list[int]] = {}
    for v, row in enumerate(G.adj):
        groups.setdefault(row, []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def verify_isomorphism(G1: Graph, G2: Graph, mapping: Sequence[int]) -> bool:
    """Whether ``mapping`` (vertex i of G1 to mapping[i] of G2) is an isomorphism."""
    if len(mapping) != G1.vertex_count:
        raise ParameterError(
            f"map has length {len(mapping)}, expected {G1.vertex_count}")
    if G1.vertex_count != G2.vertex_count:
        return False
    if sorted(mapping) != list(range(G2.vertex_count)):
        return False
    for i, row in enumerate(G1.adj):
        image = 0
        for j in _bits(row):
            image |= 1 << mapping[j]
        if image != G2.adj[mapping[i]]:
            return False
    return True


def label_map(G1: Graph, G2: Graph, fn) -> list[int]:
    """Vertex map induced by a label function, ``i -> G2.index[fn(G1.labels[i])]``."""
    return [G2.index[fn(lab)] for lab in G1.labels]


def to_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(G.vertex_count):
        lines.append(f'v{v} [label="{G.label_str(v)}"]')
    for i, j in G.edges():
        lines.append(f"v{i} -- v{j}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(G: Graph, path, name: str = "G") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_dot(G, name))


def graph_from_edges(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Unlabelled simple graph from an edge list; loops and repeats are ignored."""
    rows = [0] * vertex_count
    for u, v in edges:
        if u != v:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    labels = tuple(range(vertex_count))
    return Graph("Custom", vertex_count, (), labels, tuple(rows),
                 {i: i for i in labels})
