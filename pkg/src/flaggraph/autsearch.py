"""Full automorphism groups by colour refinement and individualisation.

The search follows the first path of the individualisation-refinement tree
and, level by level from the bottom, decides for every vertex of the target
cell whether some automorphism fixing the earlier individualised vertices
maps the first-path vertex onto it. Found automorphisms prune by orbit; each
remaining candidate is settled by an exhaustive subtree search guided by
refinement traces. The generators found this way generate the whole group.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from flaggraph.errors import BudgetExceeded
from flaggraph.graphs import Graph
from flaggraph.permgroup import Permutation, StabilizerChain, is_automorphism

DEFAULT_MAX_VERTICES = 512
DEFAULT_MAX_NODES = 10**9


@dataclass(frozen=True)
class Colouring:
    """Ordered partition of the vertices; cell ``c`` holds the vertices of colour ``c``."""

    cells: tuple[tuple[int, ...], ...]

    @classmethod
    def uniform(cls, vertex_count: int) -> "Colouring":
        return cls((tuple(range(vertex_count)),) if vertex_count else ())

    @classmethod
    def discrete(cls, vertex_count: int) -> "Colouring":
        return cls(tuple((v,) for v in range(vertex_count)))

    @property
    def colour(self) -> list[int]:
        out = [0] * sum(len(c) for c in self.cells)
        for ci, c in enumerate(self.cells):
            for v in c:
                out[v] = ci
        return out

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)


def _mask(cell: Iterable[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(adj: Sequence[int], cells: list[list[int]], splitters: Iterable[int]):
    """Refine ``cells`` in place to an equitable partition.

    Returns a trace of split events. Every step depends only on the graph and
    the ordered partition, so automorphic inputs give equal traces.
    """
    trace = []
    queue = deque(splitters)
    pending = set(queue)
    while queue:
        S = queue.popleft()
        if S not in pending:
            continue
        pending.discard(S)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & S).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            keys = sorted(groups)
            trace.append((len(out), tuple((k, len(groups[k])) for k in keys)))
            pending.discard(_mask(cell))
            for k in keys:
                frag = groups[k]
                out.append(frag)
                fm = _mask(frag)
                if fm not in pending:
                    pending.add(fm)
                    queue.append(fm)
        cells[:] = out
    return trace


def colour_refine(G: Graph, initial: Colouring | None = None) -> Colouring:
    """Coarsest equitable colouring refining ``initial`` (uniform by default).

    Cells split by neighbour count into a splitter cell, fragments ordered by
    increasing count.
    """
    if initial is None:
        initial = Colouring.uniform(G.vertex_count)
    cells = [list(c) for c in initial.cells]
    _refine(G.adj, cells, [_mask(c) for c in cells])
    return Colouring(tuple(tuple(sorted(c)) for c in cells))


def is_equitable(G: Graph, colouring: Colouring) -> bool:
    masks = [_mask(c) for c in colouring.cells]
    for cell in colouring.cells:
        for m in masks:
            if len({(G.adj[v] & m).bit_count() for v in cell}) > 1:
                return False
    return True


def _target(cells: list[list[int]]) -> int:
    # first largest non-singleton cell
    best, pos = 1, -1
    for i, c in enumerate(cells):
        if len(c) > best:
            best, pos = len(c), i
    return pos


def _individualise(adj, cells, pos, v):
    new = [list(c) for c in cells]
    rest = [x for x in new[pos] if x != v]
    new[pos:pos + 1] = [[v], rest]
    trace = _refine(adj, new, [1 << v])
    return new, trace


class _Search:
    def __init__(self, G: Graph, initial: Colouring | None, max_nodes: int):
        self.G = G
        self.adj = G.adj
        self.max_nodes = max_nodes
        self.nodes = 0
        cells = [list(c) for c in (initial or Colouring.uniform(G.vertex_count)).cells]
        _refine(self.adj, cells, [_mask(c) for c in cells])
        self.root = cells

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceeded(f"search exceeded {self.max_nodes} tree nodes")

    def run(self) -> list[tuple[int, ...]]:
        # first path: partitions, target positions, chosen vertices, traces
        parts = [self.root]
        targets, chosen, traces, sizes = [], [], [None], [None]
        cells = self.root
        while True:
            pos = _target(cells)
            if pos < 0:
                break
            v = min(cells[pos])
            targets.append(pos)
            chosen.append(v)
            self._tick()
            cells, trace = _individualise(self.adj, cells, pos, v)
            parts.append(cells)
            traces.append(trace)
            sizes.append(tuple(len(c) for c in cells))
        self.leaf = [c[0] for c in cells]
        self.first = (targets, traces, sizes)

        gens: list[tuple[int, ...]] = []
        parent = list(range(self.G.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def absorb(g):
            for x, y in enumerate(g):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)

        self.orbit_lengths = []
        for level in range(len(targets) - 1, -1, -1):
            cells = parts[level]
            pos = targets[level]
            v = chosen[level]
            failed: list[int] = []
            for w in sorted(cells[pos]):
                root = find(w)
                if w == v or root == find(v) or any(find(x) == root for x in failed):
                    continue
                g = self._find_automorphism(cells, pos, w, level)
                if g is None:
                    failed.append(w)
                else:
                    gens.append(g)
                    absorb(g)
            self.orbit_lengths.append(sum(1 for w in cells[pos] if find(w) == find(v)))
        self.orbit_lengths.reverse()
        return gens

    def _find_automorphism(self, cells, pos, w, level):
        """Search the subtree below individualising ``w`` for a leaf equivalent to the first leaf."""
        targets, traces, sizes = self.first
        depth = level + 1
        self._tick()
        child, trace = _individualise(self.adj, cells, pos, w)
        if trace != traces[depth] or tuple(len(c) for c in child) != sizes[depth]:
            return None
        return self._descend(child, depth)

    def _descend(self, cells, depth):
        targets, traces, sizes = self.first
        if depth == len(targets):
            image = [c[0] for c in cells]
            g = [0] * len(image)
            for a, b in zip(self.leaf, image):
                g[a] = b
            g = tuple(g)
            return g if is_automorphism(self.G, g) else None
        pos = targets[depth]
        for w in sorted(cells[pos]):
            self._tick()
            child, trace = _individualise(self.adj, cells, pos, w)
            if trace != traces[depth + 1] or tuple(len(c) for c in child) != sizes[depth + 1]:
                continue
            g = self._descend(child, depth + 1)
            if g is not None:
                return g
        return None


def _check_budget(G: Graph, max_vertices: int) -> None:
    if G.vertex_count > max_vertices:
        raise BudgetExceeded(
            f"{G.vertex_count} vertices exceeds the search budget {max_vertices}")


def automorphism_generators(G: Graph, max_vertices: int = DEFAULT_MAX_VERTICES,
                            max_nodes: int = DEFAULT_MAX_NODES,
                            initial: Colouring | None = None) -> list[Permutation]:
    """Generators of the full automorphism group, sorted by image sequence.

    With ``initial`` the search is restricted to automorphisms preserving
    that ordered colouring.
    """
    _check_budget(G, max_vertices)
    gens = _Search(G, initial, max_nodes).run()
    return [Permutation(g) for g in sorted(gens)]


@dataclass
class AutResult:
    generators: list[Permutation]
    chain: StabilizerChain
    orbit_lengths: list[int]
    nodes: int

    @property
    def order(self) -> int:
        return self.chain.order()

    def contains(self, p) -> bool:
        return self.chain.contains(p)


def automorphism_group(G: Graph, max_vertices: int = DEFAULT_MAX_VERTICES,
                       max_nodes: int = DEFAULT_MAX_NODES) -> AutResult:
    """Generators together with a stabilizer chain for order and membership queries."""
    _check_budget(G, max_vertices)
    search = _Search(G, None, max_nodes)
    gens = [Permutation(g) for g in sorted(search.run())]
    chain = StabilizerChain(G.vertex_count, gens)
    return AutResult(gens, chain, search.orbit_lengths, search.nodes)


def aut_order(G: Graph, max_vertices: int = DEFAULT_MAX_VERTICES,
              max_nodes: int = DEFAULT_MAX_NODES) -> int:
    return automorphism_group(G, max_vertices, max_nodes).order
