"""Permutations, stabilizer chains, the induced action on flags, and block systems.

Permutations act on points ``0..degree-1``; ``p[i]`` is the image of ``i``.
Products compose right to left: ``(p * q)[i] == p[q[i]]``. A permutation of the
ground set [n] uses point ``i - 1`` for element ``i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from flaggraph.combinatorics import Flag, check_type, enumerate_flags, members
from flaggraph.errors import ParameterError


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ParameterError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 0-based cycles, e.g. ``from_cycles(3, [(0, 1)])``."""
        img = list(range(degree))
        for cyc in cycles:
            for x, y in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[x] = y
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ParameterError("degree mismatch")
        p = self.images
        return Permutation(tuple(p[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out


def _as_tuple(p) -> tuple[int, ...]:
    return p.images if isinstance(p, Permutation) else tuple(p)


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(p[x] for x in q)


def _inv(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class StabilizerChain:
    """Deterministic Schreier-Sims stabilizer chain.

    Base points are taken as the smallest point moved by the element that
    forces a new level. Level ``l`` stores its strong generators, and a
    transversal mapping each orbit point ``x`` to an element sending the base
    point to ``x``.
    """

    def __init__(self, degree: int, generators: Iterable = ()):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.base: list[int] = []
        self.gens: list[list[tuple]] = []
        self.trans: list[dict[int, tuple]] = []
        self._checked: list[set] = []
        for g in generators:
            g = _as_tuple(g)
            if len(g) != degree:
                raise ParameterError(f"generator degree {len(g)} != {degree}")
            self.add(g)

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        """Strip ``g`` through levels from ``start``; return residue and the level it stopped at."""
        for lvl in range(start, len(self.base)):
            x = g[self.base[lvl]]
            u = self.trans[lvl].get(x)
            if u is None:
                return g, lvl
            g = _mul(_inv(u), g)
        return g, len(self.base)

    def contains(self, g) -> bool:
        g = _as_tuple(g)
        if len(g) != self.degree:
            return False
        residue, _ = self.sift(g)
        return residue == self.identity

    def add(self, g) -> bool:
        """Extend the chain so that it contains ``g``; False if already a member."""
        residue, _ = self.sift(_as_tuple(g))
        if residue == self.identity:
            return False
        self._insert(residue)
        self._close()
        return True

    def _insert(self, h: tuple) -> None:
        # a strong generator belongs to every level whose earlier base points it fixes
        for j, b in enumerate(self.base):
            self.gens[j].append(h)
            self._grow_orbit(j)
            if h[b] != b:
                return
        point = next(i for i, x in enumerate(h) if i != x)
        self.base.append(point)
        self.gens.append([h])
        self.trans.append({point: self.identity})
        self._checked.append(set())
        self._grow_orbit(len(self.base) - 1)

    def _grow_orbit(self, lvl: int) -> None:
        trans = self.trans[lvl]
        queue = deque(trans)
        while queue:
            x = queue.popleft()
            ux = trans[x]
            for s in self.gens[lvl]:
                y = s[x]
                if y not in trans:
                    trans[y] = _mul(s, ux)
                    queue.append(y)

    def _close(self) -> None:
        # every Schreier generator at level j must sift through levels j+1..
        j = len(self.base) - 1
        while j >= 0:
            h = self._first_failing_schreier(j)
            if h is None:
                j -= 1
                continue
            self._insert(h)
            j = len(self.base) - 1

    def _first_failing_schreier(self, lvl: int):
        trans = self.trans[lvl]
        checked = self._checked[lvl]
        for gi, s in enumerate(self.gens[lvl]):
            for x, ux in list(trans.items()):
                if (x, gi) in checked:
                    continue
                checked.add((x, gi))
                y = s[x]
                schreier = _mul(_inv(trans[y]), _mul(s, ux))
                residue, _ = self.sift(schreier, lvl + 1)
                if residue != self.identity:
                    return residue
        return None

    def order(self) -> int:
        out = 1
        for t in self.trans:
            out *= len(t)
        return out

    def orbit_lengths(self) -> list[int]:
        return [len(t) for t in self.trans]

    def elements(self):
        """Iterate over all group elements (small groups only)."""
        def rec(lvl, acc):
            if lvl < 0:
                yield acc
                return
            for u in self.trans[lvl].values():
                yield from rec(lvl - 1, _mul(u, acc))
        yield from rec(len(self.base) - 1, self.identity)


def _degree_of(generators: Sequence) -> int | None:
    degrees = {len(_as_tuple(g)) for g in generators}
    if len(degrees) > 1:
        raise ParameterError(f"generators have mixed degrees {sorted(degrees)}")
    return degrees.pop() if degrees else None


def group_order(generators: Sequence, degree: int | None = None) -> int:
    """Exact order of the group generated by ``generators`` (1 for an empty list)."""
    d = _degree_of(generators)
    if d is None:
        return 1
    if degree is not None and degree != d:
        raise ParameterError(f"generator degree {d} != {degree}")
    return StabilizerChain(d, generators).order()


def closure_order(generators: Sequence, limit: int = 10_000) -> int:
    """Count group elements by breadth-first closure; an oracle for small groups."""
    d = _degree_of(generators)
    if d is None:
        return 1
    gens = [_as_tuple(g) for g in generators]
    start = tuple(range(d))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = _mul(s, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise ParameterError(f"group larger than {limit}")
                queue.append(y)
    return len(seen)


@lru_cache(maxsize=64)
def _flag_index(n: int, T: tuple) -> tuple[tuple, dict]:
    flags = tuple(enumerate_flags(n, T))
    return flags, {f: i for i, f in enumerate(flags)}


def _apply_ground(images: tuple, mask: int) -> int:
    out = 0
    for i in members(mask):
        out |= 1 << images[i - 1]
    return out


def apply_to_flag(ground: Permutation, f: Flag) -> Flag:
    return tuple(_apply_ground(ground.images, x) for x in f)


def induced_vertex_perm(n: int, sizes: Iterable[int], ground: Permutation) -> Permutation:
    """Vertex permutation of Γ(n,T) induced by a permutation of [n]."""
    T = check_type(n, sizes)
    if ground.degree != n:
        raise ParameterError(f"ground permutation has degree {ground.degree}, expected {n}")
    flags, index = _flag_index(n, T)
    cache: dict[int, int] = {}
    images = []
    for f in flags:
        img = []
        for x in f:
            y = cache.get(x)
            if y is None:
                y = cache[x] = _apply_ground(ground.images, x)
            img.append(y)
        images.append(index[tuple(img)])
    return Permutation(tuple(images))


def symmetric_generators(n: int) -> list[Permutation]:
    """Transposition (1 2) and n-cycle (1 2 ... n) generating S_n on [n]."""
    if n < 2:
        return []
    return [Permutation.from_cycles(n, [(0, 1)]),
            Permutation.from_cycles(n, [tuple(range(n))])]


def induced_symmetric_generators(n: int, sizes: Iterable[int]) -> list[Permutation]:
    return [induced_vertex_perm(n, sizes, g) for g in symmetric_generators(n)]


def is_automorphism(G, p) -> bool:
    """Whether ``p`` preserves adjacency and non-adjacency of ``G``."""
    images = _as_tuple(p)
    if len(images) != G.vertex_count:
        raise ParameterError(f"permutation degree {len(images)} != {G.vertex_count}")
    adj = G.adj
    for u, v in G.edges():
        if not adj[images[u]] >> images[v] & 1:
            return False
    # an injective map sending edges to edges is onto the edge set
    return sorted(images) == list(range(len(images)))


SIGMA = "Sigma"
OMEGA = "Omega"
DELTA = "Delta"
TWIN = "TwinDerived"
CUSTOM = "Custom"


@dataclass(frozen=True)
class BlockPartition:
    cells: tuple[tuple[int, ...], ...]
    kind: str = CUSTOM

    def __post_init__(self):
        points = sorted(x for c in self.cells for x in c)
        if any(not c for c in self.cells) or points != list(range(len(points))):
            raise ParameterError("cells must be nonempty and cover 0..degree-1 exactly once")

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]], kind: str = CUSTOM) -> "BlockPartition":
        return cls(tuple(tuple(sorted(c)) for c in cells), kind)

    @property
    def degree(self) -> int:
        return sum(len(c) for c in self.cells)

    def cell_of(self) -> list[int]:
        out = [0] * self.degree
        for ci, c in enumerate(self.cells):
            for x in c:
                out[x] = ci
        return out

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]


def _group_by(labels: Sequence, key) -> tuple[tuple[int, ...], ...]:
    groups: dict = {}
    for i, lab in enumerate(labels):
        groups.setdefault(key(lab), []).append(i)
    return tuple(tuple(c) for c in groups.values())


def canonical_partition(n: int, sizes: Iterable[int], kind: str) -> BlockPartition:
    """Sigma groups flags by their smaller member, Omega by their larger member,
    Delta pairs each flag {A,B} with {complement B, complement A} (needs a+b = n).
    Cells appear in order of first vertex."""
    T = check_type(n, sizes)
    flags, index = _flag_index(n, T)
    if kind not in (SIGMA, OMEGA, DELTA):
        raise ParameterError(f"unknown canonical partition kind {kind!r}")
    if len(T) != 2:
        raise ParameterError(f"{kind} partition needs a two-size type, got {T}")
    if kind == SIGMA:
        cells = _group_by(flags, lambda f: f[0])
    elif kind == OMEGA:
        cells = _group_by(flags, lambda f: f[1])
    else:
        if T[0] + T[1] != n:
            raise ParameterError(f"Delta partition needs a+b = n, got n={n}, type={T}")
        full = (1 << n) - 1
        cells = _group_by(flags, lambda f: min(f, (full ^ f[1], full ^ f[0])))
    cells = tuple(sorted(cells, key=lambda c: c[0]))
    return BlockPartition(cells, kind)


def top_member_partition(n: int, sizes: Iterable[int]) -> BlockPartition:
    """Flags grouped by their largest member; the block system of small types."""
    T = check_type(n, sizes)
    flags, _ = _flag_index(n, T)
    cells = tuple(sorted(_group_by(flags, lambda f: f[-1]), key=lambda c: c[0]))
    return BlockPartition(cells, SIGMA)


def is_block_system(generators: Sequence, P: BlockPartition) -> bool:
    """Every generator maps every cell onto a cell."""
    d = _degree_of(generators)
    if d is None:
        return True
    if d != P.degree:
        raise ParameterError(f"generator degree {d} != partition degree {P.degree}")
    cell_of = P.cell_of()
    for g in generators:
        g = _as_tuple(g)
        for c in P.cells:
            target = cell_of[g[c[0]]]
            if len(P.cells[target]) != len(c):
                return False
            if any(cell_of[g[x]] != target for x in c):
                return False
    return True


def induced_block_action(generators: Sequence, P: BlockPartition) -> list[Permutation]:
    """Each generator's permutation of cell indices."""
    if not is_block_system(generators, P):
        raise ParameterError("partition is not a block system for these generators")
    cell_of = P.cell_of()
    out = []
    for g in generators:
        g = _as_tuple(g)
        out.append(Permutation(tuple(cell_of[g[c[0]]] for c in P.cells)))
    return out


def kernel_order(generators: Sequence, P: BlockPartition) -> int:
    """|G| / |G acting on cells|; 1 certifies that only the identity fixes every cell."""
    full = group_order(generators)
    image = group_order(induced_block_action(generators, P))
    return full // image
