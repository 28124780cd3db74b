"""
Ground types: bitset graphs, tournaments, edge colorings and vertex sets.

Bitsets are plain Python ints; bit ``v`` of ``adj[u]`` is set iff ``uv`` is an edge.
All types are immutable after construction.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

import numpy as np

from core.errors import InvalidInputError


class Color2(IntEnum):
    RED = 0
    BLUE = 1


class Color3(IntEnum):
    I = 0
    II = 1
    III = 2


def bits_of(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class VertexSet:
    """Sorted distinct vertices of the universe [N]."""

    members: tuple[int, ...]
    universe: int

    def __post_init__(self) -> None:
        members = tuple(sorted(self.members))
        if len(set(members)) != len(members):
            raise InvalidInputError(f"Vertex set has repeated elements: {members}")
        if members and (members[0] < 0 or members[-1] >= self.universe):
            raise InvalidInputError(f"Vertex set {members} not inside [0, {self.universe})")
        object.__setattr__(self, "members", members)

    @classmethod
    def full(cls, universe: int) -> "VertexSet":
        return cls(tuple(range(universe)), universe)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def to_bitset(self) -> int:
        return mask_of(self.members)


@dataclass(frozen=True)
class BitGraph:
    """
    Undirected simple graph on vertices 0..n-1.

    Invariants: adjacency symmetric, no self-loops, every neighbor < n.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise InvalidInputError(f"BitGraph needs {self.n} adjacency rows, got {len(self.adj)}")
        limit = 1 << self.n
        for u, row in enumerate(self.adj):
            if row < 0 or row >= limit:
                raise InvalidInputError(f"Vertex {u} has a neighbor outside [0, {self.n})")
            if row >> u & 1:
                raise InvalidInputError(f"Self-loop at vertex {u}")
            for v in bits_of(row):
                if not self.adj[v] >> u & 1:
                    raise InvalidInputError(f"Adjacency not symmetric on edge ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "BitGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidInputError(f"Self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"Edge ({u}, {v}) outside [0, {n})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "BitGraph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "BitGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "BitGraph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def from_networkx(cls, graph) -> "BitGraph":
        """Relabel ``graph`` nodes to 0..n-1 in sorted order."""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))

    def complement(self) -> "BitGraph":
        full = (1 << self.n) - 1
        return BitGraph(self.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(self.adj)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits_of(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))


@dataclass(frozen=True)
class Tournament:
    """
    Tournament on vertices 0..n-1; bit ``v`` of ``beats[u]`` means u -> v.
    """

    n: int
    beats: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.beats) != self.n:
            raise InvalidInputError(f"Tournament needs {self.n} rows, got {len(self.beats)}")
        limit = 1 << self.n
        for u, row in enumerate(self.beats):
            if row < 0 or row >= limit:
                raise InvalidInputError(f"Vertex {u} beats a vertex outside [0, {self.n})")
            if row >> u & 1:
                raise InvalidInputError(f"Self-loop at vertex {u}")
        for u, v in combinations(range(self.n), 2):
            if (self.beats[u] >> v & 1) == (self.beats[v] >> u & 1):
                raise InvalidInputError(f"Pair ({u}, {v}) must be oriented exactly once")

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Tournament":
        """Bit ``e`` of ``mask`` set means the e-th pair (lexicographic u<v) is oriented u -> v."""
        beats = [0] * n
        for e, (u, v) in enumerate(combinations(range(n), 2)):
            if mask >> e & 1:
                beats[u] |= 1 << v
            else:
                beats[v] |= 1 << u
        return cls(n, tuple(beats))

    @classmethod
    def from_matrix(cls, matrix) -> "Tournament":
        rows = np.asarray(matrix, dtype=bool)
        return cls(rows.shape[0], tuple(mask_of(np.flatnonzero(row).tolist()) for row in rows))

    @classmethod
    def transitive(cls, n: int) -> "Tournament":
        """Vertex u beats every v > u."""
        full = (1 << n) - 1
        return cls(n, tuple(full & ~((1 << (u + 1)) - 1) for u in range(n)))

    @classmethod
    def rotational(cls, n: int) -> "Tournament":
        """Odd n: vertex i beats i+1, ..., i+(n-1)/2 modulo n."""
        if n % 2 == 0:
            raise InvalidInputError("Rotational tournaments need an odd vertex count")
        half = (n - 1) // 2
        return cls(n, tuple(mask_of((i + k) % n for k in range(1, half + 1)) for i in range(n)))

    @classmethod
    def near_regular(cls, n: int) -> "Tournament":
        """Outdegrees as equal as possible: rotational on n (odd) or on n+1 minus one vertex (even)."""
        if n % 2 == 1:
            return cls.rotational(n)
        big = cls.rotational(n + 1)
        keep = (1 << n) - 1
        return cls(n, tuple(row & keep for row in big.beats[:n]))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "Tournament":
        return cls.from_mask(n, int(sum(1 << e for e in np.flatnonzero(rng.random(comb(n, 2)) < 0.5))))

    @cached_property
    def matrix(self) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=bool)
        for u, row in enumerate(self.beats):
            out[u, list(bits_of(row))] = True
        return out

    def orient(self, a, b) -> np.ndarray:
        """Vectorised ``a -> b`` test."""
        return self.matrix[np.asarray(a), np.asarray(b)]

    def beats_vertex(self, u: int, v: int) -> bool:
        return bool(self.beats[u] >> v & 1)

    def outdegrees(self) -> list[int]:
        return [row.bit_count() for row in self.beats]

    def is_transitive_on(self, order: list[int]) -> bool:
        """True iff each vertex of ``order`` beats every later one."""
        return all(self.beats_vertex(order[i], order[j]) for i, j in combinations(range(len(order)), 2))


def all_tournaments(n: int) -> Iterator[Tournament]:
    for mask in range(1 << comb(n, 2)):
        yield Tournament.from_mask(n, mask)


@dataclass(frozen=True)
class EdgeColoring:
    """
    Coloring of the pairs of [n] with ``palette`` colors.

    ``colors`` lists one color per pair in lexicographic order of (u, v), u < v.
    """

    n: int
    palette: int
    colors: tuple[int, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.palette not in (2, 3):
            raise InvalidInputError(f"Palette must be 2 or 3, got {self.palette}")
        if len(self.colors) != comb(self.n, 2):
            raise InvalidInputError(f"Expected {comb(self.n, 2)} pair colors, got {len(self.colors)}")
        if any(not 0 <= c < self.palette for c in self.colors):
            raise InvalidInputError(f"Color outside palette of size {self.palette}")
        index = {pair: e for e, pair in enumerate(combinations(range(self.n), 2))}
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_function(cls, n: int, palette: int, fn) -> "EdgeColoring":
        return cls(n, palette, tuple(int(fn(u, v)) for u, v in combinations(range(n), 2)))

    @classmethod
    def from_code(cls, n: int, palette: int, code: int) -> "EdgeColoring":
        """Digit ``e`` of ``code`` in base ``palette`` colors the e-th pair."""
        colors = []
        for _ in range(comb(n, 2)):
            code, digit = divmod(code, palette)
            colors.append(digit)
        return cls(n, palette, tuple(colors))

    def color(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.colors[self._index[(u, v)]]

    def matrix(self) -> np.ndarray:
        """Symmetric n x n color matrix, -1 on the diagonal."""
        out = np.full((self.n, self.n), -1, dtype=np.int64)
        for (u, v), e in self._index.items():
            out[u, v] = out[v, u] = self.colors[e]
        return out

    def color_graph(self, color: int) -> BitGraph:
        return BitGraph.from_edges(self.n, (pair for pair, e in self._index.items() if self.colors[e] == color))


def EdgeColoring2(n: int, colors: Iterable[int]) -> EdgeColoring:
    return EdgeColoring(n, 2, tuple(colors))


def EdgeColoring3(n: int, colors: Iterable[int]) -> EdgeColoring:
    return EdgeColoring(n, 3, tuple(colors))
