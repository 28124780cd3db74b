"""
Three-uniform hypergraph constructions and the ``h <n> <m>`` file format.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from pathlib import Path
from typing import Iterable

from core.errors import InvalidInputError
from core.graphs import BitGraph


@dataclass(frozen=True)
class Hypergraph3:
    """Sorted, distinct triples over vertices 0..n-1, kept in sorted order."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        canonical = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        for e in canonical:
            if len(e) != 3 or len(set(e)) != 3:
                raise InvalidInputError(f"Edge {e} is not a triple of distinct vertices")
            if e[0] < 0 or e[2] >= self.n:
                raise InvalidInputError(f"Edge {e} outside [0, {self.n})")
        if len(set(canonical)) != len(canonical):
            raise InvalidInputError("Repeated hyperedge")
        object.__setattr__(self, "edges", canonical)

    @classmethod
    def from_triples(cls, n: int, triples: Iterable) -> "Hypergraph3":
        """Deduplicating constructor."""
        return cls(n, tuple(sorted({tuple(sorted(t)) for t in triples})))

    def relabel(self, mapping: dict[int, int]) -> "Hypergraph3":
        return Hypergraph3.from_triples(self.n, (tuple(mapping[x] for x in e) for e in self.edges))


def build_HG(g: BitGraph) -> Hypergraph3:
    """Join every edge of ``g`` to a new apex, the last vertex."""
    if g.n == 0:
        raise InvalidInputError("H_G needs a nonempty graph")
    apex = g.n
    return Hypergraph3.from_triples(g.n + 1, ((u, v, apex) for u, v in g.edges()))


def k4_minus_edge_forms() -> set[tuple[tuple[int, int, int], ...]]:
    """Edge sets of K4(3) minus an edge on [4], one per choice of the vertex in all three triples."""
    forms = set()
    for center in range(4):
        forms.add(tuple(sorted(t for t in combinations(range(4), 3) if center in t)))
    return forms


def is_k4_minus_edge(h: Hypergraph3) -> bool:
    return h.n == 4 and h.edges in k4_minus_edge_forms()


def build_Cn(n: int) -> Hypergraph3:
    """Triples {i, i+1, j} with indices mod n, deduplicated."""
    if n < 4:
        raise InvalidInputError(f"C_n needs n >= 4, got {n}")
    triples = set()
    for i in range(n):
        nxt = (i + 1) % n
        for j in range(n):
            if j not in (i, nxt):
                triples.add(tuple(sorted((i, nxt, j))))
    return Hypergraph3(n, tuple(sorted(triples)))


@dataclass(frozen=True)
class Blowup:
    """
    k-uniform blow-up: ``parts`` parts of ``size`` vertices; an edge is a
    k-set meeting k distinct parts.
    """

    k: int
    parts: int
    size: int

    def __post_init__(self) -> None:
        if self.k < 2 or self.parts < self.k or self.size < 1:
            raise InvalidInputError(f"Need 2 <= k <= parts and size >= 1, got {self}")

    def part(self, v: int) -> int:
        return v // self.size

    def is_edge(self, vertices) -> bool:
        vs = list(vertices)
        return len(vs) == self.k and len({self.part(v) for v in vs}) == self.k and len(set(vs)) == self.k

    @property
    def vertex_count(self) -> int:
        return self.parts * self.size

    @property
    def edge_count(self) -> int:
        return comb(self.parts, self.k) * self.size ** self.k

    @property
    def density_bound(self) -> Fraction:
        return (1 - Fraction(comb(self.k, 2), self.parts)) * comb(self.vertex_count, self.k)

    def meets_density_bound(self) -> bool:
        return self.edge_count >= self.density_bound

    def materialize(self) -> Hypergraph3:
        if self.k != 3:
            raise InvalidInputError("Only three-uniform blow-ups are materialised")
        triples = []
        for chosen in combinations(range(self.parts), 3):
            blocks = [range(p * self.size, (p + 1) * self.size) for p in chosen]
            triples.extend(product(*blocks))
        return Hypergraph3.from_triples(self.vertex_count, triples)


def build_blowup(k: int, parts: int, size: int) -> Blowup:
    return Blowup(k, parts, size)


def build_family_hypergraph(tree: dict) -> Hypergraph3:
    """
    Member of the recursive family described by a partition tree.

    ``tree`` is ``{"s": s, "parts": [subtree, subtree, subtree]}`` or a leaf
    with no parts. Each part carries its own member, and every triple
    meeting all three parts is an edge.
    """
    triples: list[tuple[int, int, int]] = []

    def place(node: dict, offset: int) -> list[int]:
        parts = node.get("parts") or []
        if not parts:
            return list(range(offset, offset + node["s"]))
        blocks = []
        for child in parts:
            blocks.append(place(child, offset))
            offset += child["s"]
        if sum(child["s"] for child in parts) != node["s"]:
            raise InvalidInputError(f"Parts of a node of size {node['s']} do not add up")
        triples.extend(product(*blocks))
        return [v for block in blocks for v in block]

    place(tree, 0)
    return Hypergraph3.from_triples(tree["s"], triples)


def read_hypergraph(path: Path) -> Hypergraph3:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Missing input file: {path}")
    lines = [ln.split() for ln in path.read_text().splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0][0] != "h" or len(lines[0]) != 3:
        raise InvalidInputError(f"{path}: hypergraph header must be 'h <n> <m>'")
    try:
        n, m = int(lines[0][1]), int(lines[0][2])
        triples = [tuple(int(x) for x in tokens[1:]) for tokens in lines[1:] if tokens[0] == "t"]
    except ValueError as exc:
        raise InvalidInputError(f"{path}: expected integers") from exc
    if len(triples) != m or len(lines) - 1 != m:
        raise InvalidInputError(f"{path}: expected {m} triple lines")
    return Hypergraph3(n, tuple(triples))


def write_hypergraph(h: Hypergraph3, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"h {h.n} {len(h.edges)}"] + [f"t {a} {b} {c}" for a, b, c in h.edges]
    path.write_text("\n".join(lines) + "\n")
    return path
