"""
State of a vertex on-line Ramsey game.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from core.errors import InvalidInputError
from core.models import Budget, Move
from core.search import find_clique


class Color(str, Enum):
    RED = "r"
    BLUE = "b"

    @property
    def letter(self) -> str:
        return "R" if self is Color.RED else "B"


@dataclass
class GameState:
    """
    Exposed vertices, drawn colored edges and builder labels.

    Edges may only join the most recently exposed vertex to an earlier one.
    ``labels`` maps an R/B string to the vertex carrying it.
    """

    s: int
    n: int
    vertex_count: int = 0
    red: list[int] = field(default_factory=list)
    blue: list[int] = field(default_factory=list)
    edges: dict[tuple[int, int], Color] = field(default_factory=dict)
    labels: dict[str, int] = field(default_factory=dict)
    vertex_labels: dict[int, str] = field(default_factory=dict)
    moves: list[Move] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.s < 2 or self.n < 2:
            raise InvalidInputError(f"Game targets must be at least 2, got ({self.s}, {self.n})")

    @property
    def current(self) -> Optional[int]:
        return self.vertex_count - 1 if self.vertex_count else None

    @property
    def red_count(self) -> int:
        return sum(1 for c in self.edges.values() if c is Color.RED)

    def budget(self) -> Budget:
        return Budget(v=self.vertex_count, r=self.red_count, m=len(self.edges))

    def expose(self) -> int:
        self.red.append(0)
        self.blue.append(0)
        self.vertex_count += 1
        self.moves.append(Move(op="vertex"))
        return self.vertex_count - 1

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def edge_color(self, u: int, v: int) -> Optional[Color]:
        return self.edges.get((min(u, v), max(u, v)))

    def adjacency(self, color: Color) -> list[int]:
        return self.red if color is Color.RED else self.blue

    def target(self, color: Color) -> int:
        return self.s if color is Color.RED else self.n

    def color_edge(self, u: int, v: int, color: Color) -> Optional[list[int]]:
        """
        Record a painted edge and return a winning clique through it, if any.

        Raises:
            InvalidInputError: If the edge is not a fresh back-edge of the newest vertex
        """
        u, v = min(u, v), max(u, v)
        color = Color(color)
        if v != self.current or u < 0 or u == v:
            raise InvalidInputError(f"Edge ({u}, {v}) must join the newest vertex to an earlier one")
        if (u, v) in self.edges:
            raise InvalidInputError(f"Edge ({u}, {v}) already drawn")
        self.edges[(u, v)] = color
        adj = self.adjacency(color)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        self.moves.append(Move(op="edge", u=u, v=v, color=color.value))
        return self.winning_clique(u, v, color)

    def winning_clique(self, u: int, v: int, color: Color) -> Optional[list[int]]:
        """Monochromatic target clique using edge uv; only such cliques can be new."""
        adj = self.adjacency(color)
        rest = find_clique(adj, adj[u] & adj[v], self.target(color) - 2)
        if rest is None:
            return None
        return sorted([u, v] + rest)

    def assign_label(self, vertex: int, label: str) -> None:
        if label in self.labels:
            raise InvalidInputError(f"Label '{label}' already assigned")
        self.labels[label] = vertex
        self.vertex_labels[vertex] = label

    def adjacency_summary(self) -> str:
        lines = []
        for x in range(self.vertex_count):
            reds = [y for y in range(self.vertex_count) if self.red[x] >> y & 1]
            blues = [y for y in range(self.vertex_count) if self.blue[x] >> y & 1]
            lines.append(f"  {x}: red {reds} blue {blues}")
        return "\n".join(lines)
