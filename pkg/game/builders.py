"""
Builder strategies.

A builder is asked, after each vertex exposure and after each painted edge,
which earlier vertex the newest vertex should be joined to next. ``None``
means: expose a new vertex.
"""

from typing import Optional, Protocol

from game.state import GameState


class Builder(Protocol):
    def next_edge(self, state: GameState) -> Optional[int]:
        ...


class StringLabelBuilder:
    """
    String-labeling strategy.

    The first vertex is labeled by the empty string. A new vertex is joined to
    the vertex labeled by the empty string, then to the vertex labeled by the
    color of that edge, and so on along the labels spelled by its own edge
    colors. It takes the first label on this path that is still free.
    """

    def __init__(self, s: int, n: int):
        self.s = s
        self.n = n

    def next_edge(self, state: GameState) -> Optional[int]:
        v = state.current
        if v is None or v in state.vertex_labels:
            return None
        prefix = ""
        while True:
            w = state.labels.get(prefix)
            if w is None:
                state.assign_label(v, prefix)
                return None
            color = state.edge_color(w, v)
            if color is None:
                return w
            prefix += color.letter


def eh_builder(s: int, n: int) -> StringLabelBuilder:
    return StringLabelBuilder(s, n)


class CompleteBuilder:
    """Joins every new vertex to all earlier vertices, lowest index first."""

    def next_edge(self, state: GameState) -> Optional[int]:
        v = state.current
        if v is None:
            return None
        for w in range(v):
            if not state.has_edge(w, v):
                return w
        return None
