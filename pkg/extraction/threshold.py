"""
The alpha-threshold painter that turns a triple coloring into game colors.

Each game vertex is embedded as the lowest survivor. A drawn pair (x, y) is
red iff at least ``alpha * |S|`` survivors z have triple (x, y, z) red; the
survivor set then keeps only the z that agree with the chosen color.
"""

from dataclasses import dataclass, field

import numpy as np

from core.errors import RamseyError
from core.graphs import Color2
from core.oracles import TripleColoringOracle
from game.state import Color, GameState


class SurvivorsExhausted(RamseyError):
    """No survivor is left to embed the next game vertex."""


@dataclass
class StepRecord:
    vertex: int
    red_edges: int = 0
    edges: int = 0
    red_fractions: list[float] = field(default_factory=list)
    survivors: int = 0


class ThresholdPainter:
    """
    Args:
        oracle: Red/blue triple coloring
        alpha: Threshold in (0, 1/2]
        universe: Optional explicit vertex pool, [N] by default
    """

    def __init__(self, oracle: TripleColoringOracle, alpha: float, universe=None):
        self.oracle = oracle
        self.alpha = alpha
        pool = np.arange(oracle.universe, dtype=np.int64) if universe is None else np.asarray(universe, dtype=np.int64)
        self.survivors = np.sort(pool)
        self.embed: dict[int, int] = {}
        self.steps: list[StepRecord] = []

    def on_vertex(self, state: GameState, v: int) -> None:
        if self.survivors.size == 0:
            raise SurvivorsExhausted(f"Survivor set empty before game vertex {v}")
        self.embed[v] = int(self.survivors[0])
        self.survivors = self.survivors[1:]
        self.steps.append(StepRecord(vertex=self.embed[v], survivors=int(self.survivors.size)))

    def __call__(self, state: GameState, u: int, v: int) -> Color:
        a, b = self.embed[u], self.embed[v]
        size = self.survivors.size
        if size:
            red = self.oracle.evaluate_many(a, b, self.survivors) == Color2.RED
            red_count = int(red.sum())
        else:
            red = np.zeros(0, dtype=bool)
            red_count = 0
        step = self.steps[-1]
        step.edges += 1
        step.red_fractions.append(red_count / size if size else 0.0)
        if red_count >= self.alpha * size:
            self.survivors = self.survivors[red]
            step.red_edges += 1
            color = Color.RED
        else:
            self.survivors = self.survivors[~red]
            color = Color.BLUE
        step.survivors = int(self.survivors.size)
        return color

    def vertices(self, game_vertices) -> list[int]:
        return sorted(self.embed[w] for w in game_vertices)
