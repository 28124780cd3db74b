"""
Triple-coloring oracles: pure maps from a sorted triple a<b<c of [N] to a color id.

Evaluators are module-level functions bound with ``functools.partial`` so that
an oracle can be shipped to worker processes.
"""

from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import Callable

import numpy as np

from core.errors import InvalidInputError
from core.graphs import Color2
from core.hashing import keyed_hash, stream_seed, unit_interval

Evaluator = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class TripleColoringOracle:
    """
    Deterministic coloring of the triples of [universe].

    Args:
        universe: Vertex count N
        palette: 2 (red=0, blue=1) or 3 (I=0, II=1, III=2)
        evaluator: Vectorised map on sorted int64 arrays a < b < c
        name: Oracle spec string, echoed in reports
        seed: Seed the evaluator was built from, if any
    """

    universe: int
    palette: int
    evaluator: Evaluator = field(repr=False, compare=False)
    name: str = "oracle"
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.universe < 0:
            raise InvalidInputError("Oracle universe must be non-negative")
        if self.palette not in (2, 3):
            raise InvalidInputError(f"Palette must be 2 or 3, got {self.palette}")

    def evaluate_many(self, a, b, c) -> np.ndarray:
        """Colors of many triples; each triple is sorted before evaluation."""
        stacked = np.sort(np.stack(np.broadcast_arrays(
            np.asarray(a, dtype=np.int64),
            np.asarray(b, dtype=np.int64),
            np.asarray(c, dtype=np.int64),
        )), axis=0)
        if stacked.size and (stacked[0].min() < 0 or stacked[2].max() >= self.universe):
            raise InvalidInputError(f"Triple outside [0, {self.universe})")
        if stacked.size and ((stacked[0] == stacked[1]) | (stacked[1] == stacked[2])).any():
            raise InvalidInputError("Triple vertices must be distinct")
        return np.asarray(self.evaluator(stacked[0], stacked[1], stacked[2]), dtype=np.int64)

    def color(self, a: int, b: int, c: int) -> int:
        return int(self.evaluate_many([a], [b], [c])[0])

    def is_monochromatic(self, vertices, color: int) -> bool:
        """Triple-by-triple re-verification of a candidate set."""
        vs = sorted(int(v) for v in vertices)
        if len(vs) < 3:
            return True
        idx = np.array(vs, dtype=np.int64)
        i, j, k = _triple_indices(len(vs))
        return bool((self.evaluate_many(idx[i], idx[j], idx[k]) == color).all())

    def cached(self) -> "CachedOracle":
        return CachedOracle(self)


class CachedOracle:
    """Memoising scalar layer in front of an oracle; vectorised calls pass through."""

    def __init__(self, oracle: TripleColoringOracle):
        self.oracle = oracle
        self.universe = oracle.universe
        self.palette = oracle.palette
        self.name = oracle.name
        self._cache: dict[tuple[int, int, int], int] = {}

    def color(self, a: int, b: int, c: int) -> int:
        key = tuple(sorted((a, b, c)))
        if key not in self._cache:
            self._cache[key] = self.oracle.color(*key)
        return self._cache[key]

    def evaluate_many(self, a, b, c) -> np.ndarray:
        return self.oracle.evaluate_many(a, b, c)

    def is_monochromatic(self, vertices, color: int) -> bool:
        return self.oracle.is_monochromatic(vertices, color)


def _triple_indices(k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    combos = np.array(list(combinations(range(k), 3)), dtype=np.int64).reshape(-1, 3)
    return combos[:, 0], combos[:, 1], combos[:, 2]


def _constant(color: int, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    return np.full(a.shape, color, dtype=np.int64)


def _random_triples(p: float, key: int, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    red = unit_interval(keyed_hash(key, a, b, c)) < p
    return np.where(red, int(Color2.RED), int(Color2.BLUE)).astype(np.int64)


def constant_oracle(universe: int, color: int, palette: int = 2) -> TripleColoringOracle:
    label = {0: "red", 1: "blue"}.get(color, str(color)) if palette == 2 else str(color)
    return TripleColoringOracle(universe, palette, partial(_constant, int(color)), name=f"const:{label}")


def random_oracle(universe: int, p: float, seed: int) -> TripleColoringOracle:
    """Each triple is red independently with probability ``p`` under a seeded hash."""
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"Probability must lie in [0, 1], got {p}")
    key = stream_seed(seed, "oracle")
    return TripleColoringOracle(universe, 2, partial(_random_triples, float(p), key),
                                name=f"random:p={p}:seed={seed}", seed=seed)
