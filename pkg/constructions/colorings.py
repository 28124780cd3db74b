"""
Explicit colorings: the lift coloring, tournament and hash-tournament
colorings, the parity pair coloring and the I/II/III pattern coloring.
"""

from dataclasses import dataclass
from functools import partial
from typing import Optional

import numpy as np

from core.errors import InvalidInputError
from core.graphs import Color2, Color3, EdgeColoring, Tournament
from core.hashing import keyed_hash, stream_seed
from core.oracles import TripleColoringOracle

RED, BLUE = int(Color2.RED), int(Color2.BLUE)


# ---------------------------------------------------------------------------
# Lift coloring
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LiftColoringSpec:
    """
    Args:
        r: Palette size of the pair map c2
        c1: Red/blue coloring of the pairs of [r]
        seed: Run seed; c2 uses its ``c2`` stream
    """

    r: int
    c1: EdgeColoring
    seed: int

    def __post_init__(self) -> None:
        if self.c1.palette != 2 or self.c1.n != self.r:
            raise InvalidInputError(f"c1 must be a red/blue coloring of the pairs of [{self.r}]")

    def c2(self, a, b) -> np.ndarray:
        """Seeded map of the pair {a, b} into [r]."""
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        return (keyed_hash(stream_seed(self.seed, "c2"), lo, hi) % np.uint64(self.r)).astype(np.int64)


def _lift_colors(r: int, c1_matrix: np.ndarray, key: int,
                 a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    x = (keyed_hash(key, a, b) % np.uint64(r)).astype(np.int64)
    y = (keyed_hash(key, a, c) % np.uint64(r)).astype(np.int64)
    return np.where(x == y, BLUE, c1_matrix[x, y]).astype(np.int64)


def lift_color(triple, spec: LiftColoringSpec) -> Color2:
    """Blue when c2(a,b) = c2(a,c), else c1(c2(a,b), c2(a,c)), for a < b < c."""
    a, b, c = sorted(int(x) for x in triple)
    if len({a, b, c}) != 3:
        raise InvalidInputError("lift_color needs three distinct vertices")
    colors = _lift_colors(spec.r, spec.c1.matrix(), stream_seed(spec.seed, "c2"),
                          np.array([a]), np.array([b]), np.array([c]))
    return Color2(int(colors[0]))


def lift_oracle(spec: LiftColoringSpec, universe: int, name: Optional[str] = None) -> TripleColoringOracle:
    evaluator = partial(_lift_colors, spec.r, spec.c1.matrix(), stream_seed(spec.seed, "c2"))
    return TripleColoringOracle(universe, 2, evaluator, name=name or f"lift:r={spec.r}:seed={spec.seed}",
                                seed=spec.seed)


# ---------------------------------------------------------------------------
# Tournament colorings
# ---------------------------------------------------------------------------

def _cyclic(orient_ab: np.ndarray, orient_bc: np.ndarray, orient_ac: np.ndarray) -> np.ndarray:
    # a<b<c is cyclic iff a->b->c->a or a->c->b->a
    return (orient_ab == orient_bc) & (orient_bc != orient_ac)


def _tournament_colors(matrix: np.ndarray, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    cyclic = _cyclic(matrix[a, b], matrix[b, c], matrix[a, c])
    return np.where(cyclic, RED, BLUE).astype(np.int64)


def tournament_color(triple, t: Tournament) -> Color2:
    """Red iff the triple spans a cyclic triangle."""
    a, b, c = sorted(int(x) for x in triple)
    if len({a, b, c}) != 3:
        raise InvalidInputError("tournament_color needs three distinct vertices")
    return Color2(int(_tournament_colors(t.matrix, np.array([a]), np.array([b]), np.array([c]))[0]))


def tournament_oracle(t: Tournament, name: str = "tournament") -> TripleColoringOracle:
    return TripleColoringOracle(t.n, 2, partial(_tournament_colors, t.matrix), name=name)


def _hash_orient(key: int, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    return (keyed_hash(key, lo, hi) & np.uint64(1)).astype(bool)


def _hash_tournament_colors(key: int, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    cyclic = _cyclic(_hash_orient(key, a, b), _hash_orient(key, b, c), _hash_orient(key, a, c))
    return np.where(cyclic, RED, BLUE).astype(np.int64)


def hash_tournament_oracle(universe: int, seed: int) -> TripleColoringOracle:
    """Tournament coloring of an implicit random tournament: for lo < hi, lo -> hi iff a hash bit is set."""
    key = stream_seed(seed, "tournament")
    return TripleColoringOracle(universe, 2, partial(_hash_tournament_colors, key),
                                name=f"tournament:random:seed={seed}", seed=seed)


def hash_tournament(universe: int, seed: int) -> Tournament:
    """Materialised form of the implicit tournament of ``hash_tournament_oracle``."""
    key = stream_seed(seed, "tournament")
    lo, hi = np.triu_indices(universe, 1)
    forward = _hash_orient(key, lo, hi)
    matrix = np.zeros((universe, universe), dtype=bool)
    matrix[lo[forward], hi[forward]] = True
    matrix[hi[~forward], lo[~forward]] = True
    return Tournament.from_matrix(matrix)


# ---------------------------------------------------------------------------
# Pair colorings
# ---------------------------------------------------------------------------

def parity_color(a: int, b: int) -> Color3:
    """Color II iff b - a is even, else color I."""
    if a == b:
        raise InvalidInputError("parity_color needs two distinct vertices")
    return Color3.II if (b - a) % 2 == 0 else Color3.I


def parity_coloring(s: int) -> EdgeColoring:
    return EdgeColoring.from_function(s, 3, lambda a, b: parity_color(a, b))


def _pattern_colors(key: int, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    def pair(x, y):
        return (keyed_hash(key, x, y) % np.uint64(3)).astype(np.int64)

    red = (pair(a, b) == Color3.I) & (pair(b, c) == Color3.II) & (pair(a, c) == Color3.III)
    return np.where(red, RED, BLUE).astype(np.int64)


def pattern_oracle(universe: int, seed: int) -> TripleColoringOracle:
    """
    Seeded uniform I/II/III coloring of the pairs; a < b < c is red iff
    (a,b) is I, (b,c) is II and (a,c) is III.
    """
    key = stream_seed(seed, "pattern")
    return TripleColoringOracle(universe, 2, partial(_pattern_colors, key),
                                name=f"pattern:seed={seed}", seed=seed)


# ---------------------------------------------------------------------------
# Odd cycles around an apex
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OddCycleCheck:
    violation: bool
    forced_edge: Optional[tuple[int, int]]
    cyclic_triples: int


def odd_cycle_red_check(t: Tournament, apex: int, cycle: list[int]) -> OddCycleCheck:
    """
    Look for a non-cyclic triple (apex, u_j, u_j+1) around an odd cycle.

    A cyclic triple forces opposite orientations at the apex for u_j and
    u_j+1, which would properly 2-color the odd cycle. So some consecutive
    pair has equal orientation; the first such pair is returned.

    Raises:
        InvalidInputError: If the cycle is even, too short or hits the apex
    """
    if len(cycle) < 3 or len(cycle) % 2 == 0:
        raise InvalidInputError(f"Need an odd cycle of length at least 3, got {len(cycle)}")
    if apex in cycle or len(set(cycle)) != len(cycle):
        raise InvalidInputError("Cycle vertices must be distinct and avoid the apex")
    forced = None
    cyclic = 0
    for j, u in enumerate(cycle):
        w = cycle[(j + 1) % len(cycle)]
        if tournament_color((apex, u, w), t) == Color2.RED:
            cyclic += 1
        elif forced is None:
            forced = (u, w)
    return OddCycleCheck(violation=forced is None, forced_edge=forced, cyclic_triples=cyclic)
