"""
Stepping-up three-coloring of the triples of {0,1}^m.

A vertex is an m-bit string gamma_1..gamma_m stored as its value
b = sum gamma_i 2^(i-1); string order equals integer order. delta is the
largest coordinate (1-indexed) where two strings differ.
"""

from dataclasses import dataclass
from functools import partial

import numpy as np

from core.errors import InvalidInputError, InvariantViolation
from core.graphs import BitGraph, Color3
from core.hashing import stream_rng
from core.oracles import TripleColoringOracle


@dataclass(frozen=True, order=True)
class StepUpVertex:
    value: int
    m: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < 1 << self.m:
            raise InvalidInputError(f"Value {self.value} does not fit in {self.m} bits")

    @classmethod
    def from_bits(cls, bits) -> "StepUpVertex":
        """``bits`` lists gamma_1..gamma_m."""
        bits = list(bits)
        return cls(sum(int(g) << i for i, g in enumerate(bits)), len(bits))

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self.value >> i & 1 for i in range(self.m))


def delta(e1: StepUpVertex, e2: StepUpVertex) -> int:
    """
    Largest coordinate at which two strings differ.

    Raises:
        InvalidInputError: If the strings are equal
    """
    if e1.value == e2.value:
        raise InvalidInputError("delta is undefined on equal strings")
    return (e1.value ^ e2.value).bit_length()


def delta_many(x, y) -> np.ndarray:
    """Vectorised delta on integer arrays; 0 where x == y."""
    diff = np.bitwise_xor(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
    return np.frexp(diff.astype(np.float64))[1].astype(np.int64)


def _adjacency_matrix(g: BitGraph) -> np.ndarray:
    out = np.zeros((g.n + 1, g.n + 1), dtype=bool)
    for u, v in g.edges():
        out[u + 1, v + 1] = out[v + 1, u + 1] = True
    return out


def _stepup_colors(adjacency: np.ndarray, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    d1 = delta_many(a, b)
    d2 = delta_many(b, c)
    if (d1 == d2).any():
        raise InvariantViolation("Equal consecutive deltas on an increasing triple")
    edge = adjacency[d1, d2]
    return np.where(edge, np.where(d1 < d2, int(Color3.I), int(Color3.II)), int(Color3.III)).astype(np.int64)


def stepup_color(triple, g: BitGraph) -> Color3:
    """
    Color of three distinct strings under the base graph ``g`` on m vertices.

    Graph vertex i-1 stands for coordinate i.
    """
    vertices = sorted(triple)
    if len({v.value for v in vertices}) != 3:
        raise InvalidInputError("stepup_color needs three distinct strings")
    if any(v.m != g.n for v in vertices):
        raise InvalidInputError(f"Strings must have {g.n} bits")
    a, b, c = (np.array([v.value]) for v in vertices)
    return Color3(int(_stepup_colors(_adjacency_matrix(g), a, b, c)[0]))


def stepup_oracle(g: BitGraph, name: str = "stepup") -> TripleColoringOracle:
    """Oracle on [2^m] for the base graph ``g`` on m vertices."""
    if g.n < 1 or g.n > 40:
        raise InvalidInputError(f"Base graph must have 1..40 vertices, got {g.n}")
    return TripleColoringOracle(1 << g.n, 3, partial(_stepup_colors, _adjacency_matrix(g)), name=name)


def chain_properties(values: np.ndarray) -> dict:
    """
    Check the delta chain properties on one increasing chain.

    Returns:
        Flags for distinct consecutive deltas, endpoint delta equal to the
        maximum consecutive delta, and a unique maximiser
    """
    chain = np.sort(np.asarray(values, dtype=np.int64))
    steps = delta_many(chain[:-1], chain[1:])
    top = steps.max()
    return {
        "consecutive_distinct": bool((steps[:-1] != steps[1:]).all()),
        "endpoint_is_max": int(delta_many(chain[:1], chain[-1:])[0]) == int(top),
        "unique_max": int((steps == top).sum()) == 1,
    }


def sample_chain_violations(m: int, samples: int, length: int = 3, seed: int = 0) -> dict:
    """
    Count chains of random distinct strings that break a delta chain property.

    Chains with repeated strings are discarded.
    """
    if length < 3:
        raise InvalidInputError("Chains need at least three strings")
    rng = stream_rng(seed, "sampler")
    values = np.sort(rng.integers(0, 1 << m, size=(samples, length), dtype=np.int64), axis=1)
    values = values[(np.diff(values, axis=1) > 0).all(axis=1)]
    steps = delta_many(values[:, :-1], values[:, 1:])
    top = steps.max(axis=1)
    return {
        "chains": int(values.shape[0]),
        "property_a": int((steps[:, :-1] == steps[:, 1:]).any(axis=1).sum()),
        "property_b": int((delta_many(values[:, 0], values[:, -1]) != top).sum()),
        "unique_max": int(((steps == top[:, None]).sum(axis=1) != 1).sum()),
    }
