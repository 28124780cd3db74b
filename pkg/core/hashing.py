"""
Seeded keyed hashing and named random streams.

Every pseudo-random choice in the toolkit (c2 in the lift coloring, random
oracles, random painters, hash tournaments, samplers) flows from here so that a
single run seed reproduces everything.
"""

import hashlib

import numpy as np

MASK64 = (1 << 64) - 1

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MUL1 = np.uint64(0xBF58476D1CE4E5B9)
_MUL2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)


def _mix(h: np.ndarray) -> np.ndarray:
    # splitmix64 finaliser
    h = (h ^ (h >> _S30)) * _MUL1
    h = (h ^ (h >> _S27)) * _MUL2
    return h ^ (h >> _S31)


def keyed_hash(key: int, *parts) -> np.ndarray:
    """
    Hash integer arrays under a 64-bit key.

    Args:
        key: Stream key (the seed)
        *parts: Integer scalars or arrays, broadcast together

    Returns:
        uint64 array with the broadcast shape of ``parts``
    """
    arrays = [np.atleast_1d(np.asarray(p)).astype(np.uint64) for p in parts]
    with np.errstate(over="ignore"):
        h = _mix(np.atleast_1d(np.asarray(key & MASK64, dtype=np.uint64)) + _GOLDEN)
        for arr in arrays:
            h = _mix(h ^ (arr * _GOLDEN + _MUL2))
    return h


def unit_interval(hashes: np.ndarray) -> np.ndarray:
    """Map uint64 hashes to floats in [0, 1) using their top 53 bits."""
    return (hashes >> _S11).astype(np.float64) * (1.0 / (1 << 53))


def stream_seed(seed: int, name: str) -> int:
    """Derive the 64-bit seed of a named sub-stream (``c2``, ``painter``, ``sampler``)."""
    digest = hashlib.blake2b(f"{seed}:{name}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def stream_rng(seed: int, name: str) -> np.random.Generator:
    """numpy Generator for a named sub-stream of ``seed``."""
    return np.random.default_rng(stream_seed(seed, name))
