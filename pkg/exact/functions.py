"""
Closed forms and recursions: T(s), g(s) (the three-part recursion), d(s) = T(s) - g(s),
nice numbers and the mod-6 recurrences of d.
"""

from functools import lru_cache
from math import log

import numpy as np

from core.errors import InvalidInputError

EXHAUSTIVE_LIMIT = 1000


def T_closed(s: int) -> int:
    """
    Maximum number of cyclic triangles in a tournament on s vertices.

    (s+1)s(s-1)/24 for odd s, (s+2)s(s-2)/24 for even s.
    """
    if s < 1:
        raise InvalidInputError(f"s must be positive, got {s}")
    if s % 2:
        return (s + 1) * s * (s - 1) // 24
    return (s + 2) * s * (s - 2) // 24


def T_closed_many(s: np.ndarray) -> np.ndarray:
    s = np.asarray(s, dtype=np.int64)
    return np.where(s % 2 == 1, (s + 1) * s * (s - 1) // 24, (s + 2) * s * (s - 2) // 24)


@lru_cache(maxsize=4)
def _g_table(size: int, exhaustive_limit: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Values g[0..size) and chosen parts (a, b) with c = s - a - b.

    Up to ``exhaustive_limit`` every partition a <= b <= c is tried and the
    lexicographically least maximiser kept; beyond it the near-equal
    partition is used.
    """
    g = np.zeros(size, dtype=np.int64)
    parts = np.zeros((size, 2), dtype=np.int64)
    for s in range(3, size):
        if s <= exhaustive_limit:
            best, best_ab = -1, (0, 0)
            for a in range(1, s // 3 + 1):
                b = np.arange(a, (s - a) // 2 + 1)
                c = s - a - b
                values = g[a] + g[b] + g[c] + a * b * c
                k = int(np.argmax(values))
                if values[k] > best:
                    best, best_ab = int(values[k]), (a, int(b[k]))
            g[s] = best
            parts[s] = best_ab
        else:
            q, r = divmod(s, 3)
            a, b = q, q + (1 if r == 2 else 0)
            c = s - a - b
            g[s] = g[a] + g[b] + g[c] + a * b * c
            parts[s] = (a, b)
    g.flags.writeable = False
    parts.flags.writeable = False
    return g, parts


def g_table(s_max: int, exhaustive_limit: int = EXHAUSTIVE_LIMIT) -> np.ndarray:
    """g(0..s_max) as an int64 array, g(0) = 0."""
    size = 1
    while size <= s_max:
        size *= 2
    return _g_table(size, exhaustive_limit)[0][: s_max + 1]


def _tree(s: int, parts: np.ndarray) -> dict:
    if s <= 2:
        return {"s": s, "parts": []}
    a, b = (int(x) for x in parts[s])
    return {"s": s, "parts": [_tree(a, parts), _tree(b, parts), _tree(s - a - b, parts)]}


def g13(s: int, exhaustive_limit: int = EXHAUSTIVE_LIMIT) -> tuple[int, dict]:
    """
    g(s) = max over a+b+c = s of g(a)+g(b)+g(c)+abc, g(1) = g(2) = 0.

    Args:
        s: Positive integer
        exhaustive_limit: Largest s whose maximum is taken over all partitions

    Returns:
        The value and the partition tree ``{"s", "parts"}`` attaining it
    """
    if s < 1:
        raise InvalidInputError(f"s must be positive, got {s}")
    size = 1
    while size <= s:
        size *= 2
    g, parts = _g_table(size, exhaustive_limit)
    return int(g[s]), _tree(s, parts)


def g_provenance(s: int, exhaustive_limit: int = EXHAUSTIVE_LIMIT) -> str:
    return "recursion" if s <= exhaustive_limit else "heuristic"


def near_equal_attains_max(s_max: int = EXHAUSTIVE_LIMIT) -> list[int]:
    """Values of s <= s_max where the near-equal partition misses the exhaustive maximum."""
    g = g_table(s_max)
    misses = []
    for s in range(3, s_max + 1):
        q, r = divmod(s, 3)
        a, b = q, q + (1 if r == 2 else 0)
        c = s - a - b
        if g[a] + g[b] + g[c] + a * b * c != g[s]:
            misses.append(s)
    return misses


def d(s: int) -> int:
    """T(s) - g(s), never negative."""
    return T_closed(s) - g13(s)[0]


def d_table(s_max: int) -> np.ndarray:
    """d(0..s_max); d(0) = 0."""
    s = np.arange(s_max + 1)
    out = T_closed_many(s) - g_table(s_max)
    out[0] = 0
    return out


def nice_numbers(limit: int) -> list[int]:
    """Positive s <= limit with d(s) = 0."""
    table = d_table(limit)
    return [int(s) for s in np.flatnonzero(table == 0) if s >= 1]


def _recurrence_cases(x: int, dv) -> list[tuple[str, int, int, int]]:
    """(case, s, d(s), right-hand side) for the six residues of s mod 6."""
    return [
        ("6x-2", 6 * x - 2, dv[6 * x - 2], 2 * dv[2 * x - 1] + dv[2 * x]),
        ("6x-1", 6 * x - 1, dv[6 * x - 1], dv[2 * x - 1] + 2 * dv[2 * x] + x),
        ("6x", 6 * x, dv[6 * x], 3 * dv[2 * x]),
        ("6x+1", 6 * x + 1, dv[6 * x + 1], 2 * dv[2 * x] + dv[2 * x + 1] + x),
        ("6x+2", 6 * x + 2, dv[6 * x + 2], dv[2 * x] + 2 * dv[2 * x + 1]),
        ("6x+3", 6 * x + 3, dv[6 * x + 3], 3 * dv[2 * x + 1]),
    ]


def verify_d_recurrences(x_max: int) -> dict:
    """
    Check the six mod-6 identities of d for 1 <= x <= x_max.

    Returns:
        Report with the number of identities checked and the first violation
    """
    if x_max < 1:
        raise InvalidInputError(f"x_max must be positive, got {x_max}")
    dv = [int(v) for v in d_table(6 * x_max + 3)]
    checked = 0
    for x in range(1, x_max + 1):
        for case, s, lhs, rhs in _recurrence_cases(x, dv):
            checked += 1
            if lhs != rhs:
                return {"x_max": x_max, "checked": checked, "passed": False,
                        "violation": {"case": case, "x": x, "s": s, "d": lhs, "expected": rhs}}
    return {"x_max": x_max, "checked": checked, "passed": True, "violation": None}


def d_growth_report(s_max: int) -> dict:
    """
    Empirical sup of d(s) / (s ln s) over 3 <= s <= s_max.

    Returns:
        The maximal ratio, where it is attained and ratios at a few checkpoints
    """
    if s_max < 3:
        raise InvalidInputError(f"s_max must be at least 3, got {s_max}")
    table = d_table(s_max).astype(np.float64)
    s = np.arange(3, s_max + 1, dtype=np.float64)
    ratios = table[3:] / (s * np.log(s))
    k = int(np.argmax(ratios))
    checkpoints = [c for c in (10, 100, 1000, 10_000, 100_000) if c <= s_max]
    return {
        "s_max": s_max,
        "max_ratio": float(ratios[k]),
        "argmax": int(s[k]),
        "checkpoints": {c: float(table[c] / (c * log(c))) for c in checkpoints},
    }


def d_triple_odd(s_max: int) -> list[int]:
    """Odd s <= s_max with d(3s) != 3 d(s)."""
    table = d_table(3 * s_max)
    return [s for s in range(1, s_max + 1, 2) if table[3 * s] != 3 * table[s]]
