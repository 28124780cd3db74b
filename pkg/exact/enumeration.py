"""
Brute-force enumerations over all tournaments or all pair colorings of [s].

Tournaments and colorings are numbered by their code: digit e (base 2 or 3)
of the code gives the e-th pair in lexicographic order. Every enumeration
returns the lowest code among the maximisers.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Optional

import numpy as np

from core.errors import BudgetExceededError, InvalidInputError
from core.graphs import EdgeColoring, Tournament
from core.limits import SearchLimits, past_deadline, unlimited
from exact.functions import T_closed, g13

CHUNK = 1 << 16
T_ENUMERATION_LIMIT = 7
T_SCORE_LIMIT = 9
F2_LIMIT = 7
F1_LIMIT = 6

# (a,b), (b,c), (a,c) colors of the counted patterns
F1_PATTERN = (0, 1, 2)
F2_PATTERN = (0, 0, 1)


@dataclass(frozen=True)
class EnumerationResult:
    """
    Args:
        value: Maximum found
        code: Lowest code attaining it, None when only bounded
        mode: "exact" or "lower-bound"
        nodes: Codes or search nodes visited
    """

    value: int
    code: Optional[int]
    mode: str
    nodes: int


def _pair_index(s: int) -> dict[tuple[int, int], int]:
    return {pair: e for e, pair in enumerate(combinations(range(s), 2))}


def _triple_pairs(s: int) -> np.ndarray:
    """Rows (e_ab, e_bc, e_ac) for every a < b < c."""
    index = _pair_index(s)
    rows = [(index[(a, b)], index[(b, c)], index[(a, c)]) for a, b, c in combinations(range(s), 3)]
    return np.array(rows, dtype=np.int64).reshape(-1, 3)


def _digits(codes: np.ndarray, palette: int, width: int) -> np.ndarray:
    powers = palette ** np.arange(width, dtype=np.int64)
    return ((codes[:, None] // powers[None, :]) % palette).astype(np.int8)


def _best_in(values: np.ndarray, codes: np.ndarray) -> tuple[int, int]:
    k = int(np.argmax(values))
    return int(values[k]), int(codes[k])


def _reduce(results: list[tuple[int, int]]) -> tuple[int, int]:
    """Max value, lowest code among ties."""
    best = max(v for v, _ in results)
    return best, min(c for v, c in results if v == best)


def _split(total: int, workers: int) -> list[tuple[int, int]]:
    """Chunk ranges [start, stop) covering [0, total)."""
    starts = list(range(0, total, CHUNK))
    ranges = [(start, min(start + CHUNK, total)) for start in starts]
    if workers <= 1:
        return [ranges]
    return [ranges[w::workers] for w in range(workers)]


def _check_deadline(deadline: Optional[float], code: int) -> None:
    if past_deadline(deadline):
        raise BudgetExceededError(code, reason="time cap")


def _run(worker, args_for, total: int, workers: int, limits: SearchLimits) -> tuple[int, int]:
    """Run ``worker`` over the chunks of [0, total); each chunk first checks the deadline."""
    limits.check_clock()
    groups = _split(total, workers)
    if workers <= 1:
        return worker(*args_for(groups[0]), limits.deadline)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(worker, *args_for(group), limits.deadline) for group in groups if group]
        return _reduce([f.result() for f in futures])


# ---------------------------------------------------------------------------
# Tournaments
# ---------------------------------------------------------------------------

def _tournament_chunks(s: int, ranges: list[tuple[int, int]], deadline: Optional[float] = None) -> tuple[int, int]:
    pairs = list(combinations(range(s), 2))
    total = comb(s, 3)
    results = []
    for start, stop in ranges:
        _check_deadline(deadline, start)
        codes = np.arange(start, stop, dtype=np.int64)
        bits = _digits(codes, 2, len(pairs)).astype(np.int64)
        out = np.zeros((len(codes), s), dtype=np.int64)
        for e, (u, v) in enumerate(pairs):
            out[:, u] += bits[:, e]
            out[:, v] += 1 - bits[:, e]
        cyclic = total - (out * (out - 1) // 2).sum(axis=1)
        results.append(_best_in(cyclic, codes))
    return _reduce(results)


def _landau_sequences(s: int):
    """Nondecreasing score sequences of tournaments on s vertices."""
    total = comb(s, 2)
    for seq in combinations_with_replacement(range(s), s):
        if sum(seq) != total:
            continue
        prefix = 0
        for k, score in enumerate(seq, start=1):
            prefix += score
            if prefix < comb(k, 2):
                break
        else:
            yield seq


def T_brute(s: int, workers: int = 1, limits: Optional[SearchLimits] = None) -> tuple[int, Tournament]:
    """
    Maximum number of cyclic triangles over all tournaments on s vertices.

    Up to 7 vertices every tournament is enumerated through the outdegree
    formula; for 8 and 9 the score sequences satisfying Landau's condition
    are enumerated and the near-regular tournament is the witness.

    Args:
        s: Vertex count
        workers: Worker processes for the full enumeration
        limits: Optional node cap, one node per tournament

    Returns:
        The maximum and a tournament attaining it

    Raises:
        BudgetExceededError: Beyond 9 vertices or when the limits are hit
    """
    if s < 1:
        raise InvalidInputError(f"s must be positive, got {s}")
    limits = limits or unlimited()
    if s <= 2:
        return 0, Tournament.transitive(s)
    if s <= T_ENUMERATION_LIMIT:
        total = 1 << comb(s, 2)
        limits.tick(total)
        value, code = _run(_tournament_chunks, lambda group: (s, group), total, workers, limits)
        return value, Tournament.from_mask(s, code)
    if s <= T_SCORE_LIMIT:
        best = 0
        for seq in _landau_sequences(s):
            limits.tick()
            best = max(best, comb(s, 3) - sum(comb(x, 2) for x in seq))
        return best, Tournament.near_regular(s)
    raise BudgetExceededError(0, reason=f"tournament enumeration stops at s={T_SCORE_LIMIT}")


# ---------------------------------------------------------------------------
# Pair colorings
# ---------------------------------------------------------------------------

def _pattern_chunks(s: int, palette: int, pattern: tuple[int, int, int],
                    ranges: list[tuple[int, int]], deadline: Optional[float] = None) -> tuple[int, int]:
    triples = _triple_pairs(s)
    x, y, z = pattern
    results = []
    for start, stop in ranges:
        _check_deadline(deadline, start)
        codes = np.arange(start, stop, dtype=np.int64)
        digits = _digits(codes, palette, comb(s, 2))
        counts = np.zeros(len(codes), dtype=np.int64)
        for e_ab, e_bc, e_ac in triples:
            counts += (digits[:, e_ab] == x) & (digits[:, e_bc] == y) & (digits[:, e_ac] == z)
        results.append(_best_in(counts, codes))
    return _reduce(results)


def count_pattern(coloring: EdgeColoring, pattern: tuple[int, int, int]) -> int:
    """Triples a < b < c whose pairs (a,b), (b,c), (a,c) carry ``pattern``."""
    x, y, z = pattern
    return sum(
        1
        for a, b, c in combinations(range(coloring.n), 3)
        if coloring.color(a, b) == x and coloring.color(b, c) == y and coloring.color(a, c) == z
    )


def _enumerate_pattern(s: int, palette: int, pattern, workers: int, limits: SearchLimits) -> EnumerationResult:
    if s < 3:
        return EnumerationResult(0, 0, "exact", 1)
    total = palette ** comb(s, 2)
    limits.tick(total)
    value, code = _run(_pattern_chunks, lambda group: (s, palette, pattern, group), total, workers, limits)
    return EnumerationResult(value, code, "exact", total)


def F2_formula(s: int) -> int:
    return T_closed(s)


def F2_brute(s: int, allow_eight: bool = False, workers: int = 1,
             limits: Optional[SearchLimits] = None) -> EnumerationResult:
    """
    Maximum number of triples with (a,b), (b,c) of color I and (a,c) of color II
    over all two-colorings of the pairs of [s].

    Raises:
        BudgetExceededError: Beyond 7 vertices, or 8 when ``allow_eight`` is set
    """
    if s < 1:
        raise InvalidInputError(f"s must be positive, got {s}")
    limit = F2_LIMIT + 1 if allow_eight else F2_LIMIT
    if s > limit:
        raise BudgetExceededError(0, reason=f"two-coloring enumeration stops at s={limit}")
    return _enumerate_pattern(s, 2, F2_PATTERN, workers, limits or unlimited())


def F1_brute(s: int, allow_seven: bool = False, workers: int = 1,
             limits: Optional[SearchLimits] = None) -> EnumerationResult:
    """
    Maximum number of triples with (a,b) of color I, (b,c) of color II and
    (a,c) of color III over all three-colorings of the pairs of [s].

    Up to 6 vertices all 3^C(s,2) colorings are enumerated. For 7 vertices a
    branch and bound search runs when ``allow_seven`` is set; hitting the
    node cap there yields g(7) as a lower bound instead of raising.

    Raises:
        BudgetExceededError: Beyond the enumeration range, or when the
            limits are hit during the full enumeration
    """
    if s < 1:
        raise InvalidInputError(f"s must be positive, got {s}")
    limits = limits or unlimited()
    if s <= F1_LIMIT:
        return _enumerate_pattern(s, 3, F1_PATTERN, workers, limits)
    if s == F1_LIMIT + 1 and allow_seven:
        return _F1_branch_and_bound(s, limits)
    raise BudgetExceededError(0, reason=f"three-coloring enumeration stops at s={F1_LIMIT}")


def _F1_branch_and_bound(s: int, limits: SearchLimits) -> EnumerationResult:
    """
    Depth-first search over pair colors, pairs ordered by larger endpoint.

    A triple stays alive while every colored pair of it matches the pattern;
    the number of alive triples bounds every completion.
    """
    index = _pair_index(s)
    order = sorted(index, key=lambda pair: (pair[1], pair[0]))
    triples = _triple_pairs(s)
    # per pair: (triple id, required color) for every triple containing it
    roles: dict[int, list[tuple[int, int]]] = {e: [] for e in index.values()}
    for t, row in enumerate(triples):
        for role, e in enumerate(row):
            roles[int(e)].append((t, F1_PATTERN[role]))

    ceiling = T_closed(s)
    lower, _ = g13(s)
    mismatches = [0] * len(triples)
    colors = [0] * len(order)
    best = {"value": lower - 1, "colors": None}
    alive = [len(triples)]

    def descend(depth: int) -> bool:
        limits.tick()
        if min(alive[0], ceiling) <= best["value"]:
            return False
        if depth == len(order):
            best["value"], best["colors"] = alive[0], list(colors)
            return alive[0] >= ceiling
        e = index[order[depth]]
        for color in range(3):
            killed = []
            for t, required in roles[e]:
                if color != required:
                    if mismatches[t] == 0:
                        alive[0] -= 1
                    mismatches[t] += 1
                    killed.append(t)
            colors[e] = color
            done = descend(depth + 1)
            for t in killed:
                mismatches[t] -= 1
                if mismatches[t] == 0:
                    alive[0] += 1
            if done:
                return True
        return False

    try:
        descend(0)
    except BudgetExceededError:
        return EnumerationResult(lower, None, "lower-bound", limits.nodes)
    if best["colors"] is None:
        return EnumerationResult(lower, None, "lower-bound", limits.nodes)
    code = sum(c * 3 ** e for e, c in enumerate(best["colors"]))
    return EnumerationResult(best["value"], code, "exact", limits.nodes)


def witness_coloring(s: int, palette: int, code: Optional[int]) -> Optional[EdgeColoring]:
    if code is None or s < 2:
        return None
    return EdgeColoring.from_code(s, palette, code)
