"""
Search kernels: maximum clique, monochromatic-set search, cyclic triangles and
transitive subtournaments.

Every kernel breaks ties by lowest vertex index first, so results do not
depend on the number of workers.
"""

from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Optional

import numpy as np

from core.errors import InvalidInputError
from core.graphs import BitGraph, Tournament, VertexSet, bits_of
from core.hashing import stream_rng
from core.limits import SearchLimits, unlimited
from core.models import SearchCertificate
from core.oracles import TripleColoringOracle


# ---------------------------------------------------------------------------
# Cliques
# ---------------------------------------------------------------------------

def _greedy_coloring(adj: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Order ``cand`` by greedy color classes; ``bounds[i]`` is the class of ``order[i]``."""
    order, bounds = [], []
    uncolored = cand
    k = 0
    while uncolored:
        k += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            bounds.append(k)
    return order, bounds


def max_clique(g: BitGraph, limits: Optional[SearchLimits] = None) -> tuple[int, VertexSet]:
    """
    Maximum clique by branch and bound with a greedy-coloring bound.

    Args:
        g: Graph to search
        limits: Optional node and time caps

    Returns:
        Clique number and one maximum clique

    Raises:
        BudgetExceededError: If the limits are hit
    """
    limits = limits or unlimited()
    best: list[tuple[int, ...]] = [()]

    def expand(clique: tuple[int, ...], cand: int) -> None:
        limits.tick()
        order, bounds = _greedy_coloring(g.adj, cand)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if len(clique) + bound <= len(best[0]):
                return
            grown = clique + (v,)
            sub = cand & g.adj[v]
            if sub:
                expand(grown, sub)
            elif len(grown) > len(best[0]):
                best[0] = grown
            cand &= ~(1 << v)

    if g.n:
        expand((), (1 << g.n) - 1)
    return len(best[0]), VertexSet(best[0], g.n)


def max_independent_set(g: BitGraph, limits: Optional[SearchLimits] = None) -> tuple[int, VertexSet]:
    return max_clique(g.complement(), limits)


def find_clique(adj, cand: int, k: int) -> Optional[list[int]]:
    """Lexicographically first ``k``-clique inside ``cand``, or None."""
    if k == 0:
        return []
    while cand:
        if cand.bit_count() < k:
            return None
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        rest = find_clique(adj, cand & adj[v], k - 1)
        if rest is not None:
            return [v] + rest
    return None


# ---------------------------------------------------------------------------
# Monochromatic sets
# ---------------------------------------------------------------------------

def _row_to_bitset(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def build_link_table(oracle: TripleColoringOracle, members: np.ndarray, color: int) -> list[list[int]]:
    """
    ``link[i][j]`` (i < j) is the bitset of k > j with triple (i, j, k) of ``color``.

    Indices refer to positions in ``members``.
    """
    size = len(members)
    link = [[0] * size for _ in range(size)]
    for i in range(size - 2):
        js, ks = np.meshgrid(np.arange(i + 1, size), np.arange(size), indexing="ij")
        valid = ks > js
        if not valid.any():
            continue
        colors = oracle.evaluate_many(members[i], members[js[valid]], members[ks[valid]])
        hits = np.zeros(js.shape, dtype=bool)
        hits[valid] = colors == color
        for offset, row in enumerate(hits):
            link[i][i + 1 + offset] = _row_to_bitset(row)
    return link


def _extend(link: list[list[int]], chosen: list[int], cand: int, q: int,
            limits: SearchLimits) -> Optional[list[int]]:
    limits.tick()
    need = q - len(chosen)
    if need == 0:
        return chosen
    while cand:
        if cand.bit_count() < need:
            return None
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        sub = cand
        for x in chosen:
            sub &= link[x][v]
        if sub.bit_count() >= need - 1:
            found = _extend(link, chosen + [v], sub, q, limits)
            if found is not None:
                return found
    return None


def _search_leads(oracle: TripleColoringOracle, members: np.ndarray, q: int, color: int,
                  leads: list[int], node_cap: Optional[int], time_cap: Optional[float]
                  ) -> tuple[Optional[list[int]], int]:
    limits = SearchLimits(node_cap=node_cap, time_cap=time_cap)
    link = build_link_table(oracle, members, color)
    size = len(members)
    for lead in leads:
        above = ((1 << size) - 1) & ~((1 << (lead + 1)) - 1)
        found = _extend(link, [lead], above, q, limits)
        if found is not None:
            return found, limits.nodes
    return None, limits.nodes


def find_mono_set(
    oracle: TripleColoringOracle,
    universe: Optional[VertexSet],
    q: int,
    color: int,
    mode: str = "exhaustive",
    trials: int = 1000,
    seed: int = 0,
    limits: Optional[SearchLimits] = None,
    workers: int = 1,
) -> SearchCertificate:
    """
    Search a ``q``-set all of whose triples have ``color``.

    Exhaustive mode enumerates subsets lexicographically over bitset link
    tables and returns the lexicographically least witness. Sampled mode runs
    ``trials`` randomized greedy completions.

    Args:
        oracle: Triple coloring
        universe: Vertices to search, the whole oracle universe when None
        q: Target size, at least 3
        color: Color id
        mode: "exhaustive" or "sampled"
        trials: Number of greedy trials in sampled mode
        seed: Run seed for the ``sampler`` stream
        limits: Optional node and time caps
        workers: Worker processes for exhaustive mode

    Returns:
        SearchCertificate with the witness or None

    Raises:
        InvalidInputError: If q < 3 or the mode is unknown
        BudgetExceededError: If the limits are hit
    """
    if q < 3:
        raise InvalidInputError(f"Monochromatic set size must be at least 3, got {q}")
    if not 0 <= color < oracle.palette:
        raise InvalidInputError(f"Color {color} outside palette of size {oracle.palette}")
    if universe is None:
        universe = VertexSet.full(oracle.universe)
    members = np.array(universe.members, dtype=np.int64)
    limits = limits or unlimited()

    if mode == "sampled":
        return _sampled_search(oracle, members, q, color, trials, seed, limits)
    if mode != "exhaustive":
        raise InvalidInputError(f"Unknown search mode: {mode}")

    if len(members) < q:
        return SearchCertificate(mode="exhaustive", witness=None, nodes=0)

    leads = list(range(len(members) - q + 1))
    if workers <= 1:
        found, nodes = _search_leads(oracle, members, q, color, leads, limits.node_cap, limits.time_cap)
    else:
        chunks = [leads[w::workers] for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                _search_leads,
                [oracle] * workers, [members] * workers, [q] * workers, [color] * workers,
                chunks, [limits.node_cap] * workers, [limits.time_cap] * workers,
            ))
        nodes = sum(n for _, n in results)
        hits = [w for w, _ in results if w is not None]
        found = min(hits) if hits else None

    witness = [int(members[i]) for i in found] if found is not None else None
    return SearchCertificate(mode="exhaustive", witness=witness, nodes=nodes)


def _sampled_search(oracle: TripleColoringOracle, members: np.ndarray, q: int, color: int,
                    trials: int, seed: int, limits: SearchLimits) -> SearchCertificate:
    rng = stream_rng(seed, "sampler")
    evaluations = 0
    for trial in range(trials):
        order = rng.permutation(members)
        chosen: list[int] = []
        for v in order:
            limits.tick()
            if len(chosen) >= 2:
                pairs = np.array([(x, y) for i, x in enumerate(chosen) for y in chosen[i + 1:]], dtype=np.int64)
                colors = oracle.evaluate_many(pairs[:, 0], pairs[:, 1], int(v))
                evaluations += len(pairs)
                if not (colors == color).all():
                    continue
            chosen.append(int(v))
            if len(chosen) == q:
                return SearchCertificate(mode="sampled", witness=sorted(chosen),
                                         nodes=evaluations, trials=trial + 1)
    return SearchCertificate(mode="sampled", witness=None, nodes=evaluations, trials=trials)


# ---------------------------------------------------------------------------
# Tournaments
# ---------------------------------------------------------------------------

def count_cyclic_triangles(t: Tournament, method: str = "formula") -> int:
    """
    Number of cyclic triangles.

    ``formula`` uses C(n,3) minus the sum of C(d_i,2) over outdegrees;
    ``direct`` enumerates triples.
    """
    if method == "formula":
        return comb(t.n, 3) - sum(comb(d, 2) for d in t.outdegrees())
    if method != "direct":
        raise InvalidInputError(f"Unknown counting method: {method}")
    m = t.matrix
    total = 0
    for u in range(t.n - 2):
        rest = np.arange(u + 1, t.n)
        sub = m[np.ix_(rest, rest)]
        forward = m[u, rest][:, None] & sub & m[rest, u][None, :]
        backward = m[rest, u][:, None] & sub.T & m[u, rest][None, :]
        total += int(np.triu(forward | backward, 1).sum())
    return total


def max_transitive_subtournament(t: Tournament, cap: Optional[int] = None,
                                 limits: Optional[SearchLimits] = None) -> tuple[int, list[int]]:
    """
    Largest transitive subtournament, listed from source to sink.

    Args:
        t: Tournament
        cap: Stop as soon as a transitive set of this size is found
        limits: Optional node and time caps

    Returns:
        Size and witness ordering

    Raises:
        InvalidInputError: If cap exceeds the vertex count
        BudgetExceededError: If the limits are hit
    """
    cap = t.n if cap is None else cap
    if cap > t.n or cap < 0:
        raise InvalidInputError(f"cap must lie in [0, {t.n}], got {cap}")
    if cap == 0:
        return 0, []
    limits = limits or unlimited()
    best: list[list[int]] = [[]]

    def expand(order: list[int], cand: int) -> bool:
        limits.tick()
        if len(order) > len(best[0]):
            best[0] = order
            if len(order) >= cap:
                return True
        for v in bits_of(cand):
            if len(order) + cand.bit_count() <= len(best[0]):
                return False
            if expand(order + [v], cand & t.beats[v]):
                return True
            cand &= ~(1 << v)
        return False

    expand([], (1 << t.n) - 1)
    return len(best[0]), best[0]
