"""
Exact vertex on-line Ramsey numbers for tiny targets by game-tree search.

Positions are memoised on the exact labelled state (vertex count and colored
edges), folded with the red/blue swap when s = n. No graph isomorphism
reduction is applied, so isomorphic positions are searched separately; this
keeps the search correct but limits it to the smallest targets.
"""

from dataclasses import dataclass
from typing import Optional

from core.errors import InvalidInputError
from core.limits import SearchLimits, unlimited
from core.search import find_clique


@dataclass
class MinimaxResult:
    value: int
    line: list[dict]
    nodes: int


class _Solver:
    def __init__(self, s: int, n: int, vertex_cap: int, limits: SearchLimits):
        self.targets = (s, n)
        self.vertex_cap = vertex_cap
        self.limits = limits
        self.symmetric = s == n
        self.memo: dict[tuple, bool] = {}

    def _key(self, count: int, edges: tuple) -> tuple:
        key = (count, edges)
        if self.symmetric:
            swapped = (count, tuple(sorted((u, v, 1 - c) for u, v, c in edges)))
            key = min(key, swapped)
        return key

    @staticmethod
    def _wins(count: int, edges: tuple, u: int, v: int, color: int, target: int) -> bool:
        adj = [0] * count
        for a, b, c in edges:
            if c == color:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        return find_clique(adj, adj[u] & adj[v], target - 2) is not None

    def builder_moves(self, count: int, edges: tuple) -> list[tuple]:
        moves = []
        newest = count - 1
        drawn = {(a, b) for a, b, _ in edges}
        if newest >= 1:
            moves += [("edge", w, newest) for w in range(newest) if (w, newest) not in drawn]
        newest_has_edge = any(b == newest for _, b, _ in edges)
        if count < self.vertex_cap and (count < 2 or newest_has_edge):
            moves.append(("vertex",))
        return moves

    def can_force(self, count: int, edges: tuple, budget: int) -> bool:
        """True iff builder forces a win drawing at most ``budget`` more edges."""
        if budget <= 0:
            return False
        key = (self._key(count, edges), budget)
        if key in self.memo:
            return self.memo[key]
        self.limits.tick()
        result = False
        for move in self.builder_moves(count, edges):
            if move[0] == "vertex":
                if self.can_force(count + 1, edges, budget):
                    result = True
                    break
                continue
            _, w, v = move
            if all(self._reply_loses(count, edges, w, v, color, budget) for color in (0, 1)):
                result = True
                break
        self.memo[key] = result
        return result

    def _reply_loses(self, count: int, edges: tuple, w: int, v: int, color: int, budget: int) -> bool:
        if self._wins(count, edges + ((w, v, color),), w, v, color, self.targets[color]):
            return True
        grown = tuple(sorted(edges + ((w, v, color),)))
        return self.can_force(count, grown, budget - 1)


def minimax_online(s: int, n: int, vertex_cap: Optional[int] = None,
                   limits: Optional[SearchLimits] = None, max_value: int = 64) -> MinimaxResult:
    """
    Minimum number of edges builder must draw to force a red K_s or blue K_n.

    Iterative deepening over the edge budget; states are memoised exactly and,
    when s == n, up to swapping the two colors.

    Args:
        s: Red clique target
        n: Blue clique target
        vertex_cap: Maximum number of exposed vertices, defaults to C(s+n-2, s-1)
        limits: Node and time caps
        max_value: Largest edge budget tried

    Returns:
        Value, one optimal builder line against the most stubborn painter, node count

    Raises:
        InvalidInputError: If a target is below 2
        BudgetExceededError: If the limits are hit
    """
    if s < 2 or n < 2:
        raise InvalidInputError(f"Game targets must be at least 2, got ({s}, {n})")
    if vertex_cap is None:
        from game.runner import budget_for

        vertex_cap = budget_for(s, n).v
    limits = limits or unlimited()
    solver = _Solver(s, n, vertex_cap, limits)
    for budget in range(1, max_value + 1):
        if solver.can_force(0, (), budget):
            return MinimaxResult(budget, _principal_line(solver, budget), limits.nodes)
    raise InvalidInputError(f"No forcing strategy within {max_value} edges and {vertex_cap} vertices")


def _principal_line(solver: _Solver, value: int) -> list[dict]:
    """Builder's first forcing move at each step; painter answers with the longest-lasting color."""
    line: list[dict] = []
    count, edges, budget = 0, (), value
    while budget > 0:
        chosen = None
        for move in solver.builder_moves(count, edges):
            if move[0] == "vertex":
                if solver.can_force(count + 1, edges, budget):
                    chosen = move
                    break
            elif all(solver._reply_loses(count, edges, move[1], move[2], c, budget) for c in (0, 1)):
                chosen = move
                break
        if chosen is None:
            break
        if chosen[0] == "vertex":
            line.append({"op": "vertex"})
            count += 1
            continue
        _, w, v = chosen
        replies = []
        for color in (1, 0):
            grown = tuple(sorted(edges + ((w, v, color),)))
            if solver._wins(count, grown, w, v, color, solver.targets[color]):
                replies.append((0, color, grown))
                continue
            need = next(k for k in range(1, budget) if solver.can_force(count, grown, k))
            replies.append((need, color, grown))
        need, color, grown = max(replies, key=lambda r: r[0])
        line.append({"op": "edge", "u": w, "v": v, "color": "r" if color == 0 else "b"})
        if need == 0:
            break
        edges, budget = grown, need
    return line
