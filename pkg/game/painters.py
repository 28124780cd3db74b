"""
Painter strategies: callables ``(state, u, v) -> Color``.
"""

import sys
from typing import Callable, Optional, TextIO

from core.errors import PainterAborted
from core.hashing import keyed_hash, stream_seed, unit_interval
from core.search import find_clique
from game.state import Color, GameState

Painter = Callable[[GameState, int, int], Color]


def all_red(state: GameState, u: int, v: int) -> Color:
    return Color.RED


def all_blue(state: GameState, u: int, v: int) -> Color:
    return Color.BLUE


class SeededRandomPainter:
    """Red with probability ``p``; the coin of edge uv depends only on (seed, u, v)."""

    def __init__(self, p: float, seed: int):
        self.p = p
        self.seed = seed
        self._key = stream_seed(seed, "painter")

    def __call__(self, state: GameState, u: int, v: int) -> Color:
        coin = unit_interval(keyed_hash(self._key, min(u, v), max(u, v)))[0]
        return Color.RED if coin < self.p else Color.BLUE


def _clique_through(adj: list[int], u: int, v: int, ceiling: int) -> int:
    """Size of the largest clique containing u and v once uv is added, capped at ``ceiling``."""
    common = adj[u] & adj[v]
    size = 2
    while size < ceiling and find_clique(adj, common, size - 1) is not None:
        size += 1
    return size


class GreedyAdversarialPainter:
    """
    Never completes a target clique while a safe color exists.

    Among safe colors it takes the one leaving more room below its target
    (target minus the largest clique the edge would close); ties go to blue.
    """

    def __call__(self, state: GameState, u: int, v: int) -> Color:
        slack = {}
        for color in (Color.BLUE, Color.RED):
            target = state.target(color)
            size = _clique_through(state.adjacency(color), u, v, target)
            slack[color] = target - size
        safe = [c for c in (Color.BLUE, Color.RED) if slack[c] > 0]
        if not safe:
            return Color.BLUE
        return max(safe, key=lambda c: (slack[c], c is Color.BLUE))


class InteractivePainter:
    """
    Human painter on a text terminal.

    Shows the drawn graph and the pending edge, reads ``r`` or ``b``, and
    re-prompts on anything else.

    Raises:
        PainterAborted: On end of input
    """

    def __init__(self, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None):
        self.stdin = stdin or sys.stdin
        self.stdout = stdout or sys.stdout

    def __call__(self, state: GameState, u: int, v: int) -> Color:
        self.stdout.write(f"\nGraph after {len(state.edges)} edges:\n{state.adjacency_summary()}\n")
        while True:
            self.stdout.write(f"Color edge ({u}, {v}) [r/b]: ")
            self.stdout.flush()
            line = self.stdin.readline()
            if not line:
                raise PainterAborted(f"End of input while coloring edge ({u}, {v})")
            answer = line.strip().lower()
            if answer in ("r", "b"):
                return Color(answer)
            self.stdout.write(f"Invalid answer '{line.strip()}', expected r or b\n")


def painter_library(s: int, n: int, seed: int = 0, p: float = 0.5,
                    alpha: float = 0.5, oracle=None, stdin=None, stdout=None) -> dict[str, Painter]:
    """
    Every painter by name.

    ``threshold`` is only included when an oracle is given; it plays the
    extraction rule against that oracle.
    """
    painters: dict[str, Painter] = {
        "all-red": all_red,
        "all-blue": all_blue,
        "seeded-random": SeededRandomPainter(p, seed),
        "greedy-adversarial": GreedyAdversarialPainter(),
        "interactive": InteractivePainter(stdin, stdout),
    }
    if oracle is not None:
        from extraction.threshold import ThresholdPainter

        painters["threshold"] = ThresholdPainter(oracle, alpha)
    return painters
