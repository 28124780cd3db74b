"""
Game driver, budget formulas and transcript replay.
"""

from math import comb
from typing import Optional

from core.errors import BudgetOverflowError, InvalidInputError, PainterAborted
from core.models import Budget, GameTranscript, Outcome
from game.builders import Builder
from game.painters import Painter
from game.state import Color, GameState

INT64_MAX = (1 << 63) - 1


def builder_budget(s: int, n: int) -> tuple[int, int, int]:
    """Unchecked (vertices, red edges, total edges) of the string-labeling builder."""
    vertices = comb(s + n - 2, s - 1)
    return vertices, (s - 2) * vertices + 1, (s + n - 4) * vertices + 1


def budget_for(s: int, n: int) -> Budget:
    """
    Vertices, red edges and total edges the string-labeling builder needs.

    Args:
        s: Red clique target
        n: Blue clique target

    Returns:
        Budget (C, (s-2)C+1, (s+n-4)C+1) with C = C(s+n-2, s-1)

    Raises:
        InvalidInputError: If s or n is below 2
        BudgetOverflowError: If a component exceeds a signed 64-bit integer
    """
    if s < 2 or n < 2:
        raise InvalidInputError(f"Game targets must be at least 2, got ({s}, {n})")
    vertices, red, total = builder_budget(s, n)
    if max(vertices, red, total) > INT64_MAX:
        raise BudgetOverflowError(f"Budget for ({s}, {n}) overflows 64 bits")
    return Budget(v=vertices, r=red, m=total)


def _finish(state: GameState, kind: str, witness: Optional[list[int]] = None) -> GameTranscript:
    return GameTranscript(
        target=[state.s, state.n],
        moves=list(state.moves),
        outcome=Outcome(kind=kind, witness=witness or []),
        budget=state.budget(),
    )


def run_game(builder: Builder, painter: Painter, s: int, n: int,
             limits: Optional[Budget] = None, state: Optional[GameState] = None) -> GameTranscript:
    """
    Play builder against painter until a red K_s or a blue K_n appears.

    The game ends as ``exhausted`` when exposing a vertex or drawing an edge
    would pass ``limits``, or when the red count passes its limit. It ends as
    ``aborted`` when the painter gives up.

    Args:
        builder: Builder strategy
        painter: Painter strategy, optionally with an ``on_vertex`` hook
        s: Red clique target
        n: Blue clique target
        limits: Optional budget ceiling
        state: Optional fresh state to play on

    Returns:
        The game transcript
    """
    state = state or GameState(s, n)
    on_vertex = getattr(painter, "on_vertex", None)
    try:
        while True:
            if limits is not None and state.vertex_count >= limits.v:
                return _finish(state, "exhausted")
            v = state.expose()
            if on_vertex is not None:
                on_vertex(state, v)
            while (w := builder.next_edge(state)) is not None:
                if limits is not None and len(state.edges) >= limits.m:
                    return _finish(state, "exhausted")
                color = Color(painter(state, w, v))
                witness = state.color_edge(w, v, color)
                if witness is not None:
                    return _finish(state, "red" if color is Color.RED else "blue", witness)
                if limits is not None and state.red_count > limits.r:
                    return _finish(state, "exhausted")
            # a builder that labels nothing and draws nothing would stall
            if v > 0 and not any(state.has_edge(x, v) for x in range(v)) and v not in state.vertex_labels:
                return _finish(state, "exhausted")
    except PainterAborted:
        return _finish(state, "aborted")


def replay_transcript(transcript: GameTranscript) -> GameTranscript:
    """
    Re-execute the moves of a transcript and rebuild it.

    Raises:
        InvalidInputError: If a move is illegal or follows a decided game
    """
    s, n = transcript.target
    state = GameState(s, n)
    kind, witness = None, None
    for move in transcript.moves:
        if kind is not None:
            raise InvalidInputError("Move recorded after the game was decided")
        if move.op == "vertex":
            state.expose()
            continue
        color = Color(move.color)
        found = state.color_edge(move.u, move.v, color)
        if found is not None:
            kind, witness = ("red" if color is Color.RED else "blue"), found
    if kind is None:
        if transcript.outcome.kind in ("red", "blue"):
            raise InvalidInputError("Transcript claims a win its moves do not produce")
        kind = transcript.outcome.kind
    return _finish(state, kind, witness)
