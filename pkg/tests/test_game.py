import io
import random

import pytest

from core.errors import BudgetOverflowError, InvalidInputError
from core.models import Budget
from game.builders import CompleteBuilder, eh_builder
from game.minimax import minimax_online
from game.painters import (
    GreedyAdversarialPainter,
    InteractivePainter,
    SeededRandomPainter,
    all_blue,
    all_red,
    painter_library,
)
from game.runner import budget_for, builder_budget, replay_transcript, run_game
from game.state import Color, GameState


def test_budget_for_four_four():
    assert budget_for(4, 4) == Budget(v=20, r=41, m=81)


def test_budget_for_three_three():
    assert budget_for(3, 3) == Budget(v=6, r=7, m=13)


def test_budget_rejects_small_targets():
    with pytest.raises(InvalidInputError):
        budget_for(1, 3)


def test_budget_overflow():
    assert builder_budget(40, 40)[0] > (1 << 63)
    with pytest.raises(BudgetOverflowError):
        budget_for(40, 40)


def test_all_blue_gives_blue_triangle_in_three_edges():
    transcript = run_game(eh_builder(3, 3), all_blue, 3, 3)
    assert transcript.outcome.kind == "blue"
    assert transcript.outcome.witness == [0, 1, 2]
    assert transcript.budget == Budget(v=3, r=0, m=3)


def test_all_red_gives_red_triangle_within_budget():
    transcript = run_game(eh_builder(3, 3), all_red, 3, 3)
    assert transcript.outcome.kind == "red"
    assert transcript.budget.within(budget_for(3, 3))


@pytest.mark.parametrize("s,n", [(2, 2), (2, 5), (3, 4), (4, 3), (4, 4), (5, 4)])
def test_library_painters_lose_within_budget(s, n):
    budget = budget_for(s, n)
    for name, painter in painter_library(s, n, seed=1).items():
        if name == "interactive":
            continue
        transcript = run_game(eh_builder(s, n), painter, s, n, limits=budget)
        assert transcript.outcome.kind in ("red", "blue"), name
        assert transcript.budget.within(budget), name


def test_greedy_painter_avoids_closing_cliques_while_it_can():
    state = GameState(3, 3)
    state.expose()
    state.expose()
    state.color_edge(0, 1, Color.RED)
    state.expose()
    state.color_edge(0, 2, Color.RED)
    assert GreedyAdversarialPainter()(state, 1, 2) is Color.BLUE


def test_seeded_painter_is_reproducible():
    first = run_game(eh_builder(4, 4), SeededRandomPainter(0.5, 9), 4, 4)
    second = run_game(eh_builder(4, 4), SeededRandomPainter(0.5, 9), 4, 4)
    assert first.to_json() == second.to_json()


def _scripted(rng: random.Random, length: int = 200) -> io.StringIO:
    return io.StringIO("".join(rng.choice("rb") + "\n" for _ in range(length)))


@pytest.mark.parametrize("seed", range(50))
def test_scripted_interactive_play_within_budget(seed):
    budget = budget_for(4, 4)
    painter = InteractivePainter(_scripted(random.Random(seed)), io.StringIO())
    transcript = run_game(eh_builder(4, 4), painter, 4, 4, limits=budget)
    assert transcript.outcome.kind in ("red", "blue")
    assert transcript.budget.within(budget)


@pytest.mark.slow
def test_scripted_interactive_play_thousand_seeds():
    budget = budget_for(4, 4)
    for seed in range(1000):
        painter = InteractivePainter(_scripted(random.Random(seed)), io.StringIO())
        transcript = run_game(eh_builder(4, 4), painter, 4, 4, limits=budget)
        assert transcript.outcome.kind in ("red", "blue")
        assert transcript.budget.within(budget)


def test_interactive_painter_reprompts_on_bad_input():
    out = io.StringIO()
    painter = InteractivePainter(io.StringIO("x\nb\nb\nb\n"), out)
    transcript = run_game(eh_builder(3, 3), painter, 3, 3)
    assert transcript.outcome.kind == "blue"
    assert "Invalid answer 'x'" in out.getvalue()


def test_interactive_painter_aborts_on_eof():
    painter = InteractivePainter(io.StringIO("r\n"), io.StringIO())
    transcript = run_game(eh_builder(3, 3), painter, 3, 3)
    assert transcript.outcome.kind == "aborted"
    assert transcript.budget.m == 1


def test_exhausted_when_budget_is_too_small():
    transcript = run_game(eh_builder(3, 3), all_blue, 3, 3, limits=Budget(v=1, r=0, m=0))
    assert transcript.outcome.kind == "exhausted"


def test_complete_builder_also_wins():
    transcript = run_game(CompleteBuilder(), all_red, 4, 4)
    assert transcript.outcome.kind == "red"
    assert transcript.outcome.witness == [0, 1, 2, 3]


def test_replay_is_idempotent():
    transcript = run_game(eh_builder(4, 4), SeededRandomPainter(0.5, 3), 4, 4)
    assert replay_transcript(transcript).to_json() == transcript.to_json()


def test_replay_rejects_a_claimed_win_without_moves():
    transcript = run_game(eh_builder(3, 3), all_blue, 3, 3)
    tampered = transcript.model_copy(update={"moves": transcript.moves[:-1]})
    with pytest.raises(InvalidInputError):
        replay_transcript(tampered)


def test_state_rejects_edges_not_at_newest_vertex():
    state = GameState(3, 3)
    for _ in range(3):
        state.expose()
    with pytest.raises(InvalidInputError):
        state.color_edge(0, 1, Color.RED)


@pytest.mark.parametrize("s,n,value", [(2, 2, 1), (2, 3, 3)])
def test_minimax_small_values(s, n, value):
    assert minimax_online(s, n).value == value


def test_minimax_is_below_builder_budget():
    result = minimax_online(2, 4)
    assert result.value <= budget_for(2, 4).m


@pytest.mark.slow
@pytest.mark.parametrize("s,n", [(3, 3), (4, 4)])
def test_ten_thousand_seeded_painters_within_budget(s, n):
    budget = budget_for(s, n)
    for seed in range(10_000):
        transcript = run_game(eh_builder(s, n), SeededRandomPainter(0.5, seed), s, n, limits=budget)
        assert transcript.outcome.kind in ("red", "blue")
        assert transcript.budget.within(budget)


def test_minimax_memo_folds_the_color_swap_only_when_symmetric():
    from core.limits import SearchLimits
    from game.minimax import _Solver

    red, blue = ((0, 1, 0),), ((0, 1, 1),)
    symmetric = _Solver(3, 3, 6, SearchLimits())
    assert symmetric._key(2, red) == symmetric._key(2, blue)
    lopsided = _Solver(2, 3, 6, SearchLimits())
    assert lopsided._key(2, red) != lopsided._key(2, blue)
