from math import log2

import pytest

from core.errors import InvalidInputError
from core.oracles import constant_oracle, random_oracle
from constructions.colorings import hash_tournament_oracle, pattern_oracle
from extraction.bounds import (
    KNOWN_RAMSEY,
    bound_thm21,
    corollary23_log2_bound,
    erdos_rado_recursion_bound,
    k43e_log2_bound,
    lift_lower_bound_log2,
    optimal_alpha,
    random_coloring_expectation,
    thm21_log2,
    thm25_log2log2,
)
from extraction.procedure import ExtractionConfig, classic_extract, erdos_rado_extract, k43e_extract
from extraction.threshold import ThresholdPainter
from game.state import Color, GameState

GUARANTEED_N = 57344


# ---------------------------------------------------------------------------
# Bounds
# ---------------------------------------------------------------------------

def test_bound_four_four_half():
    bound = bound_thm21(4, 4, 0.5)
    assert bound.ceil == GUARANTEED_N
    assert bound.log2 == pytest.approx(log2(GUARANTEED_N))


@pytest.mark.parametrize("s,n", [(3, 3), (4, 5), (5, 5), (6, 6)])
def test_half_alpha_is_power_of_two_times_v_plus_one(s, n):
    from game.runner import builder_budget

    v, _, m = builder_budget(s - 1, n - 1)
    assert bound_thm21(s, n, 0.5).exact == (v + 1) * 2 ** m


def test_bound_rejects_alpha_above_half():
    with pytest.raises(InvalidInputError):
        bound_thm21(4, 4, 0.6)


def test_four_four_exponent():
    assert corollary23_log2_bound(4, 4) == pytest.approx(192)
    with pytest.raises(InvalidInputError):
        corollary23_log2_bound(5, 4)


def test_optimal_alpha_is_never_worse_than_half():
    result = optimal_alpha(4, 4)
    assert 0 < result["alpha"] <= 0.5
    assert result["log2_bound"] <= thm21_log2(4, 4, 0.5) + 1e-9


def test_erdos_rado_base_case():
    tower = erdos_rado_recursion_bound(3, 4, 4, KNOWN_RAMSEY)
    assert tower.height == 1
    assert tower.top_exact == 15
    assert erdos_rado_recursion_bound(4, 5, 5).height == 2


def test_diagonal_bound_is_linear_in_k():
    assert thm25_log2log2(20) <= 2.2 * 20
    for k in range(3, 51):
        assert thm25_log2log2(k) <= 3 * k


def test_lift_lower_bound_grows_with_n():
    assert lift_lower_bound_log2(5, 48) < lift_lower_bound_log2(5, 96)


def test_k43e_bound():
    assert 2 ** k43e_log2_bound(4) == pytest.approx((8 * 2.718281828459045) ** 4)


def test_random_expectation_is_symmetric_at_half():
    result = random_coloring_expectation(20, 4, 4, p=0.5)
    assert result["log2_red"] == pytest.approx(result["log2_blue"])
    assert result["log2_total"] == pytest.approx(result["log2_red"] + 1)


# ---------------------------------------------------------------------------
# Extraction
# ---------------------------------------------------------------------------

def test_constant_red_extraction():
    report = erdos_rado_extract(ExtractionConfig(4, 4, 0.5, GUARANTEED_N, constant_oracle(GUARANTEED_N, 0)))
    assert report.outcome == "red"
    assert report.witness == [0, 1, 2, 3]
    assert report.verified
    assert report.bound == GUARANTEED_N
    assert sum(step.edges for step in report.trace) == 3


def test_constant_blue_extraction():
    report = erdos_rado_extract(ExtractionConfig(4, 4, 0.5, GUARANTEED_N, constant_oracle(GUARANTEED_N, 1)))
    assert report.outcome == "blue"
    assert report.verified


@pytest.mark.parametrize("seed", range(5))
def test_random_extraction_at_guaranteed_size(seed):
    oracle = random_oracle(GUARANTEED_N, 0.5, seed)
    report = erdos_rado_extract(ExtractionConfig(4, 4, 0.5, GUARANTEED_N, oracle))
    assert report.outcome in ("red", "blue")
    color = 0 if report.outcome == "red" else 1
    assert oracle.is_monochromatic(report.witness, color)


def test_hash_tournament_extraction():
    oracle = hash_tournament_oracle(GUARANTEED_N, 2)
    report = erdos_rado_extract(ExtractionConfig(4, 4, 0.5, GUARANTEED_N, oracle))
    assert report.verified


def test_survivor_bounds_hold_along_the_trace():
    report = erdos_rado_extract(ExtractionConfig(4, 4, 0.5, GUARANTEED_N, random_oracle(GUARANTEED_N, 0.5, 7)))
    for step in report.trace:
        if step.bound_log2 is not None:
            assert log2(max(step.survivors, 1)) >= step.bound_log2 - 1e-9 or step.survivors == 0


def test_small_universe_may_fail_without_raising():
    report = erdos_rado_extract(ExtractionConfig(4, 4, 0.5, 6, random_oracle(6, 0.5, 1)))
    assert report.outcome in ("red", "blue", "failure")
    if report.outcome != "failure":
        assert report.verified


def test_classic_procedure():
    report = classic_extract(ExtractionConfig(4, 4, 0.5, 100, constant_oracle(100, 0)))
    assert report.outcome == "red"
    assert report.verified


@pytest.mark.parametrize("kwargs", [
    {"s": 2, "n": 4, "alpha": 0.5, "N": 10},
    {"s": 4, "n": 4, "alpha": 0.7, "N": 10},
    {"s": 4, "n": 4, "alpha": 0.5, "N": 11},
])
def test_config_validation(kwargs):
    with pytest.raises(InvalidInputError):
        ExtractionConfig(oracle=constant_oracle(10, 0), **kwargs)


def test_config_rejects_three_color_oracle():
    with pytest.raises(InvalidInputError):
        ExtractionConfig(4, 4, 0.5, 10, constant_oracle(10, 2, palette=3))


def test_guaranteed_flag():
    oracle = constant_oracle(GUARANTEED_N, 0)
    assert ExtractionConfig(4, 4, 0.5, GUARANTEED_N, oracle).guaranteed
    assert not ExtractionConfig(4, 4, 0.5, GUARANTEED_N - 1, oracle).guaranteed


def test_k43e_constant_red_gives_k4_minus_edge():
    report = k43e_extract(constant_oracle(512, 0), 4, 512)
    assert report.outcome == "red-k4-minus-edge"
    assert report.witness == [0, 1, 2, 3]
    assert report.verified


def test_k43e_constant_blue_gives_blue_set():
    report = k43e_extract(constant_oracle(512, 1), 4, 512)
    assert report.outcome == "blue"
    assert report.witness == [0, 1, 2, 3]


@pytest.mark.parametrize("seed", range(4))
def test_k43e_never_finds_red_k4_minus_edge_in_a_tournament(seed):
    report = k43e_extract(hash_tournament_oracle(512, seed), 4, 512)
    assert report.outcome != "red-k4-minus-edge"
    if report.outcome == "blue":
        assert report.verified


@pytest.mark.parametrize("seed", range(3))
def test_k43e_random_oracles(seed):
    report = k43e_extract(pattern_oracle(512, seed), 4, 512)
    assert report.outcome in ("blue", "red-k4-minus-edge", "failure")
    if report.outcome != "failure":
        assert report.verified


@pytest.mark.parametrize("color,expected", [(0, Color.RED), (1, Color.BLUE)])
def test_threshold_painter_keeps_agreeing_survivors(color, expected):
    painter = ThresholdPainter(constant_oracle(10, color), 0.5)
    state = GameState(4, 4)
    painter.on_vertex(state, 0)
    painter.on_vertex(state, 1)
    assert painter(state, 0, 1) is expected
    assert painter.survivors.tolist() == list(range(2, 10))
    assert painter.vertices([1, 0]) == [0, 1]


def test_threshold_tie_goes_to_red():
    painter = ThresholdPainter(constant_oracle(2, 1), 0.5)
    state = GameState(4, 4)
    painter.on_vertex(state, 0)
    painter.on_vertex(state, 1)
    assert painter(state, 0, 1) is Color.RED
