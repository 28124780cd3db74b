from math import comb

import networkx as nx
import numpy as np
import pytest

from core.errors import BudgetExceededError, InvalidInputError
from core.graphs import BitGraph, EdgeColoring, Tournament, VertexSet, all_tournaments
from core.hashing import stream_seed
from core.io import (
    coloring_from_graph,
    read_coloring,
    read_graph,
    read_tournament,
    write_coloring,
    write_graph,
    write_tournament,
)
from core.limits import SearchLimits
from core.models import Budget, RunConfig
from core.oracles import constant_oracle, random_oracle
from core.search import (
    count_cyclic_triangles,
    find_mono_set,
    max_clique,
    max_independent_set,
    max_transitive_subtournament,
)
from constructions.colorings import tournament_oracle


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

def test_bitgraph_rejects_self_loop():
    with pytest.raises(InvalidInputError):
        BitGraph.from_edges(3, [(1, 1)])


def test_bitgraph_rejects_asymmetric_rows():
    with pytest.raises(InvalidInputError):
        BitGraph(2, (0b10, 0))


def test_tournament_must_orient_every_pair():
    with pytest.raises(InvalidInputError):
        Tournament(3, (0b110, 0b100, 0b010))


def test_tournament_from_mask_follows_pair_order():
    # bit 0: 0 -> 1, bit 1 clear: 2 -> 0, bit 2: 1 -> 2
    t = Tournament.from_mask(3, 0b101)
    assert t.beats_vertex(0, 1) and t.beats_vertex(2, 0) and t.beats_vertex(1, 2)
    assert count_cyclic_triangles(t) == 1


def test_edge_coloring_from_code_digits():
    coloring = EdgeColoring.from_code(3, 2, 0b010)
    assert coloring.colors == (0, 1, 0)
    assert coloring.color(2, 0) == 1


def test_edge_coloring_rejects_wrong_length():
    with pytest.raises(InvalidInputError):
        EdgeColoring(4, 2, (0, 1))


def test_vertex_set_sorts_and_validates():
    assert VertexSet((3, 1, 2), 5).members == (1, 2, 3)
    with pytest.raises(InvalidInputError):
        VertexSet((1, 1), 5)
    with pytest.raises(InvalidInputError):
        VertexSet((7,), 5)


# ---------------------------------------------------------------------------
# Cliques
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("seed", range(8))
def test_max_clique_matches_networkx(seed):
    g = nx.gnp_random_graph(14, 0.5, seed=seed)
    size, witness = max_clique(BitGraph.from_networkx(g))
    assert size == max(len(c) for c in nx.find_cliques(g))
    assert BitGraph.from_networkx(g).is_clique(witness)


def test_max_independent_set_of_cycle():
    size, _ = max_independent_set(BitGraph.cycle(5))
    assert size == 2


def test_max_clique_respects_node_cap():
    with pytest.raises(BudgetExceededError):
        max_clique(BitGraph.complete(10), limits=SearchLimits(node_cap=3))


# ---------------------------------------------------------------------------
# Tournaments
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cyclic_formula_agrees_with_direct_count(n):
    for t in all_tournaments(n):
        assert count_cyclic_triangles(t, "formula") == count_cyclic_triangles(t, "direct")


def sampled_formula_mismatches(samples: int, seed: int) -> list[int]:
    rng = np.random.default_rng(seed)
    mismatches = []
    for i in range(samples):
        t = Tournament.random(int(rng.integers(6, 9)), rng)
        if count_cyclic_triangles(t, "formula") != count_cyclic_triangles(t, "direct"):
            mismatches.append(i)
    return mismatches


def test_cyclic_formula_on_random_tournaments():
    assert sampled_formula_mismatches(500, seed=17) == []


@pytest.mark.slow
def test_cyclic_formula_on_ten_thousand_random_tournaments():
    assert sampled_formula_mismatches(10_000, seed=2024) == []


def test_rotational_tournament_is_extremal(rotational7):
    assert count_cyclic_triangles(rotational7) == comb(7, 3) - 7 * comb(3, 2) == 14


def test_transitive_tournament_has_no_cyclic_triangle():
    t = Tournament.transitive(6)
    assert count_cyclic_triangles(t) == 0
    assert max_transitive_subtournament(t) == (6, [0, 1, 2, 3, 4, 5])


def test_transitive_subtournament_of_rotational(rotational7):
    size, order = max_transitive_subtournament(rotational7)
    assert size == 4
    assert rotational7.is_transitive_on(order)


def test_unknown_counting_method():
    with pytest.raises(InvalidInputError):
        count_cyclic_triangles(Tournament.transitive(3), "matrix")


# ---------------------------------------------------------------------------
# Monochromatic sets
# ---------------------------------------------------------------------------

def test_constant_oracle_search():
    oracle = constant_oracle(6, 0)
    assert find_mono_set(oracle, None, 4, 0).witness == [0, 1, 2, 3]
    assert find_mono_set(oracle, None, 4, 1).witness is None


def test_search_returns_lexicographically_least_blue_set(rotational7):
    oracle = tournament_oracle(rotational7)
    # at most two cyclic triangles on four vertices, never four
    assert find_mono_set(oracle, None, 4, 0).witness is None
    assert find_mono_set(oracle, None, 4, 1).witness == [0, 1, 2, 3]


def test_search_on_subset_universe():
    oracle = constant_oracle(10, 1)
    cert = find_mono_set(oracle, VertexSet((2, 5, 7, 9), 10), 3, 1)
    assert cert.witness == [2, 5, 7]


def test_sampled_search_certificate():
    cert = find_mono_set(constant_oracle(8, 0), None, 5, 0, mode="sampled", trials=10, seed=3)
    assert cert.mode == "sampled"
    assert cert.trials == 1
    assert len(cert.witness) == 5


def test_search_witness_is_monochromatic():
    oracle = random_oracle(20, 0.5, seed=11)
    cert = find_mono_set(oracle, None, 4, 0)
    assert cert.witness is not None
    assert oracle.is_monochromatic(cert.witness, 0)


def test_search_rejects_small_q():
    with pytest.raises(InvalidInputError):
        find_mono_set(constant_oracle(5, 0), None, 2, 0)


def test_search_node_cap():
    with pytest.raises(BudgetExceededError):
        find_mono_set(random_oracle(30, 0.5, seed=1), None, 8, 0, limits=SearchLimits(node_cap=5))


# ---------------------------------------------------------------------------
# Oracles and hashing
# ---------------------------------------------------------------------------

def test_random_oracle_is_reproducible():
    a, b, c = np.array([0, 1, 2]), np.array([3, 4, 5]), np.array([6, 7, 8])
    first = random_oracle(10, 0.5, seed=4).evaluate_many(a, b, c)
    second = random_oracle(10, 0.5, seed=4).evaluate_many(a, b, c)
    assert (first == second).all()


def test_random_oracle_extreme_probabilities():
    assert random_oracle(6, 1.0, seed=0).is_monochromatic(range(6), 0)
    assert random_oracle(6, 0.0, seed=0).is_monochromatic(range(6), 1)


def test_oracle_rejects_out_of_range_triple():
    with pytest.raises(InvalidInputError):
        constant_oracle(4, 0).color(1, 2, 4)


def test_stream_seeds_differ_by_name():
    assert stream_seed(7, "c2") == stream_seed(7, "c2")
    assert stream_seed(7, "c2") != stream_seed(7, "painter")


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------

def test_graph_file_roundtrip(tmp_path, c5):
    assert read_graph(write_graph(c5, tmp_path / "c5.g")) == c5


def test_coloring_and_tournament_files(tmp_path, pentagon, rotational7):
    assert read_coloring(write_coloring(pentagon, tmp_path / "p.col")) == pentagon
    assert read_tournament(write_tournament(rotational7, tmp_path / "r.t")) == rotational7


def test_sample_inputs_match_builders(inputs_dir, c5, pentagon, triangle_red, rotational7):
    assert read_graph(inputs_dir / "c5.g") == c5
    assert read_coloring(inputs_dir / "pentagon.col") == pentagon
    assert read_coloring(inputs_dir / "triangle_red.col") == triangle_red
    assert read_tournament(inputs_dir / "rotational7.t") == rotational7


def test_missing_file_raises(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_graph(tmp_path / "absent.g")


def test_malformed_coloring_raises(tmp_path):
    path = tmp_path / "bad.col"
    path.write_text("c 3 2\nx 0 1 0\n")
    with pytest.raises(InvalidInputError):
        read_coloring(path)


def test_coloring_from_graph_marks_edges_red(c5):
    coloring = coloring_from_graph(c5)
    assert coloring.color(0, 1) == 0
    assert coloring.color(0, 2) == 1


# ---------------------------------------------------------------------------
# Models
# ---------------------------------------------------------------------------

def test_budget_within():
    assert Budget(v=3, r=0, m=3).within(Budget(v=6, r=7, m=13))
    assert not Budget(v=7, r=0, m=3).within(Budget(v=6, r=7, m=13))


def test_run_config_rejects_negative_seed():
    with pytest.raises(ValueError):
        RunConfig(subcommand="compute", seed=-1)


def test_generated_inputs_match_the_shipped_files(tmp_path, inputs_dir):
    from script.generate_inputs import generate_inputs

    written = generate_inputs(tmp_path / "inputs")
    assert sorted(p.name for p in written) == ["c5.g", "pentagon.col", "rotational7.t", "triangle_red.col"]
    assert read_graph(tmp_path / "inputs" / "c5.g") == read_graph(inputs_dir / "c5.g")
    assert read_tournament(tmp_path / "inputs" / "rotational7.t") == read_tournament(inputs_dir / "rotational7.t")
