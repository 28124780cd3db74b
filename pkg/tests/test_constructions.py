from math import comb

import numpy as np
import pytest

from core.errors import InvalidInputError
from core.graphs import BitGraph, Color2, Color3
from core.search import find_mono_set
from constructions.colorings import (
    LiftColoringSpec,
    hash_tournament,
    hash_tournament_oracle,
    lift_color,
    lift_oracle,
    odd_cycle_red_check,
    parity_color,
    parity_coloring,
    pattern_oracle,
    tournament_color,
    tournament_oracle,
)
from constructions.hypergraphs import (
    Blowup,
    Hypergraph3,
    build_Cn,
    build_family_hypergraph,
    build_HG,
    is_k4_minus_edge,
    read_hypergraph,
    write_hypergraph,
)
from constructions.oracle_spec import parse_oracle
from constructions.stepup import (
    StepUpVertex,
    chain_properties,
    delta,
    delta_many,
    sample_chain_violations,
    stepup_color,
    stepup_oracle,
)
from exact.enumeration import F2_PATTERN, count_pattern
from exact.functions import T_closed, g13


# ---------------------------------------------------------------------------
# Stepping-up
# ---------------------------------------------------------------------------

def test_delta_is_highest_differing_coordinate():
    assert delta(StepUpVertex(0b0101, 4), StepUpVertex(0b0111, 4)) == 2
    assert delta(StepUpVertex(0b0001, 4), StepUpVertex(0b1001, 4)) == 4
    with pytest.raises(InvalidInputError):
        delta(StepUpVertex(3, 4), StepUpVertex(3, 4))


def test_delta_many_matches_scalar():
    assert delta_many(np.array([1, 2, 5]), np.array([3, 2, 12])).tolist() == [2, 0, 4]


def test_vertex_bits_roundtrip():
    vertex = StepUpVertex.from_bits([1, 0, 1, 1])
    assert vertex.value == 0b1101
    assert vertex.bits == (1, 0, 1, 1)


def test_chain_properties_on_a_chain():
    assert chain_properties(np.array([1, 2, 3])) == {
        "consecutive_distinct": True,
        "endpoint_is_max": True,
        "unique_max": True,
    }


def test_sampled_chains_never_violate():
    for length in (3, 4, 6):
        counts = sample_chain_violations(12, 5000, length=length, seed=length)
        assert counts["chains"] > 0
        assert counts["property_a"] == counts["property_b"] == counts["unique_max"] == 0


def test_stepup_classes_partition_all_triples(c5):
    oracle = stepup_oracle(c5)
    a, b, c = (np.array(x) for x in zip(*[(x, y, z) for x in range(32) for y in range(x + 1, 32)
                                           for z in range(y + 1, 32)]))
    sizes = np.bincount(oracle.evaluate_many(a, b, c), minlength=3)
    assert sizes.sum() == comb(32, 3)
    assert (sizes > 0).all()


def test_stepup_color_uses_base_graph(c5):
    # deltas 1 and 2: coordinates 1 and 2 are adjacent in C5, increasing
    triple = [StepUpVertex(0, 5), StepUpVertex(1, 5), StepUpVertex(2, 5)]
    assert stepup_color(triple, c5) == Color3.I
    # deltas 1 and 3: vertices 0 and 2 of C5 are not adjacent
    triple = [StepUpVertex(0, 5), StepUpVertex(1, 5), StepUpVertex(4, 5)]
    assert stepup_color(triple, c5) == Color3.III


def test_stepup_sampled_search_finds_no_eight_set(c5):
    oracle = stepup_oracle(c5)
    for color in range(3):
        assert find_mono_set(oracle, None, 8, color, mode="sampled", trials=300, seed=1).witness is None


@pytest.mark.slow
def test_stepup_exhaustive_search_finds_no_eight_set(c5):
    oracle = stepup_oracle(c5)
    for color in range(3):
        assert find_mono_set(oracle, None, 8, color).witness is None


# ---------------------------------------------------------------------------
# Lift
# ---------------------------------------------------------------------------

def test_lift_without_red_triangle_has_no_red_four_set(pentagon):
    oracle = lift_oracle(LiftColoringSpec(r=5, c1=pentagon, seed=3), 40)
    assert find_mono_set(oracle, None, 4, int(Color2.RED)).witness is None


def test_lift_with_red_triangle_has_red_four_set(triangle_red):
    oracle = lift_oracle(LiftColoringSpec(r=5, c1=triangle_red, seed=0), 100)
    cert = find_mono_set(oracle, None, 4, int(Color2.RED))
    assert cert.witness is not None
    assert oracle.is_monochromatic(cert.witness, int(Color2.RED))


def test_lift_color_agrees_with_oracle(pentagon):
    spec = LiftColoringSpec(r=5, c1=pentagon, seed=8)
    oracle = lift_oracle(spec, 20)
    for triple in [(0, 1, 2), (3, 7, 19), (4, 5, 6)]:
        assert int(lift_color(triple, spec)) == oracle.color(*triple)


def test_lift_spec_checks_palette_size(pentagon):
    with pytest.raises(InvalidInputError):
        LiftColoringSpec(r=4, c1=pentagon, seed=0)


# ---------------------------------------------------------------------------
# Tournaments, parity and patterns
# ---------------------------------------------------------------------------

def test_tournament_color(rotational7):
    assert tournament_color((0, 1, 2), rotational7) == Color2.BLUE
    assert tournament_color((0, 2, 4), rotational7) == Color2.RED


def test_hash_tournament_matches_its_oracle():
    t = hash_tournament(15, 4)
    oracle = hash_tournament_oracle(15, 4)
    expected = tournament_oracle(t)
    for triple in [(0, 1, 2), (2, 9, 14), (5, 6, 11)]:
        assert oracle.color(*triple) == expected.color(*triple)


def test_parity_coloring_attains_T():
    assert parity_color(0, 2) == Color3.II
    assert parity_color(0, 3) == Color3.I
    for s in range(3, 13):
        assert count_pattern(parity_coloring(s), F2_PATTERN) == T_closed(s)


def test_pattern_oracle_is_reproducible():
    a, b, c = np.arange(0, 10), np.arange(10, 20), np.arange(20, 30)
    first = pattern_oracle(30, 5).evaluate_many(a, b, c)
    assert (first == pattern_oracle(30, 5).evaluate_many(a, b, c)).all()


def test_odd_cycle_check(rotational7):
    check = odd_cycle_red_check(rotational7, 0, [1, 2, 3])
    assert not check.violation
    assert check.forced_edge == (1, 2)
    with pytest.raises(InvalidInputError):
        odd_cycle_red_check(rotational7, 0, [1, 2, 3, 4])


# ---------------------------------------------------------------------------
# Hypergraphs
# ---------------------------------------------------------------------------

def test_hg_of_triangle_is_k4_minus_edge():
    assert is_k4_minus_edge(build_HG(BitGraph.complete(3)))
    assert not is_k4_minus_edge(Hypergraph3(4, ((0, 1, 2), (0, 1, 3))))


def test_hg_of_cycle(c5):
    h = build_HG(c5)
    assert h.n == 6
    assert len(h.edges) == 5
    assert all(5 in e for e in h.edges)


def test_cn_on_five_vertices_is_complete():
    assert len(build_Cn(5).edges) == comb(5, 3)
    assert len(build_Cn(7).edges) == 7 * 5 - 7
    with pytest.raises(InvalidInputError):
        build_Cn(3)


def test_blowup_counts():
    blowup = Blowup(3, 4, 2)
    assert blowup.vertex_count == 8
    assert blowup.edge_count == 32
    assert len(blowup.materialize().edges) == 32
    assert blowup.is_edge([0, 2, 4]) and not blowup.is_edge([0, 1, 4])
    assert blowup.meets_density_bound()


@pytest.mark.parametrize("s", [3, 5, 7, 9, 12])
def test_family_hypergraph_has_g_edges(s):
    value, tree = g13(s)
    assert len(build_family_hypergraph(tree).edges) == value


def test_hypergraph_file_roundtrip(tmp_path):
    h = build_Cn(6)
    assert read_hypergraph(write_hypergraph(h, tmp_path / "c6.h")) == h


def test_hyperedges_must_be_distinct():
    with pytest.raises(InvalidInputError):
        Hypergraph3(4, ((0, 1, 2), (2, 1, 0)))


# ---------------------------------------------------------------------------
# Oracle specs
# ---------------------------------------------------------------------------

def test_parse_oracle_kinds(inputs_dir):
    assert parse_oracle("const:red", 5).color(0, 1, 2) == 0
    assert parse_oracle("random:p=0.5:seed=7", 20).name == "random:p=0.5:seed=7"
    assert parse_oracle("tournament:file=rotational7.t", base_dir=inputs_dir).universe == 7
    assert parse_oracle("tournament:random:seed=3", 12).universe == 12
    stepup = parse_oracle("stepup:graph=c5.g", base_dir=inputs_dir)
    assert (stepup.universe, stepup.palette) == (32, 3)
    assert parse_oracle("lift:r=5:c1=pentagon.col:seed=1", 30, base_dir=inputs_dir).universe == 30
    assert parse_oracle("pattern:seed=2", 10).palette == 2


@pytest.mark.parametrize("spec", [
    "const:green",
    "random:p=0.5",
    "random:p=half:seed=1",
    "random:p=0.5:seed=-1",
    "circle:seed=1",
])
def test_parse_oracle_rejects_bad_specs(spec):
    with pytest.raises(InvalidInputError):
        parse_oracle(spec, 10)


def test_parse_oracle_needs_universe():
    with pytest.raises(InvalidInputError):
        parse_oracle("random:p=0.5:seed=1")


def test_parse_oracle_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        parse_oracle("stepup:graph=absent.g", base_dir=tmp_path)
