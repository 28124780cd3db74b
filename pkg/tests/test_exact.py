import io
import time

import pandas as pd
import pytest

from core.errors import BudgetExceededError, InvalidInputError
from core.limits import SearchLimits
from core.search import count_cyclic_triangles
from exact.enumeration import (
    F1_PATTERN,
    F2_PATTERN,
    F1_brute,
    F2_brute,
    T_brute,
    _pattern_chunks,
    count_pattern,
    witness_coloring,
)
from exact.functions import (
    T_closed,
    d,
    d_growth_report,
    d_table,
    d_triple_odd,
    g13,
    g_provenance,
    g_table,
    near_equal_attains_max,
    nice_numbers,
    verify_d_recurrences,
)
from exact.table import COLUMNS, build_function_table, parse_s_range

NICE_UP_TO_100 = [1, 2, 3, 4, 6, 8, 9, 10, 12, 18, 24, 26, 27, 28, 30, 36, 54, 72, 78, 80, 81, 82, 84, 90]


# ---------------------------------------------------------------------------
# Closed forms and recursions
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("s,value", [(1, 0), (2, 0), (3, 1), (4, 2), (5, 5), (6, 8), (7, 14)])
def test_T_closed(s, value):
    assert T_closed(s) == value


@pytest.mark.parametrize("s,value", [(1, 0), (2, 0), (3, 1), (4, 2), (5, 4), (6, 8), (7, 13), (9, 30)])
def test_g_values(s, value):
    assert g13(s)[0] == value


def test_g_tree_sums_to_s():
    _, tree = g13(7)
    assert tree["s"] == 7
    assert sum(part["s"] for part in tree["parts"]) == 7


def test_g_table_is_read_only_prefix():
    table = g_table(10)
    assert table.tolist() == [0, 0, 0, 1, 2, 4, 8, 13, 20, 30, 40]
    with pytest.raises(ValueError):
        table[3] = 0


def test_nice_numbers_up_to_100():
    assert nice_numbers(100) == NICE_UP_TO_100


def test_d_is_never_negative():
    assert (d_table(2000) >= 0).all()
    assert d(5) == 1
    assert d(7) == 1


@pytest.mark.parametrize("k", range(1, 9))
def test_powers_of_three(k):
    s = 3 ** k
    assert g13(s)[0] == (s + 1) * s * (s - 1) // 24 == T_closed(s)


def test_near_equal_partition_attains_the_maximum():
    assert near_equal_attains_max(300) == []


def test_d_recurrences():
    report = verify_d_recurrences(500)
    assert report["passed"]
    assert report["checked"] == 6 * 500
    assert report["violation"] is None


@pytest.mark.slow
def test_d_recurrences_up_to_ten_thousand():
    assert verify_d_recurrences(10_000)["passed"]


def test_d_growth_is_bounded():
    report = d_growth_report(20_000)
    assert report["max_ratio"] < 1
    assert set(report["checkpoints"]) == {10, 100, 1000, 10_000}


def test_d_triples_on_odd_s():
    assert d_triple_odd(2000) == []


def test_g_provenance():
    assert g_provenance(10) == "recursion"
    assert g_provenance(5000) == "heuristic"


def test_bad_arguments():
    with pytest.raises(InvalidInputError):
        T_closed(0)
    with pytest.raises(InvalidInputError):
        verify_d_recurrences(0)


# ---------------------------------------------------------------------------
# Enumerations
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("s", [3, 4, 5, 6])
def test_T_brute_matches_closed_form(s):
    value, witness = T_brute(s)
    assert value == T_closed(s)
    assert count_cyclic_triangles(witness) == value


@pytest.mark.slow
@pytest.mark.parametrize("s", [7, 8, 9])
def test_T_brute_large(s):
    value, witness = T_brute(s)
    assert value == T_closed(s)
    assert count_cyclic_triangles(witness) == value


def test_T_brute_parallel_agrees():
    assert T_brute(6, workers=2)[0] == T_brute(6)[0]


def test_T_brute_stops_past_nine():
    with pytest.raises(BudgetExceededError):
        T_brute(10)


@pytest.mark.parametrize("s", [3, 4, 5, 6])
def test_F2_equals_T(s):
    result = F2_brute(s)
    assert result.value == T_closed(s)
    assert count_pattern(witness_coloring(s, 2, result.code), F2_PATTERN) == result.value


@pytest.mark.slow
def test_F2_seven():
    assert F2_brute(7).value == T_closed(7)


@pytest.mark.parametrize("s,value", [(3, 1), (4, 2), (5, 4)])
def test_F1_small(s, value):
    result = F1_brute(s)
    assert result.value == value
    assert result.mode == "exact"
    assert count_pattern(witness_coloring(s, 3, result.code), F1_PATTERN) == value


@pytest.mark.slow
def test_F1_six():
    assert F1_brute(6).value == 8


def test_F1_gap_at_five():
    assert F1_brute(5).value < F2_brute(5).value


def test_F1_seven_needs_opt_in():
    with pytest.raises(BudgetExceededError):
        F1_brute(7)


def test_F1_seven_reports_lower_bound_on_budget():
    result = F1_brute(7, allow_seven=True, limits=SearchLimits(node_cap=1000))
    assert result.mode == "lower-bound"
    assert result.value == g13(7)[0]


def test_enumeration_node_cap():
    with pytest.raises(BudgetExceededError):
        F2_brute(6, limits=SearchLimits(node_cap=10))


def expired(time_cap: float = 0.001) -> SearchLimits:
    return SearchLimits(time_cap=time_cap, _started=time.monotonic() - 1)


@pytest.mark.parametrize("s", [3, 5])
def test_enumeration_time_cap(s):
    with pytest.raises(BudgetExceededError) as exc:
        F2_brute(s, limits=expired())
    assert exc.value.reason == "time cap"


def test_T_brute_time_cap():
    with pytest.raises(BudgetExceededError):
        T_brute(5, limits=expired())


def test_chunk_workers_stop_at_the_deadline():
    with pytest.raises(BudgetExceededError):
        _pattern_chunks(4, 2, F2_PATTERN, [(0, 64)], deadline=time.monotonic() - 1)


def test_single_ticks_read_the_clock_at_4096_nodes():
    limits = expired(time_cap=0.5)
    limits.nodes = 4094
    limits.tick()
    with pytest.raises(BudgetExceededError):
        limits.tick()


# ---------------------------------------------------------------------------
# Function table
# ---------------------------------------------------------------------------

def test_table_rows_and_provenance():
    table = build_function_table(range(1, 11), f1_brute_max=5, f2_brute_max=5)
    assert table.df.columns.tolist() == COLUMNS
    row5 = table.row(5)
    assert (row5["T"], row5["g"], row5["F1"], row5["F2"], row5["d"], row5["nice"]) == (5, 4, 4, 5, 1, False)
    assert table.provenance[5]["F1"] == "brute-force"
    row6 = table.row(6)
    assert row6["F1_mode"] == "exact" and table.provenance[6]["F1"] == "sandwich"
    row7 = table.row(7)
    assert (row7["F1"], row7["F1_mode"]) == (13, "lower-bound")
    assert table.provenance[7]["F2"] == "closed-form"
    assert table.check_chain() == []


def test_table_csv_nice_prefix():
    table = build_function_table(range(1, 11), f1_brute_max=0, f2_brute_max=0)
    df = pd.read_csv(io.StringIO(table.to_csv()))
    assert df.loc[df["nice"], "s"].tolist() == [1, 2, 3, 4, 6, 8, 9, 10]


def test_table_json_and_witnesses(tmp_path):
    table = build_function_table([3, 4], f1_brute_max=4, f2_brute_max=4)
    assert '"rows"' in table.to_json()
    written = table.write_witnesses(tmp_path)
    assert sorted(p.name for p in written) == ["F1_s3.col", "F1_s4.col", "F2_s3.col", "F2_s4.col"]


def test_table_parquet(tmp_path):
    path = build_function_table(range(1, 6), f1_brute_max=0, f2_brute_max=0).to_parquet(tmp_path / "t.parquet")
    assert pd.read_parquet(path)["T"].tolist() == [0, 0, 1, 2, 5]


def test_budget_exceeded_rows_are_marked():
    table = build_function_table([5], f1_brute_max=5, f2_brute_max=0, limits=SearchLimits(node_cap=10))
    assert table.row(5)["F1_mode"] == "lower-bound"
    assert table.provenance[5]["F1"] == "budget-exceeded"


@pytest.mark.parametrize("text,expected", [("7", [7]), ("1..4", [1, 2, 3, 4])])
def test_parse_s_range(text, expected):
    assert parse_s_range(text) == expected


@pytest.mark.parametrize("text", ["0", "5..2", "a..b"])
def test_parse_s_range_rejects(text):
    with pytest.raises(InvalidInputError):
        parse_s_range(text)
