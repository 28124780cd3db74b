"""
FunctionTable: one row per s with T, g, F1, F2, d and the nice flag, plus the
provenance of every cell.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

import pandas as pd

from core.errors import BudgetExceededError, InvalidInputError
from core.io import write_coloring
from core.limits import SearchLimits
from exact.enumeration import (
    F1_LIMIT,
    F2_LIMIT,
    F1_brute,
    F2_brute,
    F2_formula,
    witness_coloring,
)
from exact.functions import T_closed, g13, g_provenance

COLUMNS = ["s", "T", "g", "F1", "F1_mode", "F2", "d", "nice"]


@dataclass
class FunctionTable:
    """Rows keyed by the CSV columns; ``provenance[s]`` tags each computed cell."""

    rows: list[dict] = field(default_factory=list)
    provenance: dict[int, dict[str, str]] = field(default_factory=dict)
    witnesses: dict[tuple[str, int], tuple[int, int]] = field(default_factory=dict)

    @property
    def df(self) -> pd.DataFrame:
        df = pd.DataFrame(self.rows, columns=COLUMNS)
        for col in ("F1", "F2"):
            df[col] = df[col].astype("Int64")
        return df

    def row(self, s: int) -> dict:
        for row in self.rows:
            if row["s"] == s:
                return row
        raise KeyError(s)

    def check_chain(self) -> list[int]:
        """Values of s breaking d >= 0, g <= F1 <= T or F2 = T."""
        broken = []
        for row in self.rows:
            ok = row["d"] >= 0
            if row["F1"] is not None and row["F1_mode"] == "exact":
                ok = ok and row["g"] <= row["F1"] <= row["T"]
            if row["F2"] is not None:
                ok = ok and row["F2"] == row["T"]
            if not ok:
                broken.append(row["s"])
        return broken

    def to_csv(self) -> str:
        return self.df.to_csv(index=False, lineterminator="\n")

    def to_records(self) -> list[dict]:
        return [{**row, "provenance": self.provenance[row["s"]]} for row in self.rows]

    def to_json(self) -> str:
        return json.dumps({"rows": self.to_records()}, indent=2)

    def to_parquet(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.df.to_parquet(path, engine="pyarrow", index=False)
        return path

    def write_witnesses(self, directory: Path) -> list[Path]:
        """Extremal colorings as ``F1_s<s>.col`` / ``F2_s<s>.col``."""
        directory = Path(directory)
        written = []
        for (name, s), (palette, code) in sorted(self.witnesses.items()):
            coloring = witness_coloring(s, palette, code)
            if coloring is not None:
                written.append(write_coloring(coloring, directory / f"{name}_s{s}.col"))
        return written


def _f1_cell(s: int, g: int, T: int, brute_max: int, allow_seven: bool, workers: int,
             limits: Optional[SearchLimits]) -> tuple[Optional[int], str, str, Optional[int]]:
    """(value, mode, provenance, witness code)."""
    if s <= min(brute_max, F1_LIMIT) or (s == F1_LIMIT + 1 and allow_seven and brute_max > F1_LIMIT):
        try:
            result = F1_brute(s, allow_seven=allow_seven, workers=workers,
                              limits=limits.fresh() if limits else None)
        except BudgetExceededError:
            return g, "lower-bound", "budget-exceeded", None
        provenance = "brute-force" if result.mode == "exact" else "recursion"
        return result.value, result.mode, provenance, result.code
    if g == T:
        return T, "exact", "sandwich", None
    return g, "lower-bound", "recursion", None


def _f2_cell(s: int, brute_max: int, workers: int,
             limits: Optional[SearchLimits]) -> tuple[int, str, Optional[int]]:
    if s <= min(brute_max, F2_LIMIT):
        try:
            result = F2_brute(s, workers=workers, limits=limits.fresh() if limits else None)
            return result.value, "brute-force", result.code
        except BudgetExceededError:
            pass
    return F2_formula(s), "closed-form", None


def build_function_table(
    s_values: Iterable[int],
    f1_brute_max: int = 5,
    f2_brute_max: int = F2_LIMIT,
    allow_seven: bool = False,
    workers: int = 1,
    limits: Optional[SearchLimits] = None,
) -> FunctionTable:
    """
    Compute one table row per s.

    F1 is brute-forced up to ``f1_brute_max``; past it F1 is exact only when
    s is nice (g = T squeezes it) and is otherwise reported as the lower
    bound g. F2 is brute-forced up to ``f2_brute_max`` and taken as T beyond.

    Args:
        s_values: Positive integers, in output order
        f1_brute_max: Largest s whose F1 is enumerated (7 needs ``allow_seven``)
        f2_brute_max: Largest s whose F2 is enumerated
        allow_seven: Run the branch and bound search for F1(7)
        workers: Worker processes for the enumerations
        limits: Node and time caps applied to each enumeration separately

    Returns:
        FunctionTable
    """
    table = FunctionTable()
    for s in s_values:
        T = T_closed(s)
        g, _ = g13(s)
        F1, F1_mode, F1_source, F1_code = _f1_cell(s, g, T, f1_brute_max, allow_seven, workers, limits)
        F2, F2_source, F2_code = _f2_cell(s, f2_brute_max, workers, limits)
        table.rows.append({
            "s": s, "T": T, "g": g, "F1": F1, "F1_mode": F1_mode,
            "F2": F2, "d": T - g, "nice": T == g,
        })
        table.provenance[s] = {
            "T": "closed-form", "g": g_provenance(s), "F1": F1_source,
            "F2": F2_source, "d": "closed-form", "nice": "closed-form",
        }
        if F1_code is not None:
            table.witnesses[("F1", s)] = (3, F1_code)
        if F2_code is not None:
            table.witnesses[("F2", s)] = (2, F2_code)
    return table


def parse_s_range(text: str) -> list[int]:
    """``7`` or ``1..10`` into a list of positive integers."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise InvalidInputError(f"Expected s or lo..hi, got '{text}'") from exc
    if lo < 1 or hi < lo:
        raise InvalidInputError(f"Invalid range {lo}..{hi}")
    return list(range(lo, hi + 1))
