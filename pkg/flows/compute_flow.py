from pathlib import Path
import sys

from prefect import flow, task

# Ajouter le dossier parent au path pour importer les modules
sys.path.insert(0, str(Path(__file__).parent.parent))
from flows.config import RESULTS_DIR, configure_prefect
from exact.table import FunctionTable, build_function_table

configure_prefect()


@task(name="build_function_table")
def build_table(s_values: list[int], f1_brute_max: int, workers: int) -> FunctionTable:
    """
    Compute T, g, F1, F2, d and the nice flag for every s.

    Args:
        s_values: Values of s
        f1_brute_max: Largest s whose F1 is enumerated
        workers: Worker processes for the enumerations

    Returns:
        FunctionTable
    """
    table = build_function_table(s_values, f1_brute_max=f1_brute_max, workers=workers)
    nice = [row["s"] for row in table.rows if row["nice"]]
    print(f"Computed {len(table.rows)} rows, nice: {nice}")
    return table


@task(name="export_function_table")
def export_table(table: FunctionTable, output_dir: str) -> dict:
    """
    Write the table as CSV, JSON and parquet, plus witness colorings.

    Args:
        table: FunctionTable to export
        output_dir: Target directory

    Returns:
        Written paths by format
    """
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)

    csv_path = out / "function_table.csv"
    csv_path.write_text(table.to_csv())
    json_path = out / "function_table.json"
    json_path.write_text(table.to_json() + "\n")
    parquet_path = table.to_parquet(out / "function_table.parquet")
    witnesses = table.write_witnesses(out / "witnesses")

    print(f"Exported table to {out} ({len(witnesses)} witness colorings)")
    return {
        "csv": str(csv_path),
        "json": str(json_path),
        "parquet": str(parquet_path),
        "witnesses": [str(p) for p in witnesses],
    }


@task(name="check_inequality_chain")
def check_chain(table: FunctionTable) -> list[int]:
    broken = table.check_chain()
    if broken:
        print(f"❌ Inequality chain broken at s = {broken}")
    else:
        print("✅ g <= F1 <= T and F2 = T on every computed row")
    return broken


@flow(name="Compute Function Table", log_prints=True)
def compute_flow(s_max: int = 30, f1_brute_max: int = 5, workers: int = 1,
                 output_dir: str = str(RESULTS_DIR)) -> dict:
    """
    Build and export the function table for s = 1..s_max.

    Args:
        s_max: Largest s
        f1_brute_max: Largest s whose F1 is enumerated
        workers: Worker processes for the enumerations
        output_dir: Export directory

    Returns:
        Export paths, row count and the values of s breaking the chain
    """
    table = build_table(list(range(1, s_max + 1)), f1_brute_max, workers)
    broken = check_chain(table)
    paths = export_table(table, output_dir)
    return {"rows": len(table.rows), "broken": broken, "paths": paths}


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Compute and export the function table")
    parser.add_argument("--s-max", type=int, default=30, help="Largest s")
    parser.add_argument("--f1-max", type=int, default=5, help="Largest s whose F1 is enumerated")
    parser.add_argument("--workers", type=int, default=1, help="Worker processes")
    parser.add_argument("--output-dir", type=str, default=str(RESULTS_DIR), help="Export directory")
    args = parser.parse_args()

    compute_flow(s_max=args.s_max, f1_brute_max=args.f1_max, workers=args.workers, output_dir=args.output_dir)
