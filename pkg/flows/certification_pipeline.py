from pathlib import Path
import sys
import time
from datetime import datetime

from prefect import flow, task

# Ajouter le dossier parent au path pour importer les modules
sys.path.insert(0, str(Path(__file__).parent.parent))
from flows.config import (
    C5_GRAPH,
    DEFAULT_EXTRACTION_SEEDS,
    DEFAULT_GAME_SEEDS,
    INPUTS_DIR,
    PENTAGON_COLORING,
    RESULTS_DIR,
    ROTATIONAL_TOURNAMENT,
    TRIANGLE_COLORING,
    configure_prefect,
)
from flows.compute_flow import compute_flow
from flows.sweeps import extraction_sweep_flow, game_sweep_flow
from flows.verify_flow import verification_flow
from flows.checks import pentagon_coloring, triangle_red_coloring
from core.graphs import BitGraph
from core.io import read_coloring, read_graph

configure_prefect()

STEPS = 4


@task(name="log_step")
def log_step(step_number: int, step_name: str, status: str = "start") -> None:
    """
    Log pipeline step progress for visibility.

    Args:
        step_number: Current step number
        step_name: Name of the step
        status: Either "start" or "complete"
    """
    if status == "start":
        print(f"\n[{step_number}/{STEPS}] 🔄 {step_name}...")
    else:
        print(f"[{step_number}/{STEPS}] ✅ {step_name} complete!")


@task(name="validate_input_files", retries=2)
def validate_input_files(inputs_dir: str) -> bool:
    """
    Check that the sample inputs exist before the long checks start.

    Args:
        inputs_dir: Directory written by script/generate_inputs.py

    Returns:
        True if all files exist

    Raises:
        FileNotFoundError: If any required file is missing
    """
    required = [C5_GRAPH.name, PENTAGON_COLORING.name, TRIANGLE_COLORING.name, ROTATIONAL_TOURNAMENT.name]
    missing = [str(Path(inputs_dir) / name) for name in required if not (Path(inputs_dir) / name).exists()]
    if missing:
        raise FileNotFoundError(f"Missing required files: {', '.join(missing)}")

    print(f"✅ All input files validated in {inputs_dir}")
    return True


def _check_params(inputs_dir: Path, quick: bool, seed: int, workers: int) -> dict[str, dict]:
    # missing inputs fall back to the same samples built in memory
    graph_path = inputs_dir / C5_GRAPH.name
    graph = read_graph(graph_path) if graph_path.exists() else BitGraph.cycle(5)
    pentagon_path = inputs_dir / PENTAGON_COLORING.name
    pentagon = read_coloring(pentagon_path) if pentagon_path.exists() else pentagon_coloring()
    triangle_path = inputs_dir / TRIANGLE_COLORING.name
    triangle = read_coloring(triangle_path) if triangle_path.exists() else triangle_red_coloring()
    params = {
        "stepup": {"graph": graph, "seed": seed, "workers": workers},
        "lift": {"c1": pentagon, "seed": seed, "workers": workers},
        "lift-mutation": {"c1": triangle, "seed": seed, "expect_red": True, "workers": workers},
        "t-brute": {"workers": workers},
        "f2": {"workers": workers},
        "f1": {"workers": workers},
        "delta-props": {"seed": seed},
        "odd-cycles": {"seed": seed},
        "game-budgets": {"seed": seed},
        "extraction": {"seed": seed},
        "k43e": {"seed": seed},
    }
    if quick:
        params["stepup"].update(q=8, mode="sampled", trials=200)
        params["f1"]["s_max"] = 5
        params["f2"]["s_max"] = 6
        params["t-brute"]["s_max"] = 6
        params["delta-props"]["samples"] = 10_000
        params["d-growth"] = {"s_max": 10_000}
        params["game-budgets"].update(s_max=4, seeds=5)
        params["extraction"]["seeds"] = 5
        params["k43e"]["seeds"] = 5
        params["odd-cycles"]["samples"] = 1000
    return params


@task(name="generate_pipeline_report")
def generate_pipeline_report(start_time: float, compute_result: dict, verify_result: dict,
                             game_result: dict, extraction_result: dict) -> dict:
    """
    Consolidate the results of all steps into a single report.

    Returns:
        Complete pipeline report dictionary
    """
    duration = time.time() - start_time
    passed = (
        verify_result["passed"]
        and not compute_result["broken"]
        and not game_result["failures"]
    )
    return {
        "pipeline_run": {
            "timestamp": datetime.now().isoformat(),
            "duration_seconds": round(duration, 2),
            "status": "SUCCESS" if passed else "FAILED",
        },
        "function_table": {"rows": compute_result["rows"], "broken": compute_result["broken"]},
        "checks": {name: r["passed"] for name, r in verify_result["results"].items()},
        "games": {"played": game_result["games"], "failures": len(game_result["failures"])},
        "extraction": extraction_result["summary"],
    }


@task(name="print_final_report")
def print_final_report(report: dict) -> None:
    """
    Print a formatted final report to console.

    Args:
        report: Complete pipeline report dictionary
    """
    print("\n" + "=" * 60)
    print("🎉 CERTIFICATION PIPELINE COMPLETE")
    print("=" * 60)

    run_info = report["pipeline_run"]
    print(f"\n⏱️  Duration: {run_info['duration_seconds']} seconds")
    print(f"📅 Timestamp: {run_info['timestamp']}")

    print("\n📐 FUNCTION TABLE")
    table = report["function_table"]
    print(f"   Rows: {table['rows']}, chain broken at: {table['broken'] or 'none'}")

    print("\n🔎 CHECKS")
    for name, passed in report["checks"].items():
        print(f"   {'✅' if passed else '❌'} {name}")

    print("\n🎲 GAMES")
    print(f"   Played: {report['games']['played']}, over budget: {report['games']['failures']}")

    print("\n🧲 EXTRACTION")
    for procedure, summary in report["extraction"].items():
        print(f"   {procedure}: {summary['verified']}/{summary['runs']} verified, "
              f"{summary['mean_edges']} edges on average")

    print("\n" + "=" * 60)
    print("✅ All certifications passed!" if run_info["status"] == "SUCCESS" else "❌ Some certifications failed")
    print("=" * 60 + "\n")


@flow(name="Certification Pipeline", log_prints=True)
def certification_pipeline(
    inputs_dir: str = str(INPUTS_DIR),
    output_dir: str = str(RESULTS_DIR),
    seed: int = 0,
    workers: int = 1,
    quick: bool = False,
    skip_validation: bool = False,
) -> dict:
    """
    Run every certification: function table, named checks and sweeps.

    Args:
        inputs_dir: Directory with the sample inputs
        output_dir: Directory for the exported function table
        seed: Run seed
        workers: Worker processes for the exhaustive kernels
        quick: Smaller sizes and sample counts, for smoke runs
        skip_validation: Skip input file validation (for testing)

    Returns:
        Complete pipeline execution report
    """
    print("\n" + "=" * 60)
    print("🚀 STARTING CERTIFICATION PIPELINE")
    print("=" * 60)

    start_time = time.time()

    if not skip_validation:
        validate_input_files(inputs_dir)

    log_step(1, "Function Table", "start")
    compute_result = compute_flow(s_max=30 if not quick else 12, f1_brute_max=5, workers=workers,
                                  output_dir=output_dir)
    log_step(1, "Function Table", "complete")

    log_step(2, "Verification Checks", "start")
    params = _check_params(Path(inputs_dir), quick, seed, workers)
    mutation = params.pop("lift-mutation")
    verify_result = verification_flow(params=params)
    mutation_result = verification_flow(targets=["lift"], params={"lift": mutation})
    verify_result["results"]["lift-mutation"] = mutation_result["results"]["lift"]
    verify_result["passed"] = verify_result["passed"] and mutation_result["passed"]
    log_step(2, "Verification Checks", "complete")

    log_step(3, "Game Sweep", "start")
    game_result = game_sweep_flow(s_max=4 if quick else 6, seeds=5 if quick else DEFAULT_GAME_SEEDS, seed=seed)
    log_step(3, "Game Sweep", "complete")

    log_step(4, "Extraction Sweep", "start")
    extraction_result = extraction_sweep_flow(seeds=5 if quick else DEFAULT_EXTRACTION_SEEDS, seed=seed)
    log_step(4, "Extraction Sweep", "complete")

    report = generate_pipeline_report(start_time, compute_result, verify_result, game_result, extraction_result)
    print_final_report(report)

    return report


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Run the full certification pipeline")
    parser.add_argument("--inputs-dir", type=str, default=str(INPUTS_DIR), help="Directory with the sample inputs")
    parser.add_argument("--output-dir", type=str, default=str(RESULTS_DIR), help="Export directory")
    parser.add_argument("--seed", type=int, default=0, help="Run seed")
    parser.add_argument("--workers", type=int, default=1, help="Worker processes")
    parser.add_argument("--quick", action="store_true", help="Smaller sizes for a smoke run")
    parser.add_argument("--skip-validation", action="store_true", help="Skip input file validation")
    args = parser.parse_args()

    certification_pipeline(
        inputs_dir=args.inputs_dir,
        output_dir=args.output_dir,
        seed=args.seed,
        workers=args.workers,
        quick=args.quick,
        skip_validation=args.skip_validation,
    )
