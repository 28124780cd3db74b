from pathlib import Path
import sys

from prefect import flow, task

# Ajouter le dossier parent au path pour importer les modules
sys.path.insert(0, str(Path(__file__).parent.parent))
from flows.config import configure_prefect
from flows.checks import CHECKS, run_check

configure_prefect()


@task(name="run_check")
def run_check_task(name: str, params: dict) -> dict:
    """
    Run one named check and print its verdict.

    Args:
        name: Check name, a key of CHECKS
        params: Keyword arguments for the check

    Returns:
        CheckResult as a dictionary
    """
    result = run_check(name, **params)
    marker = "✅" if result.passed else "❌"
    print(f"{marker} {name}: {'pass' if result.passed else 'FAIL'}")
    if result.witness:
        print(f"   witness: {result.witness}")
    return result.model_dump()


@flow(name="Verification Flow", log_prints=True)
def verification_flow(targets: list[str] | None = None, params: dict[str, dict] | None = None) -> dict:
    """
    Run a list of named checks.

    Args:
        targets: Check names, all registered checks when None
        params: Per-check keyword arguments

    Returns:
        Dictionary with one result per check and the overall verdict
    """
    targets = targets or list(CHECKS)
    params = params or {}
    unknown = [t for t in targets if t not in CHECKS]
    if unknown:
        raise ValueError(f"Unknown checks: {', '.join(unknown)}")

    results = {}
    for i, name in enumerate(targets, start=1):
        print(f"\n[{i}/{len(targets)}] 🔄 {name}...")
        results[name] = run_check_task(name, params.get(name, {}))

    passed = all(r["passed"] for r in results.values())
    print(f"\n{'✅' if passed else '❌'} {sum(r['passed'] for r in results.values())}/{len(results)} checks passed")
    return {"passed": passed, "results": results}


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Run verification checks")
    parser.add_argument("targets", nargs="*", help=f"Checks to run among: {', '.join(CHECKS)}")
    args = parser.parse_args()

    verification_flow(targets=args.targets or None)
