from pathlib import Path
import sys

from prefect import flow, task

# Ajouter le dossier parent au path pour importer les modules
sys.path.insert(0, str(Path(__file__).parent.parent))
from flows.config import DEFAULT_EXTRACTION_SEEDS, DEFAULT_GAME_SEEDS, configure_prefect
from flows.checks import extraction_oracles
from extraction.bounds import bound_thm21
from extraction.procedure import ExtractionConfig, classic_extract, erdos_rado_extract
from game.builders import eh_builder
from game.painters import painter_library
from game.runner import budget_for, run_game

configure_prefect()

SWEEP_PAINTERS = ("all-red", "all-blue", "seeded-random", "greedy-adversarial")


@task(name="play_game")
def play_game(s: int, n: int, painter_name: str, seed: int) -> dict:
    """
    One game of the string-labeling builder against a library painter.

    Returns:
        Summary with the outcome and the budget used against the allowed one
    """
    painter = painter_library(s, n, seed=seed)[painter_name]
    budget = budget_for(s, n)
    transcript = run_game(eh_builder(s, n), painter, s, n, limits=budget)
    return {
        "s": s,
        "n": n,
        "painter": painter_name,
        "seed": seed,
        "outcome": transcript.outcome.kind,
        "used": transcript.budget.model_dump(),
        "within": transcript.budget.within(budget),
    }


SEED_BATCH = 500


@task(name="play_seed_batch")
def play_seed_batch(s: int, n: int, seeds: list[int]) -> dict:
    """
    Games against the seeded painter for a batch of seeds.

    Returns:
        Game count, failing game summaries and the largest budget use
    """
    games = [play_game.fn(s, n, "seeded-random", k) for k in seeds]
    return {
        "games": len(games),
        "failures": [g for g in games if not g["within"] or g["outcome"] not in ("red", "blue")],
        "used": {key: max(g["used"][key] for g in games) for key in ("v", "r", "m")},
    }


@flow(name="Game Sweep", log_prints=True)
def game_sweep_flow(s_max: int = 6, seeds: int = DEFAULT_GAME_SEEDS, seed: int = 0) -> dict:
    """
    Play every library painter for all 2 <= s, n <= s_max.

    The seeded painter is played once per seed; deterministic painters once.

    Returns:
        Game count, failures and the largest budget use per (s, n)
    """
    pairs = [(s, n) for s in range(2, s_max + 1) for n in range(2, s_max + 1)]
    failures = []
    worst = {}
    for i, (s, n) in enumerate(pairs, start=1):
        print(f"[{i}/{len(pairs)}] 🔄 ({s}, {n}) against {len(SWEEP_PAINTERS)} painters")
        single = [play_game.submit(s, n, name, seed) for name in SWEEP_PAINTERS if name != "seeded-random"]
        run_seeds = list(range(seed, seed + seeds))
        batches = [play_seed_batch.submit(s, n, run_seeds[k:k + SEED_BATCH])
                   for k in range(0, len(run_seeds), SEED_BATCH)]
        games = [future.result() for future in single]
        failures += [g for g in games if not g["within"] or g["outcome"] not in ("red", "blue")]
        used = [g["used"] for g in games]
        for future in batches:
            batch = future.result()
            failures += batch["failures"]
            used.append(batch["used"])
        worst[f"{s},{n}"] = {key: max(u[key] for u in used) for key in ("v", "r", "m")}

    total = len(pairs) * (len(SWEEP_PAINTERS) - 1 + seeds)
    print(f"\n{'✅' if not failures else '❌'} {total - len(failures)}/{total} games within budget")
    return {"games": total, "failures": failures, "worst": worst}


@task(name="extract_one")
def extract_one(s: int, n: int, alpha: float, N: int, oracle, classic: bool = False) -> dict:
    """
    Run one extraction and keep the summary.

    Returns:
        Oracle name, outcome, verification flag and number of drawn edges
    """
    cfg = ExtractionConfig(s, n, alpha, N, oracle)
    report = classic_extract(cfg) if classic else erdos_rado_extract(cfg)
    return {
        "oracle": oracle.name,
        "procedure": "classic" if classic else "online",
        "outcome": report.outcome,
        "verified": report.verified,
        "edges": sum(step.edges for step in report.trace),
        "witness": report.witness,
    }


@flow(name="Extraction Sweep", log_prints=True)
def extraction_sweep_flow(s: int = 4, n: int = 4, alpha: float = 0.5, N: int | None = None,
                          seeds: int = DEFAULT_EXTRACTION_SEEDS, seed: int = 0,
                          compare_classic: bool = True) -> dict:
    """
    Extract from seeded random oracles and the fixed oracle set.

    With ``compare_classic`` the draw-everything procedure runs on the same
    oracles so the edge counts of both procedures can be compared.

    Returns:
        Per-oracle summaries and the mean edge count of each procedure
    """
    N = N or bound_thm21(s, n, alpha).ceil
    oracles = extraction_oracles(N, seeds, seed)
    print(f"Extracting ({s}, {n}) at alpha={alpha} on {len(oracles)} oracles, N={N}")

    futures = [extract_one.submit(s, n, alpha, N, oracle) for oracle in oracles]
    if compare_classic:
        futures += [extract_one.submit(s, n, alpha, N, oracle, classic=True) for oracle in oracles]
    runs = [future.result() for future in futures]

    summary = {}
    for procedure in ("online", "classic"):
        subset = [r for r in runs if r["procedure"] == procedure]
        if subset:
            summary[procedure] = {
                "runs": len(subset),
                "verified": sum(r["verified"] for r in subset),
                "mean_edges": round(sum(r["edges"] for r in subset) / len(subset), 3),
            }
            print(f"   {procedure}: {summary[procedure]}")
    return {"N": N, "summary": summary, "runs": runs}


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Run game and extraction sweeps")
    parser.add_argument("--s-max", type=int, default=6, help="Largest game target")
    parser.add_argument("--seeds", type=int, default=DEFAULT_GAME_SEEDS, help="Seeded painters per game")
    parser.add_argument("--extraction-seeds", type=int, default=DEFAULT_EXTRACTION_SEEDS, help="Random oracles")
    parser.add_argument("--seed", type=int, default=0, help="First seed")
    args = parser.parse_args()

    game_sweep_flow(s_max=args.s_max, seeds=args.seeds, seed=args.seed)
    extraction_sweep_flow(seeds=args.extraction_seeds, seed=args.seed)
