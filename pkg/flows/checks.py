"""
Named verification checks.

Each check is a plain function returning a CheckResult; it prints nothing so
the CLI can emit the result as its only output. ``run_check`` turns budget
and invariant failures into failed results.
"""

from itertools import combinations
from math import comb, isfinite
from typing import Callable, Optional

import numpy as np

from core.errors import BudgetExceededError, InvariantViolation
from core.graphs import BitGraph, Color2, EdgeColoring, Tournament, all_tournaments
from core.hashing import stream_rng
from core.io import coloring_from_graph
from core.limits import SearchLimits
from core.models import CheckResult
from core.oracles import constant_oracle, random_oracle
from core.search import count_cyclic_triangles, find_mono_set
from constructions.colorings import (
    LiftColoringSpec,
    hash_tournament_oracle,
    lift_oracle,
    odd_cycle_red_check,
    parity_coloring,
)
from constructions.hypergraphs import Blowup, build_HG, is_k4_minus_edge
from constructions.stepup import sample_chain_violations, stepup_oracle
from exact.enumeration import F1_brute, F2_PATTERN, F2_brute, T_brute, count_pattern
from exact.functions import (
    T_closed,
    d_growth_report,
    d_triple_odd,
    g13,
    near_equal_attains_max,
    nice_numbers,
    verify_d_recurrences,
)
from extraction.bounds import bound_thm21
from extraction.procedure import ExtractionConfig, erdos_rado_extract, k43e_extract
from flows.config import DEFAULT_GAME_SEEDS
from game.builders import eh_builder
from game.minimax import minimax_online
from game.painters import GreedyAdversarialPainter, SeededRandomPainter, all_blue, all_red
from game.runner import budget_for, run_game

NICE_UP_TO_100 = [1, 2, 3, 4, 6, 8, 9, 10, 12, 18, 24, 26, 27, 28, 30, 36, 54, 72, 78, 80, 81, 82, 84, 90]
SMALL_ONLINE_RAMSEY = {(2, 2): 1, (2, 3): 3}
CLASS_SIZE_LIMIT = 256


def pentagon_coloring() -> EdgeColoring:
    """Red 5-cycle, blue complement: no red triangle."""
    return coloring_from_graph(BitGraph.cycle(5))


def triangle_red_coloring() -> EdgeColoring:
    """Red triangle on 0, 1, 2 among 5 vertices, every other pair blue."""
    return coloring_from_graph(BitGraph.from_edges(5, [(0, 1), (1, 2), (0, 2)]))


# ---------------------------------------------------------------------------
# Exact functions
# ---------------------------------------------------------------------------

def check_four_tournaments() -> CheckResult:
    """Every tournament on 4 vertices has at most two cyclic triangles."""
    counts = []
    for t in all_tournaments(4):
        formula = count_cyclic_triangles(t, "formula")
        if formula != count_cyclic_triangles(t, "direct"):
            return CheckResult(name="four-tournaments", passed=False,
                               witness={"beats": list(t.beats), "formula": formula})
        counts.append(formula)
    worst = max(counts)
    return CheckResult(name="four-tournaments", passed=worst == 2,
                       details={"tournaments": len(counts), "max_cyclic": worst,
                                "histogram": {str(k): counts.count(k) for k in sorted(set(counts))}})


def check_t_brute(s_max: int = 7, workers: int = 1, limits: Optional[SearchLimits] = None) -> CheckResult:
    values = {}
    for s in range(3, s_max + 1):
        value, witness = T_brute(s, workers=workers, limits=limits.fresh() if limits else None)
        values[str(s)] = value
        if value != T_closed(s) or count_cyclic_triangles(witness) != value:
            return CheckResult(name="t-brute", passed=False, details={"values": values},
                               witness={"s": s, "brute": value, "closed": T_closed(s), "beats": list(witness.beats)})
    return CheckResult(name="t-brute", passed=True, details={"values": values})


def check_f2(s_max: int = 7, parity_max: int = 12, workers: int = 1,
             limits: Optional[SearchLimits] = None) -> CheckResult:
    """Brute-force F2 equals T, and the parity coloring attains T."""
    brute, parity = {}, {}
    for s in range(3, s_max + 1):
        brute[str(s)] = F2_brute(s, allow_eight=s == 8, workers=workers,
                                 limits=limits.fresh() if limits else None).value
        if brute[str(s)] != T_closed(s):
            return CheckResult(name="f2", passed=False, details={"brute": brute},
                               witness={"s": s, "F2": brute[str(s)], "T": T_closed(s)})
    for s in range(3, parity_max + 1):
        parity[str(s)] = count_pattern(parity_coloring(s), F2_PATTERN)
        if parity[str(s)] != T_closed(s):
            return CheckResult(name="f2", passed=False, details={"brute": brute, "parity": parity},
                               witness={"s": s, "parity_count": parity[str(s)], "T": T_closed(s)})
    return CheckResult(name="f2", passed=True, details={"brute": brute, "parity": parity})


def check_f1(s_max: int = 6, workers: int = 1, limits: Optional[SearchLimits] = None) -> CheckResult:
    """F1 equals g on the enumerable range, and F1(5) < F2(5)."""
    values = {}
    for s in range(3, s_max + 1):
        result = F1_brute(s, workers=workers, limits=limits.fresh() if limits else None)
        values[str(s)] = result.value
        if result.value != g13(s)[0]:
            return CheckResult(name="f1", passed=False, details={"values": values},
                               witness={"s": s, "F1": result.value, "g": g13(s)[0], "code": result.code})
    gap = None
    if s_max >= 5:
        gap = {"F1": values["5"], "F2": T_closed(5)}
        if values["5"] >= T_closed(5):
            return CheckResult(name="f1", passed=False, details={"values": values}, witness=gap)
    return CheckResult(name="f1", passed=True, details={"values": values, "gap_at_5": gap})


def check_nice() -> CheckResult:
    found = nice_numbers(100)
    return CheckResult(name="nice", passed=found == NICE_UP_TO_100, details={"nice": found},
                       witness=None if found == NICE_UP_TO_100 else {"expected": NICE_UP_TO_100})


def check_powers_of_three() -> CheckResult:
    """g(s) = C(s+1, 3) / 4 at powers of three, and near-equal partitions attain g."""
    values = {}
    for s in (1, 3, 9, 27, 81):
        g, _ = g13(s)
        values[str(s)] = g
        if 4 * g != comb(s + 1, 3):
            return CheckResult(name="powers-of-three", passed=False, details={"values": values},
                               witness={"s": s, "g": g, "quarter_binomial": comb(s + 1, 3) / 4})
    misses = near_equal_attains_max()
    return CheckResult(name="powers-of-three", passed=not misses,
                       details={"values": values, "near_equal_misses": misses[:10]})


def check_d_recurrences(x_max: int = 10_000) -> CheckResult:
    report = verify_d_recurrences(x_max)
    return CheckResult(name="d-recurrences", passed=report["passed"],
                       details={"x_max": x_max, "checked": report["checked"]},
                       witness=report["violation"])


def check_d_growth(s_max: int = 100_000) -> CheckResult:
    """Bounded ratio d(s) / (s ln s) and d(3s) = 3 d(s) for odd s."""
    report = d_growth_report(s_max)
    broken = d_triple_odd(1000)
    return CheckResult(name="d-growth", passed=isfinite(report["max_ratio"]) and not broken,
                       details={**report, "checkpoints": {str(k): v for k, v in report["checkpoints"].items()}},
                       witness={"odd_s": broken[:10]} if broken else None)


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def check_stepup(graph: Optional[BitGraph] = None, q: int = 8, mode: str = "exhaustive",
                 trials: int = 1000, seed: int = 0, workers: int = 1,
                 limits: Optional[SearchLimits] = None) -> CheckResult:
    """No q-set of the stepped-up coloring is monochromatic in any of the three colors."""
    graph = graph or BitGraph.cycle(5)
    oracle = stepup_oracle(graph, name="stepup")
    sizes = None
    if oracle.universe <= CLASS_SIZE_LIMIT:
        a, b, c = (np.array(x, dtype=np.int64) for x in zip(*combinations(range(oracle.universe), 3)))
        sizes = np.bincount(oracle.evaluate_many(a, b, c), minlength=3)
    certificates = {}
    for color in range(3):
        cert = find_mono_set(oracle, None, q, color, mode=mode, trials=trials, seed=seed,
                             limits=limits.fresh() if limits else None, workers=workers)
        certificates[str(color)] = cert.model_dump(exclude_none=True)
        if cert.witness is not None:
            return CheckResult(name="stepup", passed=False, details={"certificates": certificates},
                               witness={"color": color, "set": cert.witness})
    class_sizes = [int(x) for x in sizes] if sizes is not None else None
    complete = class_sizes is None or sum(class_sizes) == comb(oracle.universe, 3)
    return CheckResult(name="stepup", passed=complete,
                       details={"N": oracle.universe, "q": q, "mode": mode,
                                "class_sizes": class_sizes, "certificates": certificates})


def check_lift(c1: Optional[EdgeColoring] = None, N: int = 100, seed: int = 0, q: int = 4,
               expect_red: bool = False, blue_max: int = 12, trials: int = 200, workers: int = 1,
               limits: Optional[SearchLimits] = None) -> CheckResult:
    """
    A red q-set of the lift coloring forces a red (q-1)-clique in c1.

    With ``expect_red`` the check passes only when a red q-set is found, which
    is the expected outcome once c1 contains a red triangle. Sampled blue set
    sizes are reported without affecting the result.
    """
    c1 = c1 or pentagon_coloring()
    oracle = lift_oracle(LiftColoringSpec(r=c1.n, c1=c1, seed=seed), N)
    cert = find_mono_set(oracle, None, q, int(Color2.RED), limits=limits.fresh() if limits else None,
                         workers=workers)
    blue = 0
    for size in range(3, blue_max + 1):
        sampled = find_mono_set(oracle, None, size, int(Color2.BLUE), mode="sampled", trials=trials, seed=seed)
        if sampled.witness is None:
            break
        blue = size
    details = {"r": c1.n, "N": N, "q": q, "nodes": cert.nodes, "sampled_blue_size": blue}
    found = cert.witness is not None
    if found != expect_red:
        return CheckResult(name="lift", passed=False, details=details,
                           witness={"set": cert.witness} if found else {"expected": "red set"})
    return CheckResult(name="lift", passed=True, details={**details, "red_set": cert.witness})


def check_delta_props(m_max: int = 20, samples: int = 1_000_000, seed: int = 0) -> CheckResult:
    """Chain properties of delta over sampled increasing chains."""
    ms = [m for m in (4, 8, 12, 16, 20) if m <= m_max] or [m_max]
    per_run = max(1, samples // (2 * len(ms)))
    totals = {"chains": 0, "property_a": 0, "property_b": 0, "unique_max": 0}
    for m in ms:
        for length in (3, 5):
            counts = sample_chain_violations(m, per_run, length=length, seed=seed + m * 10 + length)
            for key in totals:
                totals[key] += counts[key]
            if counts["property_a"] or counts["property_b"] or counts["unique_max"]:
                return CheckResult(name="delta-props", passed=False, details=totals,
                                   witness={"m": m, "length": length, **counts})
    return CheckResult(name="delta-props", passed=True, details={**totals, "m": ms})


def check_blowup_density(k_max: int = 4, parts_max: int = 12, size_max: int = 5) -> CheckResult:
    checked = 0
    for k in range(2, k_max + 1):
        for parts in range(k, parts_max + 1):
            for size in range(1, size_max + 1):
                checked += 1
                blowup = Blowup(k, parts, size)
                if not blowup.meets_density_bound():
                    return CheckResult(name="blowup", passed=False, details={"checked": checked},
                                       witness={"k": k, "parts": parts, "size": size,
                                                "edges": blowup.edge_count})
    return CheckResult(name="blowup", passed=True, details={"checked": checked})


def check_odd_cycles(N: int = 64, samples: int = 10_000, seed: int = 0) -> CheckResult:
    """Around any odd cycle some triple with the apex is not cyclic."""
    rng = stream_rng(seed, "tournament")
    t = Tournament.random(N, rng)
    picks = stream_rng(seed, "sampler")
    for i in range(samples):
        length = 3 if i % 2 == 0 else 5
        chosen = [int(x) for x in picks.choice(N, size=length + 1, replace=False)]
        check = odd_cycle_red_check(t, chosen[0], chosen[1:])
        if check.violation:
            return CheckResult(name="odd-cycles", passed=False,
                               witness={"apex": chosen[0], "cycle": chosen[1:]})
    return CheckResult(name="odd-cycles", passed=True, details={"N": N, "samples": samples})


# ---------------------------------------------------------------------------
# Games and extraction
# ---------------------------------------------------------------------------

def _budget_painters(seeds: int, seed: int, p: float):
    yield "all-red", all_red
    yield "all-blue", all_blue
    yield "greedy-adversarial", GreedyAdversarialPainter()
    for i in range(seeds):
        yield f"seeded-random:{seed + i}", SeededRandomPainter(p, seed + i)


def check_game_budgets(s_max: int = 6, seeds: int = DEFAULT_GAME_SEEDS, seed: int = 0, p: float = 0.5,
                       minimax: bool = True) -> CheckResult:
    """
    The string-labeling builder wins within its budget against every painter.

    Also compares the exact on-line values of the smallest games.
    """
    games = 0
    worst: dict[str, dict] = {}
    for s in range(2, s_max + 1):
        for n in range(2, s_max + 1):
            budget = budget_for(s, n)
            used = {"v": 0, "r": 0, "m": 0}
            for name, painter in _budget_painters(seeds, seed, p):
                transcript = run_game(eh_builder(s, n), painter, s, n, limits=budget)
                games += 1
                if transcript.outcome.kind not in ("red", "blue") or not transcript.budget.within(budget):
                    return CheckResult(name="game-budgets", passed=False, details={"games": games},
                                       witness={"s": s, "n": n, "painter": name,
                                                "budget": budget.model_dump(),
                                                "transcript": transcript.model_dump(exclude_none=True)})
                for key in used:
                    used[key] = max(used[key], getattr(transcript.budget, key))
            worst[f"{s},{n}"] = {"used": used, "budget": budget.model_dump()}
    details = {"games": games, "worst": worst}
    if minimax:
        values = {f"{s},{n}": minimax_online(s, n).value for s, n in SMALL_ONLINE_RAMSEY}
        details["online_values"] = values
        if any(values[f"{s},{n}"] != v for (s, n), v in SMALL_ONLINE_RAMSEY.items()):
            return CheckResult(name="game-budgets", passed=False, details=details,
                               witness={"expected": {f"{s},{n}": v for (s, n), v in SMALL_ONLINE_RAMSEY.items()}})
    return CheckResult(name="game-budgets", passed=True, details=details)


def extraction_oracles(N: int, seeds: int, seed: int = 0, c1: Optional[EdgeColoring] = None) -> list:
    """Red/blue oracles on [N]: seeded random ones, both constants, a hash tournament and a lift."""
    c1 = c1 or pentagon_coloring()
    oracles = [random_oracle(N, 0.5, seed + i) for i in range(seeds)]
    oracles += [
        constant_oracle(N, int(Color2.RED)),
        constant_oracle(N, int(Color2.BLUE)),
        hash_tournament_oracle(N, seed),
        lift_oracle(LiftColoringSpec(r=c1.n, c1=c1, seed=seed), N),
    ]
    return oracles


def check_extraction(s: int = 4, n: int = 4, alpha: float = 0.5, N: Optional[int] = None,
                     seeds: int = 100, seed: int = 0) -> CheckResult:
    """Extraction at a guaranteed universe size returns a verified monochromatic set."""
    N = N or bound_thm21(s, n, alpha).ceil
    outcomes: dict[str, int] = {}
    for oracle in extraction_oracles(N, seeds, seed):
        report = erdos_rado_extract(ExtractionConfig(s, n, alpha, N, oracle))
        outcomes[report.outcome] = outcomes.get(report.outcome, 0) + 1
        if report.outcome not in ("red", "blue") or not report.verified:
            return CheckResult(name="extraction", passed=False, details={"outcomes": outcomes},
                               witness={"oracle": oracle.name, "outcome": report.outcome,
                                        "set": report.witness})
    return CheckResult(name="extraction", passed=True,
                       details={"s": s, "n": n, "alpha": alpha, "N": N, "outcomes": outcomes})


def check_k43e(n: int = 4, N: int = 512, seeds: int = 20, seed: int = 0,
               tournament_oracles: Optional[list] = None) -> CheckResult:
    """
    The red drawn graph stays a star forest, H of a triangle is K4(3) minus an edge,
    and no tournament coloring yields a red K4(3) minus an edge (a 4-vertex
    tournament has at most two cyclic triangles).
    """
    if not is_k4_minus_edge(build_HG(BitGraph.complete(3))):
        return CheckResult(name="k43e", passed=False, witness={"H_G": "triangle"})
    if tournament_oracles is None:
        tournament_oracles = [hash_tournament_oracle(N, seed + i) for i in range(max(1, seeds // 4))]
    outcomes: dict[str, int] = {}
    runs = [(oracle, False) for oracle in extraction_oracles(N, seeds, seed)]
    runs += [(oracle, True) for oracle in tournament_oracles]
    for oracle, is_tournament in runs:
        report = k43e_extract(oracle, n, N)
        outcomes[report.outcome] = outcomes.get(report.outcome, 0) + 1
        unverified = report.outcome != "failure" and not report.verified
        if unverified or (is_tournament and report.outcome == "red-k4-minus-edge"):
            return CheckResult(name="k43e", passed=False, details={"outcomes": outcomes},
                               witness={"oracle": oracle.name, "outcome": report.outcome, "set": report.witness})
    return CheckResult(name="k43e", passed=True,
                       details={"n": n, "N": N, "outcomes": outcomes, "tournaments": len(tournament_oracles)})


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "four-tournaments": check_four_tournaments,
    "t-brute": check_t_brute,
    "f2": check_f2,
    "f1": check_f1,
    "nice": check_nice,
    "powers-of-three": check_powers_of_three,
    "d-recurrences": check_d_recurrences,
    "d-growth": check_d_growth,
    "stepup": check_stepup,
    "lift": check_lift,
    "delta-props": check_delta_props,
    "blowup": check_blowup_density,
    "odd-cycles": check_odd_cycles,
    "game-budgets": check_game_budgets,
    "extraction": check_extraction,
    "k43e": check_k43e,
}


def run_check(name: str, **params) -> CheckResult:
    """
    Run a named check, turning budget and invariant failures into failed results.

    Raises:
        KeyError: If the check name is unknown
    """
    check = CHECKS[name]
    try:
        return check(**params)
    except BudgetExceededError as exc:
        return CheckResult(name=name, passed=False,
                           details={"status": "budget-exceeded", "nodes": exc.nodes, "reason": exc.reason})
    except InvariantViolation as exc:
        return CheckResult(name=name, passed=False, details={"status": "invariant-violation", "message": str(exc)},
                           witness=exc.witness)
