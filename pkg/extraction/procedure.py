"""
Greedy extraction of monochromatic sets from a triple coloring.

The builder strategy of the on-line game is played against the threshold
painter; a red K_(s-1) or blue K_(n-1) in the drawn graph plus any survivor
is a red s-set or blue n-set of the coloring.
"""

from dataclasses import dataclass, field
from math import log2

from core.errors import InvalidInputError, InvariantViolation
from core.graphs import Color2, bits_of
from core.models import ExtractionReport, TraceStep
from core.oracles import TripleColoringOracle
from extraction.bounds import bound_thm21, k43e_log2_bound
from extraction.threshold import SurvivorsExhausted, ThresholdPainter
from game.builders import CompleteBuilder, eh_builder
from game.runner import builder_budget, run_game
from game.state import Color, GameState

SLACK = 1e-9


@dataclass
class ExtractionConfig:
    """
    Args:
        s: Red set size, at least 3
        n: Blue set size, at least 3
        alpha: Threshold in (0, 1/2]
        N: Universe size; runs below the guaranteed bound may fail
        oracle: Red/blue triple coloring on [N]
    """

    s: int
    n: int
    alpha: float
    N: int
    oracle: TripleColoringOracle = field(repr=False)

    def __post_init__(self) -> None:
        if self.s < 3 or self.n < 3:
            raise InvalidInputError(f"Targets must be at least 3, got ({self.s}, {self.n})")
        if not 0 < self.alpha <= 0.5:
            raise InvalidInputError(f"alpha must lie in (0, 1/2], got {self.alpha}")
        if self.oracle.palette != 2:
            raise InvalidInputError("Extraction needs a red/blue oracle")
        if self.N > self.oracle.universe:
            raise InvalidInputError(f"N={self.N} exceeds the oracle universe {self.oracle.universe}")

    @property
    def required_N(self) -> int:
        bound = bound_thm21(self.s, self.n, self.alpha)
        if bound.exact is not None:
            return bound.ceil
        return int(2 ** min(bound.log2, 1023)) + 1

    @property
    def guaranteed(self) -> bool:
        bound = bound_thm21(self.s, self.n, self.alpha)
        if bound.exact is not None:
            return self.N >= bound.exact
        return log2(self.N) >= bound.log2

    def as_dict(self) -> dict:
        return {"s": self.s, "n": self.n, "alpha": self.alpha, "N": self.N, "oracle": self.oracle.name}


def _induction_bound_log2(v: int, r: int, m: int, a: int, red_total: int, edge_total: int,
                          alpha: float) -> float | None:
    """log2 of (v+1-a) alpha^(-r+sum r_i) (1-alpha)^(r-m+sum (m_i-r_i)), None when vacuous."""
    if v + 1 - a <= 0:
        return None
    return (log2(v + 1 - a) + (red_total - r) * log2(alpha)
            + (r - m + edge_total - red_total) * log2(1 - alpha))


def _trace(painter: ThresholdPainter, cfg: ExtractionConfig, check_induction: bool) -> list[TraceStep]:
    v, r, m = builder_budget(cfg.s - 1, cfg.n - 1)
    guaranteed = check_induction and cfg.guaranteed
    steps = []
    red_total = edge_total = 0
    for a, record in enumerate(painter.steps, start=1):
        red_total += record.red_edges
        edge_total += record.edges
        bound = _induction_bound_log2(v, r, m, a, red_total, edge_total, cfg.alpha) if check_induction else None
        if guaranteed and bound is not None:
            size = record.survivors
            if size == 0 or log2(size) < bound - SLACK:
                raise InvariantViolation(
                    f"Survivor set of size {size} after vertex {a} is below the induction bound",
                    witness={"step": a, "survivors": size, "bound_log2": bound},
                )
        steps.append(TraceStep(
            vertex=record.vertex,
            survivors=record.survivors,
            red_edges=record.red_edges,
            edges=record.edges,
            red_fractions=[round(f, 12) for f in record.red_fractions],
            bound_log2=bound,
        ))
    return steps


def _graph(state: GameState, painter: ThresholdPainter, color: Color) -> list[list[int]]:
    return sorted(
        sorted([painter.embed[u], painter.embed[v]])
        for (u, v), c in state.edges.items() if c is color
    )


def _run(cfg: ExtractionConfig, builder, alpha: float, check_induction: bool) -> ExtractionReport:
    painter = ThresholdPainter(cfg.oracle, alpha, universe=range(cfg.N))
    state = GameState(cfg.s - 1, cfg.n - 1)
    bound = bound_thm21(cfg.s, cfg.n, cfg.alpha)
    outcome, witness = "failure", []
    try:
        transcript = run_game(builder, painter, cfg.s - 1, cfg.n - 1, state=state)
        if transcript.outcome.kind in ("red", "blue") and painter.survivors.size:
            outcome = transcript.outcome.kind
            witness = painter.vertices(transcript.outcome.witness) + [int(painter.survivors[0])]
    except SurvivorsExhausted:
        pass
    trace = _trace(painter, cfg, check_induction)
    verified = False
    if outcome != "failure":
        color = Color2.RED if outcome == "red" else Color2.BLUE
        verified = cfg.oracle.is_monochromatic(witness, color)
        if not verified:
            raise InvariantViolation(f"Extracted {outcome} set is not monochromatic",
                                     witness={"set": witness, "oracle": cfg.oracle.name})
    elif check_induction and cfg.guaranteed:
        raise InvariantViolation("Extraction failed although N meets the guaranteed bound",
                                 witness={"config": cfg.as_dict()})
    return ExtractionReport(
        config=cfg.as_dict(),
        outcome=outcome,
        witness=sorted(witness),
        verified=verified,
        trace=trace,
        red_graph=_graph(state, painter, Color.RED),
        blue_graph=_graph(state, painter, Color.BLUE),
        bound=bound.ceil,
        bound_log2=bound.log2,
    )


def erdos_rado_extract(cfg: ExtractionConfig) -> ExtractionReport:
    """
    Play the string-labeling builder for (s-1, n-1) against the threshold painter.

    The returned set is re-verified against the oracle. When N meets the
    guaranteed bound, every survivor-size induction step is asserted.

    Raises:
        InvariantViolation: If a returned set is not monochromatic or an
            induction step fails on a guaranteed run
    """
    return _run(cfg, eh_builder(cfg.s - 1, cfg.n - 1), cfg.alpha, check_induction=True)


def classic_extract(cfg: ExtractionConfig) -> ExtractionReport:
    """Same extraction, drawing every back-edge and halving at alpha = 1/2."""
    return _run(cfg, CompleteBuilder(), 0.5, check_induction=False)


def _forbidden_pair(red_adj: list[int], j: int, k: int) -> int | None:
    """
    After red edge (j, k) with j < k newest, a red (j, i) with j < i < k or i < j.

    Returns i, lowest first.
    """
    others = red_adj[j] & ~(1 << k)
    if others:
        low = others & -others
        return low.bit_length() - 1
    return None


def _is_star_forest(red_adj: list[int]) -> bool:
    for x, row in enumerate(red_adj):
        if row.bit_count() >= 2 and any(red_adj[y].bit_count() != 1 for y in bits_of(row)):
            return False
    return True


def k43e_extract(oracle: TripleColoringOracle, n: int, N: int) -> ExtractionReport:
    """
    Extraction against K4(3) minus an edge versus a blue n-set.

    Every back-edge is drawn with alpha = 1/(2n). Two red drawn edges (j, i)
    and (j, k) with j < i < k or i < j < k, plus any survivor, span a red
    K4(3) minus an edge. Otherwise the red drawn graph stays a disjoint union
    of stars and a blue K_(n-1) plus a survivor eventually appears.

    Raises:
        InvariantViolation: If the red drawn graph stops being a star forest
            or a returned set fails re-verification
    """
    if n < 3:
        raise InvalidInputError(f"n must be at least 3, got {n}")
    alpha = 1 / (2 * n)
    painter = ThresholdPainter(oracle, alpha, universe=range(N))
    state = GameState(N + 2, n - 1)
    builder = CompleteBuilder()
    outcome, witness = "failure", []
    try:
        while outcome == "failure":
            v = state.expose()
            painter.on_vertex(state, v)
            decided = False
            while (w := builder.next_edge(state)) is not None:
                color = painter(state, w, v)
                blue_clique = state.color_edge(w, v, color)
                if color is Color.RED:
                    i = _forbidden_pair(state.red, w, v)
                    if i is not None:
                        if painter.survivors.size:
                            outcome = "red-k4-minus-edge"
                            witness = painter.vertices([i, w, v]) + [int(painter.survivors[0])]
                        decided = True
                        break
                if not _is_star_forest(state.red):
                    raise InvariantViolation("Red drawn graph is not a disjoint union of stars",
                                             witness={"red_graph": _graph(state, painter, Color.RED)})
                if blue_clique is not None:
                    if painter.survivors.size:
                        outcome = "blue"
                        witness = painter.vertices(blue_clique) + [int(painter.survivors[0])]
                    decided = True
                    break
            if decided:
                break
    except SurvivorsExhausted:
        pass

    verified = False
    if outcome == "blue":
        verified = oracle.is_monochromatic(witness, Color2.BLUE)
    elif outcome == "red-k4-minus-edge":
        verified = _is_red_k4_minus_edge(oracle, witness)
    if outcome != "failure" and not verified:
        raise InvariantViolation(f"Extracted {outcome} witness fails re-verification",
                                 witness={"set": witness, "oracle": oracle.name})
    trace = [
        TraceStep(vertex=r.vertex, survivors=r.survivors, red_edges=r.red_edges, edges=r.edges,
                  red_fractions=[round(f, 12) for f in r.red_fractions])
        for r in painter.steps
    ]
    log2_bound = k43e_log2_bound(n)
    return ExtractionReport(
        config={"n": n, "N": N, "alpha": alpha, "oracle": oracle.name},
        outcome=outcome,
        witness=sorted(witness),
        verified=verified,
        trace=trace,
        red_graph=_graph(state, painter, Color.RED),
        blue_graph=_graph(state, painter, Color.BLUE),
        bound=None,
        bound_log2=log2_bound,
    )


def _is_red_k4_minus_edge(oracle: TripleColoringOracle, vertices: list[int]) -> bool:
    """Some vertex lies in three red triples of the 4-set."""
    vs = sorted(vertices)
    if len(set(vs)) != 4:
        return False
    for center in vs:
        others = [x for x in vs if x != center]
        triples = [(center, others[0], others[1]), (center, others[0], others[2]), (center, others[1], others[2])]
        if all(oracle.color(*t) == Color2.RED for t in triples):
            return True
    return False
