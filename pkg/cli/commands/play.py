"""
play: the vertex on-line Ramsey game, string-labeling builder against a painter.

The interactive painter prompts on standard error so standard output keeps
only the transcript document.
"""

import argparse
import sys
from pathlib import Path

from cli.output import emit_document, run_config
from core.errors import InvalidInputError
from core.models import GameTranscript
from game.builders import eh_builder
from game.painters import InteractivePainter, painter_library
from game.runner import budget_for, replay_transcript, run_game

NAME = "play"
PAINTERS = ["interactive", "all-red", "all-blue", "seeded-random", "greedy-adversarial"]


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="Play the builder against a painter")
    parser.add_argument("--s", type=int, default=3, help="Red clique target")
    parser.add_argument("--n", type=int, default=3, help="Blue clique target")
    parser.add_argument("--painter", choices=PAINTERS, default="interactive")
    parser.add_argument("--p", type=float, default=0.5, help="Red probability of the seeded painter")
    parser.add_argument("--transcript", default=None, help="Also save the transcript JSON here")
    parser.add_argument("--replay", default=None, help="Replay a saved transcript instead of playing")
    parser.set_defaults(handler=run)


def _replay(path: Path) -> tuple[GameTranscript, bool]:
    try:
        recorded = GameTranscript.model_validate_json(path.read_text())
    except ValueError as exc:
        raise InvalidInputError(f"{path}: not a game transcript ({exc})") from exc
    replayed = replay_transcript(recorded)
    return replayed, replayed.to_json() == recorded.to_json()


def run(args: argparse.Namespace) -> int:
    config = run_config(args, transcript=args.transcript, replay=args.replay)

    if args.replay:
        transcript, identical = _replay(Path(args.replay))
        s, n = transcript.target
        allowed = budget_for(s, n)
        emit_document(config, {
            "transcript": transcript.model_dump(exclude_none=True),
            "identical": identical,
            "allowed": allowed.model_dump(),
            "within": transcript.budget.within(allowed),
        })
        return 0 if identical else 1

    allowed = budget_for(args.s, args.n)
    if args.painter == "interactive":
        painter = InteractivePainter(sys.stdin, sys.stderr)
    else:
        painter = painter_library(args.s, args.n, seed=config.seed, p=args.p)[args.painter]
    transcript = run_game(eh_builder(args.s, args.n), painter, args.s, args.n, limits=allowed)

    if args.transcript:
        path = Path(args.transcript)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(transcript.to_json() + "\n")

    within = transcript.budget.within(allowed)
    emit_document(config, {
        "transcript": transcript.model_dump(exclude_none=True),
        "allowed": allowed.model_dump(),
        "within": within,
    })
    # exhausted means the builder failed to force a clique inside its budget
    if transcript.outcome.kind in ("aborted", "exhausted") or not within:
        return 1
    return 0
