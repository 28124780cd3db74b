"""
search: look for a monochromatic q-set in an oracle-defined triple coloring.
"""

import argparse

from cli.output import emit_document, limits_of, run_config
from constructions.oracle_spec import parse_oracle
from core.errors import InvalidInputError
from core.graphs import VertexSet
from core.search import find_mono_set

NAME = "search"
COLOR_NAMES = {"red": 0, "blue": 1, "I": 0, "II": 1, "III": 2}


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="Search a monochromatic set")
    parser.add_argument("--oracle", required=True, help="Oracle spec, e.g. stepup:graph=c5.g")
    parser.add_argument("--q", type=int, required=True, help="Set size")
    parser.add_argument("--color", default="red", help="red, blue, I, II, III or a color id")
    parser.add_argument("--N", dest="universe", type=int, default=None, help="Universe size")
    parser.add_argument("--vertices", default=None, help="Comma-separated subset to search")
    parser.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    parser.add_argument("--trials", type=int, default=1000, help="Trials in sampled mode")
    parser.add_argument("--base-dir", default=".", help="Directory oracle file paths are relative to")
    parser.set_defaults(handler=run)


def parse_color(value: str) -> int:
    if value in COLOR_NAMES:
        return COLOR_NAMES[value]
    try:
        return int(value)
    except ValueError as exc:
        raise InvalidInputError(f"Unknown color '{value}'") from exc


def parse_vertices(value: str, universe: int) -> VertexSet:
    try:
        members = tuple(int(x) for x in value.split(",") if x.strip())
    except ValueError as exc:
        raise InvalidInputError(f"Vertices must be comma-separated integers, got '{value}'") from exc
    return VertexSet(members, universe)


def run(args: argparse.Namespace) -> int:
    config = run_config(args, base_dir=args.base_dir)
    if config.format not in ("json", "text"):
        raise InvalidInputError("search renders json or text only")
    oracle = parse_oracle(args.oracle, args.universe, base_dir=args.base_dir)
    universe = parse_vertices(args.vertices, oracle.universe) if args.vertices else None
    certificate = find_mono_set(
        oracle,
        universe,
        args.q,
        parse_color(args.color),
        mode=args.mode,
        trials=args.trials,
        seed=config.seed,
        limits=limits_of(config),
        workers=args.workers,
    )
    emit_document(config, {
        "oracle": oracle.name,
        "q": args.q,
        "color": args.color,
        "certificate": certificate.model_dump(exclude_none=True),
    })
    return 0
