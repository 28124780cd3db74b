"""
extract: pull a monochromatic set out of an oracle-defined triple coloring.
"""

import argparse
from math import ceil

from cli.output import emit_document, run_config
from constructions.oracle_spec import parse_oracle
from core.errors import InvalidInputError
from extraction.bounds import bound_thm21, k43e_log2_bound
from extraction.procedure import ExtractionConfig, classic_extract, erdos_rado_extract, k43e_extract

NAME = "extract"


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="Extract a monochromatic set")
    parser.add_argument("--oracle", required=True, help="Oracle spec, e.g. random:p=0.5:seed=7")
    parser.add_argument("--procedure", choices=["online", "classic", "k43e"], default="online")
    parser.add_argument("--s", type=int, default=4, help="Red set size")
    parser.add_argument("--n", type=int, default=4, help="Blue set size")
    parser.add_argument("--alpha", type=float, default=0.5, help="Threshold in (0, 1/2]")
    parser.add_argument("--N", dest="universe", type=int, default=None,
                        help="Universe size, the guaranteed bound by default")
    parser.add_argument("--base-dir", default=".", help="Directory oracle file paths are relative to")
    parser.set_defaults(handler=run)


def default_universe(args: argparse.Namespace) -> int:
    if args.procedure == "k43e":
        return ceil(2 ** k43e_log2_bound(args.n))
    bound = bound_thm21(args.s, args.n, args.alpha)
    if bound.ceil is None:
        raise InvalidInputError(f"The bound for ({args.s}, {args.n}) is too large, pass --N")
    return bound.ceil


def run(args: argparse.Namespace) -> int:
    config = run_config(args, base_dir=args.base_dir)
    if config.format not in ("json", "text"):
        raise InvalidInputError("extract renders json or text only")
    N = args.universe if args.universe is not None else default_universe(args)
    oracle = parse_oracle(args.oracle, N, base_dir=args.base_dir)
    # file-backed oracles fix their own universe
    if args.universe is None:
        N = min(N, oracle.universe)

    if args.procedure == "k43e":
        report = k43e_extract(oracle, args.n, N)
    else:
        cfg = ExtractionConfig(args.s, args.n, args.alpha, N, oracle)
        report = classic_extract(cfg) if args.procedure == "classic" else erdos_rado_extract(cfg)

    emit_document(config, {"procedure": args.procedure, "report": report.model_dump(exclude_none=True)})
    return 0
