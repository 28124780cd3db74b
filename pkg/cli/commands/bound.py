"""
bound: values of the upper and lower bound calculators, in log2 space.
"""

import argparse

from cli.output import emit_document, run_config
from core.errors import InvalidInputError
from extraction.bounds import (
    KNOWN_RAMSEY,
    bound_thm21,
    corollary23_log2_bound,
    erdos_rado_recursion_bound,
    k43e_log2_bound,
    lift_lower_bound_log2,
    optimal_alpha,
    random_coloring_expectation,
    thm25_log2log2,
)

NAME = "bound"
WHICH = ["thm21", "cor23", "erdos-rado", "thm25", "optimal-alpha", "lift-lower", "k43e", "random"]


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="Evaluate a Ramsey bound")
    parser.add_argument("which", choices=WHICH, help="Bound to evaluate")
    parser.add_argument("--s", type=int, default=4, help="Red set size")
    parser.add_argument("--n", type=int, default=4, help="Blue set size")
    parser.add_argument("--alpha", type=float, default=0.5, help="Extraction threshold")
    parser.add_argument("--k", type=int, default=3, help="Uniformity (erdos-rado) or diagonal size (thm25)")
    parser.add_argument("--N", dest="universe", type=int, default=None, help="Vertex count (random)")
    parser.add_argument("--p", type=float, default=None, help="Red probability (random)")
    parser.add_argument("--r2-lower", type=float, default=None, help="Known lower bound on r(s-1, n/4)")
    parser.add_argument("--known-base", action="store_true",
                        help="erdos-rado: start from known graph Ramsey numbers")
    parser.set_defaults(handler=run)


def evaluate(args: argparse.Namespace) -> dict:
    which = args.which
    if which == "thm21":
        bound = bound_thm21(args.s, args.n, args.alpha)
        return {"s": args.s, "n": args.n, "alpha": args.alpha, "log2": bound.log2, "value": bound.ceil}
    if which == "cor23":
        return {"s": args.s, "n": args.n, "log2": corollary23_log2_bound(args.s, args.n)}
    if which == "erdos-rado":
        tower = erdos_rado_recursion_bound(args.k, args.s, args.n, KNOWN_RAMSEY if args.known_base else None)
        return {"k": args.k, "s": args.s, "n": args.n, "height": tower.height, "top": tower.top,
                "top_exact": tower.top_exact, "tower": tower.describe()}
    if which == "thm25":
        value = thm25_log2log2(args.k)
        return {"k": args.k, "log2log2": value, "ratio": value / args.k}
    if which == "optimal-alpha":
        return {"s": args.s, "n": args.n, **optimal_alpha(args.s, args.n)}
    if which == "lift-lower":
        return {"s": args.s, "n": args.n, "log2": lift_lower_bound_log2(args.s, args.n, args.r2_lower)}
    if which == "k43e":
        return {"n": args.n, "log2": k43e_log2_bound(args.n)}
    if args.universe is None:
        raise InvalidInputError("bound random needs --N")
    return {"N": args.universe, "s": args.s, "n": args.n,
            **random_coloring_expectation(args.universe, args.s, args.n, args.p)}


def run(args: argparse.Namespace) -> int:
    config = run_config(args)
    if config.format not in ("json", "text"):
        raise InvalidInputError("bound renders json or text only")
    body = {k: v for k, v in evaluate(args).items() if v is not None}
    emit_document(config, {"which": args.which, **body})
    return 0
