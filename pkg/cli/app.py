"""
Command-line application: one subparser per command module.

Exit codes: 0 when everything passes, 1 when a mathematical property fails
or a search runs out of budget, 2 on usage or input errors.
"""

import argparse
import sys
from typing import Optional

from cli.commands import bound, compute, extract, play, search, verify
from cli.output import common_flags, emit, render_json
from core.errors import BudgetExceededError, BudgetOverflowError, InvalidInputError, InvariantViolation

COMMANDS = [compute, verify, play, bound, extract, search]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsey",
        description="Hypergraph Ramsey toolkit: exact functions, colorings, games and extraction",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    parent = common_flags()
    for command in COMMANDS:
        command.register(subparsers, parent)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (InvalidInputError, BudgetOverflowError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        emit(render_json({"error": "invariant-violation", "message": str(exc), "witness": exc.witness}),
             getattr(args, "out", None))
        return 1
    except BudgetExceededError as exc:
        emit(render_json({"error": "budget-exceeded", "reason": exc.reason, "nodes": exc.nodes, "cap": exc.cap}),
             getattr(args, "out", None))
        return 1


if __name__ == "__main__":
    sys.exit(main())
