"""
compute: T, g, F1, F2, d, the nice numbers or the whole function table.
"""

import argparse

from cli.output import emit, emit_document, limits_of, run_config
from core.errors import InvalidInputError
from exact.enumeration import F2_LIMIT
from exact.functions import g13
from exact.table import build_function_table, parse_s_range

NAME = "compute"
WHICH = ["T", "g", "F1", "F2", "d", "nice", "table"]


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(NAME, parents=[parent], help="Compute exact combinatorial functions")
    parser.add_argument("which", choices=WHICH, help="Function to compute")
    parser.add_argument("--s", dest="s_range", default="1..10", help="s or lo..hi")
    parser.add_argument("--f1-max", type=int, default=5, help="Largest s whose F1 is enumerated")
    parser.add_argument("--allow-seven", action="store_true", help="Run the branch and bound search for F1(7)")
    parser.add_argument("--witness-dir", default=None, help="Write extremal colorings to this directory")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = run_config(args, default_format="csv" if args.which == "table" else "json",
                        witness_dir=args.witness_dir)
    s_values = parse_s_range(args.s_range)
    if config.format == "parquet" and (args.which != "table" or not config.out):
        raise InvalidInputError("--format parquet needs the table and --out")

    wants_f1 = args.which in ("F1", "table")
    wants_f2 = args.which in ("F2", "table")
    f1_max = args.f1_max if not args.allow_seven else max(args.f1_max, 7)
    table = build_function_table(
        s_values,
        f1_brute_max=f1_max if wants_f1 else 0,
        f2_brute_max=F2_LIMIT if wants_f2 else 0,
        allow_seven=args.allow_seven,
        workers=args.workers,
        limits=limits_of(config),
    )
    if args.witness_dir:
        table.write_witnesses(args.witness_dir)

    if args.which == "table":
        if config.format == "csv":
            emit(table.to_csv(), config.out)
        elif config.format == "parquet":
            table.to_parquet(config.out)
        else:
            emit_document(config, {"rows": table.to_records()})
        return 0

    if args.which == "nice":
        nice = [row["s"] for row in table.rows if row["nice"]]
        if config.format == "csv":
            emit("s\n" + "".join(f"{s}\n" for s in nice), config.out)
        elif config.format == "text":
            emit(",".join(str(s) for s in nice) + "\n", config.out)
        else:
            emit_document(config, {"which": "nice", "nice": nice})
        return 0

    column = args.which
    values = []
    for row in table.rows:
        entry = {"s": row["s"], "value": row[column], "provenance": table.provenance[row["s"]][column]}
        if column == "F1":
            entry["mode"] = row["F1_mode"]
        if column == "g":
            entry["tree"] = g13(row["s"])[1]
        values.append(entry)

    if config.format == "csv":
        emit("s,value\n" + "".join(f"{v['s']},{v['value']}\n" for v in values), config.out)
    elif config.format == "text":
        emit("".join(f"{v['value']}\n" for v in values) if len(values) == 1
             else "".join(f"{v['s']}: {v['value']}\n" for v in values), config.out)
    else:
        emit_document(config, {"which": args.which, "values": values})
    return 0
