"""
Shared flags, run configuration and payload rendering for every subcommand.

JSON is the machine interface; CSV and text are rendered from the same
document.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Optional

from core.errors import InvalidInputError
from core.limits import SearchLimits
from core.models import RunConfig
from flows.config import DEFAULT_SEED


def common_flags() -> argparse.ArgumentParser:
    """Parent parser carrying the flags every subcommand accepts."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Run seed (64-bit)")
    parent.add_argument("--format", choices=["json", "csv", "text", "parquet"], default=None,
                        help="Output format (csv for the function table, json otherwise)")
    parent.add_argument("--node-cap", type=int, default=None, help="Search node cap")
    parent.add_argument("--time-cap", type=float, default=None, help="Search time cap in seconds")
    parent.add_argument("--out", type=str, default=None, help="Write the payload to this file")
    parent.add_argument("--workers", type=int, default=1, help="Worker processes for exhaustive kernels")
    return parent


def run_config(args: argparse.Namespace, default_format: str = "json", **paths: Optional[str]) -> RunConfig:
    """
    Validated RunConfig of a parsed command line.

    Raises:
        InvalidInputError: If the seed or a cap is out of range
    """
    try:
        return RunConfig(
            subcommand=args.command,
            seed=args.seed,
            format=args.format or default_format,
            node_cap=args.node_cap,
            time_cap=args.time_cap,
            out=args.out,
            paths={k: str(v) for k, v in paths.items() if v is not None},
        )
    except ValueError as exc:
        raise InvalidInputError(str(exc)) from exc


def limits_of(config: RunConfig) -> Optional[SearchLimits]:
    if config.node_cap is None and config.time_cap is None:
        return None
    return SearchLimits(node_cap=config.node_cap, time_cap=config.time_cap)


def document(config: RunConfig, body: dict[str, Any]) -> dict[str, Any]:
    """The JSON document of a run: its configuration followed by the body."""
    return {"config": config.model_dump(exclude_none=True), **body}


def _text_lines(value: Any, prefix: str = "") -> list[str]:
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            lines += _text_lines(item, f"{prefix}{key}.")
        return lines
    if isinstance(value, list) and value and isinstance(value[0], dict):
        lines = []
        for i, item in enumerate(value):
            lines += _text_lines(item, f"{prefix}{i}.")
        return lines
    if isinstance(value, list):
        value = " ".join(str(x) for x in value)
    return [f"{prefix.rstrip('.')}: {value}"]


def render_text(doc: dict[str, Any]) -> str:
    """One ``dotted.key: value`` line per leaf of the document."""
    return "\n".join(_text_lines(doc)) + "\n"


def render_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def emit(payload: str, out: Optional[str]) -> None:
    """Write the payload to ``out`` or standard output."""
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(payload)
    else:
        sys.stdout.write(payload)


def emit_document(config: RunConfig, body: dict[str, Any]) -> None:
    """Render ``body`` in the configured format (json or text) and emit it."""
    doc = document(config, body)
    payload = render_text(doc) if config.format == "text" else render_json(doc)
    emit(payload, config.out)
