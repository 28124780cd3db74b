"""
Parse oracle spec strings such as ``random:p=0.5:seed=7`` into oracles.

    const:red|blue
    random:p=<float>:seed=<u64>
    tournament:file=<path>      tournament:random:seed=<u64>
    lift:r=<int>:c1=<path>:seed=<u64>
    stepup:graph=<path>
    pattern:seed=<u64>
"""

from pathlib import Path
from typing import Optional

from core.errors import InvalidInputError
from core.graphs import Color2
from core.io import read_coloring, read_graph, read_tournament
from core.oracles import TripleColoringOracle, constant_oracle, random_oracle
from constructions.colorings import (
    LiftColoringSpec,
    hash_tournament_oracle,
    lift_oracle,
    pattern_oracle,
    tournament_oracle,
)
from constructions.stepup import stepup_oracle


def _fields(tokens: list[str], spec: str) -> dict[str, str]:
    fields = {}
    for token in tokens:
        if "=" not in token:
            fields[token] = ""
            continue
        key, value = token.split("=", 1)
        fields[key] = value
    return fields


def _require(fields: dict[str, str], key: str, spec: str) -> str:
    if not fields.get(key):
        raise InvalidInputError(f"Oracle spec '{spec}' is missing '{key}='")
    return fields[key]


def _int(value: str, key: str) -> int:
    try:
        number = int(value)
    except ValueError as exc:
        raise InvalidInputError(f"'{key}' must be an integer, got '{value}'") from exc
    if number < 0:
        raise InvalidInputError(f"'{key}' must be non-negative, got {number}")
    return number


def _universe(N: Optional[int], spec: str) -> int:
    if N is None:
        raise InvalidInputError(f"Oracle spec '{spec}' needs a universe size N")
    return N


def parse_oracle(spec: str, N: Optional[int] = None, base_dir: Optional[Path] = None) -> TripleColoringOracle:
    """
    Build the oracle described by ``spec``.

    Args:
        spec: Oracle spec string
        N: Universe size for oracles that do not fix it themselves
        base_dir: Directory relative file paths are resolved against

    Returns:
        TripleColoringOracle named by ``spec``

    Raises:
        InvalidInputError: On an unknown kind or malformed field
        FileNotFoundError: If a referenced file does not exist
    """
    kind, *tokens = spec.split(":")
    fields = _fields(tokens, spec)
    base_dir = Path(base_dir) if base_dir else Path(".")

    def path_of(key: str) -> Path:
        path = Path(_require(fields, key, spec))
        return path if path.is_absolute() else base_dir / path

    if kind == "const":
        if tokens not in (["red"], ["blue"]):
            raise InvalidInputError(f"Constant oracle must be const:red or const:blue, got '{spec}'")
        color = Color2.RED if tokens[0] == "red" else Color2.BLUE
        return constant_oracle(_universe(N, spec), int(color))

    if kind == "random":
        try:
            p = float(_require(fields, "p", spec))
        except ValueError as exc:
            raise InvalidInputError(f"'p' must be a number in '{spec}'") from exc
        return random_oracle(_universe(N, spec), p, _int(_require(fields, "seed", spec), "seed"))

    if kind == "tournament":
        if "random" in fields:
            return hash_tournament_oracle(_universe(N, spec), _int(_require(fields, "seed", spec), "seed"))
        t = read_tournament(path_of("file"))
        oracle = tournament_oracle(t, name=spec)
        if N is not None and N > t.n:
            raise InvalidInputError(f"N={N} exceeds the tournament size {t.n}")
        return oracle

    if kind == "lift":
        r = _int(_require(fields, "r", spec), "r")
        c1 = read_coloring(path_of("c1"))
        spec_obj = LiftColoringSpec(r=r, c1=c1, seed=_int(_require(fields, "seed", spec), "seed"))
        return lift_oracle(spec_obj, _universe(N, spec), name=spec)

    if kind == "stepup":
        g = read_graph(path_of("graph"))
        return stepup_oracle(g, name=spec)

    if kind == "pattern":
        return pattern_oracle(_universe(N, spec), _int(_require(fields, "seed", spec), "seed"))

    raise InvalidInputError(f"Unknown oracle kind '{kind}' in '{spec}'")
