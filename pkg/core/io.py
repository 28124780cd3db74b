"""
Plain-text file formats for graphs, tournaments and edge colorings.

    graph       p <n>            then  e <u> <v>           per edge
    tournament  t <n>            then  one 0/1 row of n characters per vertex
    coloring    c <n> <palette>  then  x <u> <v> <color>   per pair

Vertices are 0-indexed. Lines starting with ``#`` are comments.
"""

from pathlib import Path

from core.errors import InvalidInputError
from core.graphs import BitGraph, EdgeColoring, Tournament, bits_of


def _content_lines(path: Path) -> list[list[str]]:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Missing input file: {path}")
    lines = []
    for raw in path.read_text().splitlines():
        raw = raw.strip()
        if raw and not raw.startswith("#"):
            lines.append(raw.split())
    if not lines:
        raise InvalidInputError(f"Empty input file: {path}")
    return lines


def _ints(tokens: list[str], path: Path) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError as exc:
        raise InvalidInputError(f"{path}: expected integers, got {' '.join(tokens)}") from exc


def read_graph(path: Path) -> BitGraph:
    lines = _content_lines(path)
    header = lines[0]
    if header[0] != "p" or len(header) != 2:
        raise InvalidInputError(f"{path}: graph header must be 'p <n>'")
    (n,) = _ints(header[1:], path)
    edges = []
    for tokens in lines[1:]:
        if tokens[0] != "e" or len(tokens) != 3:
            raise InvalidInputError(f"{path}: bad edge line '{' '.join(tokens)}'")
        u, v = _ints(tokens[1:], path)
        edges.append((u, v))
    return BitGraph.from_edges(n, edges)


def write_graph(g: BitGraph, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"p {g.n}"] + [f"e {u} {v}" for u, v in g.edges()]
    path.write_text("\n".join(lines) + "\n")
    return path


def read_tournament(path: Path) -> Tournament:
    lines = _content_lines(path)
    header = lines[0]
    if header[0] != "t" or len(header) != 2:
        raise InvalidInputError(f"{path}: tournament header must be 't <n>'")
    (n,) = _ints(header[1:], path)
    rows = [tokens[0] for tokens in lines[1:]]
    if len(rows) != n or any(len(row) != n or set(row) - {"0", "1"} for row in rows):
        raise InvalidInputError(f"{path}: expected {n} rows of {n} characters 0/1")
    return Tournament.from_matrix([[ch == "1" for ch in row] for row in rows])


def write_tournament(t: Tournament, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = ["".join("1" if t.beats_vertex(u, v) else "0" for v in range(t.n)) for u in range(t.n)]
    path.write_text("\n".join([f"t {t.n}"] + rows) + "\n")
    return path


def read_coloring(path: Path) -> EdgeColoring:
    lines = _content_lines(path)
    header = lines[0]
    if header[0] != "c" or len(header) != 3:
        raise InvalidInputError(f"{path}: coloring header must be 'c <n> <palette>'")
    n, palette = _ints(header[1:], path)
    colors: dict[tuple[int, int], int] = {}
    for tokens in lines[1:]:
        if tokens[0] != "x" or len(tokens) != 4:
            raise InvalidInputError(f"{path}: bad pair line '{' '.join(tokens)}'")
        u, v, color = _ints(tokens[1:], path)
        pair = (min(u, v), max(u, v))
        if pair in colors:
            raise InvalidInputError(f"{path}: pair {pair} colored twice")
        colors[pair] = color
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in colors]
    if missing:
        raise InvalidInputError(f"{path}: uncolored pairs, first {missing[0]}")
    if len(colors) != n * (n - 1) // 2:
        raise InvalidInputError(f"{path}: pair outside [0, {n})")
    return EdgeColoring.from_function(n, palette, lambda u, v: colors[(u, v)])


def write_coloring(coloring: EdgeColoring, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"c {coloring.n} {coloring.palette}"]
    lines += [f"x {u} {v} {coloring.color(u, v)}" for u in range(coloring.n) for v in range(u + 1, coloring.n)]
    path.write_text("\n".join(lines) + "\n")
    return path


def coloring_from_graph(g: BitGraph) -> EdgeColoring:
    """Two-coloring with edges of ``g`` red and non-edges blue."""
    red = {(u, v) for u in range(g.n) for v in bits_of(g.adj[u]) if u < v}
    return EdgeColoring.from_function(g.n, 2, lambda u, v: 0 if (u, v) in red else 1)
