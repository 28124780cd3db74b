from pathlib import Path
import sys

# Ajouter le dossier parent au path pour importer les modules
sys.path.insert(0, str(Path(__file__).parent.parent))
from core.graphs import BitGraph, Tournament
from core.io import write_coloring, write_graph, write_tournament
from flows.checks import pentagon_coloring, triangle_red_coloring


def generate_inputs(output_dir: Path) -> list[Path]:
    """
    Write the sample inputs used by the CLI examples and the pipeline.

    Args:
        output_dir: Directory to write into, created if missing

    Returns:
        list[Path]: Paths of the written files
    """
    written = [
        write_graph(BitGraph.cycle(5), output_dir / "c5.g"),
        write_coloring(pentagon_coloring(), output_dir / "pentagon.col"),
        write_coloring(triangle_red_coloring(), output_dir / "triangle_red.col"),
        write_tournament(Tournament.rotational(7), output_dir / "rotational7.t"),
    ]
    for path in written:
        print(f"Generated {path.name} in {output_dir}")
    return written


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Generate the sample input files")
    parser.add_argument("--output-dir", type=str,
                        default=str(Path(__file__).parent.parent / "data" / "inputs"),
                        help="Directory to write into")
    args = parser.parse_args()

    generate_inputs(Path(args.output_dir))
