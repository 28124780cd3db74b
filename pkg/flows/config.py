import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Prefect configuration (empty URL = ephemeral mode, no server needed)
PREFECT_API_URL = os.getenv("PREFECT_API_URL", "")
PREFECT_LOGGING_LEVEL = os.getenv("PREFECT_LOGGING_LEVEL", "INFO")

# Repository layout
ROOT_DIR = Path(__file__).parent.parent
DATA_DIR = ROOT_DIR / "data"
INPUTS_DIR = DATA_DIR / "inputs"
RESULTS_DIR = DATA_DIR / "results"

# Sample inputs written by script/generate_inputs.py
C5_GRAPH = INPUTS_DIR / "c5.g"
PENTAGON_COLORING = INPUTS_DIR / "pentagon.col"
TRIANGLE_COLORING = INPUTS_DIR / "triangle_red.col"
ROTATIONAL_TOURNAMENT = INPUTS_DIR / "rotational7.t"

# Defaults shared by the CLI and the flows
DEFAULT_SEED = 0
DEFAULT_NODE_CAP = 10**9
DEFAULT_GAME_SEEDS = 10_000
DEFAULT_EXTRACTION_SEEDS = 100
DEFAULT_X_MAX = 10_000
DEFAULT_CHAIN_SAMPLES = 1_000_000

# Named random streams derived from the run seed
STREAMS = ("c2", "painter", "sampler", "oracle", "tournament", "pattern")


def configure_prefect() -> None:
    os.environ["PREFECT_API_URL"] = PREFECT_API_URL
    os.environ.setdefault("PREFECT_LOGGING_LEVEL", PREFECT_LOGGING_LEVEL)
