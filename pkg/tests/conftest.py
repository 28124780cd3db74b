from pathlib import Path

import pytest
from prefect.testing.utilities import prefect_test_harness

from core.graphs import BitGraph, Tournament
from flows.checks import pentagon_coloring, triangle_red_coloring

INPUTS_DIR = Path(__file__).parent.parent / "data" / "inputs"


@pytest.fixture(scope="session")
def prefect_harness():
    """Temporary Prefect database for flow tests."""
    with prefect_test_harness():
        yield


@pytest.fixture
def inputs_dir() -> Path:
    return INPUTS_DIR


@pytest.fixture
def c5() -> BitGraph:
    return BitGraph.cycle(5)


@pytest.fixture
def pentagon():
    return pentagon_coloring()


@pytest.fixture
def triangle_red():
    return triangle_red_coloring()


@pytest.fixture
def rotational7() -> Tournament:
    return Tournament.rotational(7)
