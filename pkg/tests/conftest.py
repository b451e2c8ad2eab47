from pathlib import Path as FsPath

import pytest

from gisemi.graph import Graph, read_graph

DATA = FsPath(__file__).parent / "data"

FIXTURES = ("g_a2", "g_r1", "g_r2", "g_c2", "g_flow", "g_diamond")
CYCLIC = ("g_r1", "g_r2", "g_c2", "g_flow")
ACYCLIC = ("g_a2", "g_diamond")


def load(name: str) -> Graph:
    return read_graph(DATA / f"{name}.json")


def flow_with_tail() -> Graph:
    """G_FLOW plus a vertex d and an edge w: d -> a."""
    g = load("g_flow")
    return Graph(g.vertices + ("d",), g.edges + (("w", "d", "a"),))


@pytest.fixture(params=FIXTURES)
def fixture_graph(request):
    return load(request.param)


@pytest.fixture
def a2():
    return load("g_a2")


@pytest.fixture
def r1():
    return load("g_r1")


@pytest.fixture
def r2():
    return load("g_r2")


@pytest.fixture
def c2():
    return load("g_c2")


@pytest.fixture
def flow():
    return load("g_flow")


@pytest.fixture
def diamond():
    return load("g_diamond")
