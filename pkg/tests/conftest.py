import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from cliquecover.config import get_settings  # noqa: E402
from cliquecover.graph import Graph, build_graph, gen_complete_multipartite  # noqa: E402


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(u, (u + 1) % n) for u in range(n)])


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Each test sees defaults unless it sets CLIQUECOVER_* itself."""
    for name in ("CLIQUECOVER_LOG_LEVEL", "CLIQUECOVER_ORACLE_CAP", "CLIQUECOVER_MAX_CANDIDATES", "CLIQUECOVER_DEFAULT_FORMAT"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k3_2_2_4():
    """K(2, 2, 4): parts {0, 1}, {2, 3}, {4, ..., 7}."""
    return gen_complete_multipartite([2, 2, 4])
