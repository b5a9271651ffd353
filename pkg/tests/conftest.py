from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rainbow_aw import Graph, path_graph


@pytest.fixture
def broom() -> Graph:
    """Path 0-1-2 with leaves 3 and 4 hanging from vertex 2."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)
