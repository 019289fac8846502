"""Shared helpers: random digraph samplers for oracle comparisons.

The equivalence suites deliberately sample beyond what the benchmark
generator produces: zero weights, self-loops, parallel edges, unreachable
vertices, and heavy distance ties.
"""

from __future__ import annotations

import os
import random
from glob import glob

import pytest

from bmssp import Graph, build_graph


def random_digraph(
    rng: random.Random,
    n: int,
    avg_degree: float = 3.0,
    max_weight: int = 100,
    min_weight: int = 0,
) -> Graph:
    """Arbitrary digraph: duplicates, self-loops and disconnected parts allowed."""
    m = rng.randint(0, max(0, int(avg_degree * n)))
    edges = [
        (rng.randint(1, n), rng.randint(1, n), rng.randint(min_weight, max_weight))
        for _ in range(m)
    ]
    return build_graph(n, edges)


def tie_heavy_digraph(rng: random.Random, n: int) -> Graph:
    """Weights restricted to {0, 1}: maximal pressure on equal-distance paths."""
    m = rng.randint(n, 4 * n)
    edges = [
        (rng.randint(1, n), rng.randint(1, n), rng.randint(0, 1)) for _ in range(m)
    ]
    return build_graph(n, edges)


def dimacs_instances() -> list[str]:
    """Road-network files available locally, if any."""
    paths = []
    env_dir = os.environ.get("BMSSP_DIMACS_DIR")
    if env_dir:
        paths.extend(sorted(glob(os.path.join(env_dir, "*.gr"))))
    here = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    paths.extend(sorted(glob(os.path.join(here, "data", "*.gr"))))
    return paths


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xBADC0FFE)
