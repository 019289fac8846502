"""Shortest-path library: bounded multi-source recursion with a binary-heap
Dijkstra baseline, plus graph ingestion/generation and a benchmark harness.
"""

from .bench import (
    BenchRecord,
    crossover_threshold,
    emit_csv,
    parse_csv,
    run_benchmark,
    theoretical_ratio,
)
from .bounded_queue import BoundedQueue
from .core import (
    BoundedResult,
    Params,
    PivotResult,
    base_case,
    bmssp,
    compute_params,
    find_pivots,
    sssp,
)
from .dijkstra import INFINITY, DistanceState, bellman_ford_oracle, dijkstra
from .graph import (
    DimacsFormatError,
    Graph,
    GraphSource,
    build_graph,
    emit_dimacs,
    generate_sparse_random,
    parse_dimacs,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "BoundedQueue",
    "BoundedResult",
    "DimacsFormatError",
    "DistanceState",
    "Graph",
    "GraphSource",
    "INFINITY",
    "Params",
    "PivotResult",
    "__version__",
    "base_case",
    "bellman_ford_oracle",
    "bmssp",
    "build_graph",
    "compute_params",
    "crossover_threshold",
    "dijkstra",
    "emit_csv",
    "emit_dimacs",
    "find_pivots",
    "generate_sparse_random",
    "parse_csv",
    "parse_dimacs",
    "run_benchmark",
    "sssp",
    "theoretical_ratio",
]
