"""Input validation helpers for the estimator API.

``check_graph`` normalizes the accepted graph formats into the internal
:class:`~bmssp.graph.Graph`; ``check_source`` validates a 1-based source
vertex.
"""

from __future__ import annotations

from typing import Any

import numpy as np
import scipy.sparse as sp

from .graph import Graph, build_graph

__all__ = ["check_graph", "check_source"]


def check_graph(X: Any) -> Graph:
    """Coerce ``X`` into a :class:`Graph`.

    Accepted forms:
      * a :class:`Graph` (returned as-is);
      * a scipy sparse matrix of shape (n, n) whose stored entries are the
        edge weights (explicit zeros are kept as zero-weight edges);
      * a dense 2-D array whose nonzero entries are edge weights (a dense
        array cannot express zero-weight edges; use a sparse matrix or
        :func:`~bmssp.graph.build_graph` for those).
    """
    if isinstance(X, Graph):
        return X
    if sp.issparse(X):
        coo = X.tocoo()
        rows, cols = coo.shape
        if rows != cols:
            raise ValueError(f"adjacency matrix must be square, got {coo.shape}")
        edges = [
            (int(u) + 1, int(v) + 1, w.item() if hasattr(w, "item") else w)
            for u, v, w in zip(coo.row, coo.col, coo.data)
        ]
        return build_graph(rows, edges)
    arr = np.asarray(X)
    if arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
        n = arr.shape[0]
        edges = [
            (u + 1, v + 1, arr[u, v].item())
            for u, v in zip(*np.nonzero(arr))
        ]
        return build_graph(n, edges)
    raise TypeError(
        "expected a Graph, a square scipy sparse matrix, or a square 2-D array"
    )


def check_source(source: Any, n: int) -> int:
    """Validate a 1-based source vertex for an n-vertex graph."""
    v = int(source)
    if v != source:
        raise ValueError(f"source must be an integer, got {source!r}")
    if not 1 <= v <= n:
        raise ValueError(f"source {v} out of range 1..{n}")
    return v
