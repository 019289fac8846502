"""Scikit-learn style estimators wrapping the shortest-path solvers.

Both estimators follow the fit/predict convention: ``fit`` validates and
stores the graph, ``predict`` returns the distance vector from a source
vertex as a float array (``inf`` marks unreachable vertices).  They are
plain ``BaseEstimator`` subclasses, so ``get_params`` / ``set_params`` /
``clone`` work as usual and the benchmark harness can treat solvers
uniformly.

    >>> from bmssp import generate_sparse_random
    >>> from bmssp.estimators import DijkstraSSSP, BoundedRecursionSSSP
    >>> g = generate_sparse_random(128, seed=7)
    >>> d = DijkstraSSSP().fit(g).predict(source=1)
    >>> b = BoundedRecursionSSSP().fit(g).predict(source=1)
    >>> (d == b).all()
    True
"""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .core import Params, compute_params, sssp
from .dijkstra import dijkstra
from .validation import check_graph, check_source

__all__ = ["DijkstraSSSP", "BoundedRecursionSSSP"]


class _ShortestPathEstimator(BaseEstimator):
    """Shared fit/predict plumbing; subclasses provide ``_solve``."""

    def fit(self, X, y=None):
        """Validate and store the graph.

        Args:
            X: a Graph, a square scipy sparse adjacency matrix, or a square
                dense array (see :func:`bmssp.validation.check_graph`).
            y: ignored; present for API compatibility.
        """
        self.graph_ = check_graph(X)
        self.n_vertices_ = self.graph_.n
        self.n_edges_ = self.graph_.m
        return self

    def predict(self, source: int = 1) -> np.ndarray:
        """Distances from ``source`` (1-based) to every vertex.

        Returns a float array of length ``n_vertices_``; position ``i``
        holds the distance of vertex ``i + 1``, ``inf`` if unreachable.
        Exact for integer weights below 2**53.
        """
        check_is_fitted(self, "graph_")
        source = check_source(source, self.graph_.n)
        state = self._solve(self.graph_, source)
        return np.asarray(state.dist, dtype=np.float64)

    def _solve(self, graph, source):
        raise NotImplementedError


class DijkstraSSSP(_ShortestPathEstimator):
    """Single-source shortest paths via binary-heap Dijkstra."""

    def _solve(self, graph, source):
        return dijkstra(graph, source)


class BoundedRecursionSSSP(_ShortestPathEstimator):
    """Single-source shortest paths via the bounded multi-source recursion.

    Args:
        k: override for the pivot-relaxation depth (default: derived from
            the vertex count at fit time).
        t: override for the branching exponent (default: derived).
    """

    def __init__(self, k: int | None = None, t: int | None = None):
        self.k = k
        self.t = t

    def fit(self, X, y=None):
        super().fit(X, y)
        derived = compute_params(self.graph_.n)
        k = derived.k if self.k is None else self.k
        t = derived.t if self.t is None else self.t
        if k < 1 or t < 1:
            raise ValueError("k and t must be >= 1")
        n = self.graph_.n
        l_max = max(1, math.ceil(math.log2(n) / t)) if n > 1 else 1
        self.params_ = Params(n=n, k=k, t=t, l_max=l_max)
        return self

    def _solve(self, graph, source):
        return sssp(graph, source, params=self.params_)
