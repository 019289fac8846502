"""Binary-heap Dijkstra baseline and a quadratic Bellman-Ford test oracle.

Both operate on the shared :class:`DistanceState`, which records tentative
distances, completion flags, and an edge-relaxation counter used by the
benchmark instrumentation.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import inf

from .graph import Graph

__all__ = ["INFINITY", "DistanceState", "dijkstra", "bellman_ford_oracle"]

# Sentinel for unreached vertices.  Integer distances are never added to it,
# so integer-weight runs stay exact.
INFINITY = inf


@dataclass
class DistanceState:
    """Per-vertex tentative distances and completion flags for one source.

    ``dist[i]`` and ``complete[i]`` describe external vertex ``i+1``.
    A vertex is complete once its tentative distance is known to equal the
    true shortest distance.  ``relaxations`` counts edge examinations
    (each evaluation of ``dist[u] + w`` against ``dist[v]``).
    ``settled_order`` records the settling sequence (1-based) for
    :func:`dijkstra`; other solvers leave it empty.
    """

    source: int
    dist: list[int | float]
    complete: list[bool]
    relaxations: int = 0
    settled_order: list[int] = field(default_factory=list)

    @classmethod
    def fresh(cls, graph: Graph, source: int) -> "DistanceState":
        if not 1 <= source <= graph.n:
            raise ValueError(f"source {source} out of range 1..{graph.n}")
        dist: list[int | float] = [INFINITY] * graph.n
        dist[source - 1] = 0
        return cls(source=source, dist=dist, complete=[False] * graph.n)

    def distance(self, v: int) -> int | float:
        """Tentative distance of external vertex ``v``."""
        return self.dist[v - 1]


def dijkstra(graph: Graph, source: int) -> DistanceState:
    """Dijkstra's algorithm with a binary heap and lazy deletion.

    Stale heap entries are skipped on pop instead of being decreased in
    place.  Returns exact distances for every vertex reachable from
    ``source``; unreachable vertices keep the infinity sentinel.
    """
    state = DistanceState.fresh(graph, source)
    dist = state.dist
    complete = state.complete
    adj = graph.adj
    settled_order = state.settled_order
    relaxations = 0

    heap: list[tuple[int | float, int]] = [(0, source - 1)]
    while heap:
        d, u = heapq.heappop(heap)
        if d != dist[u]:
            continue  # stale entry
        complete[u] = True
        settled_order.append(u + 1)
        for v, w in adj[u]:
            relaxations += 1
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    state.relaxations = relaxations
    return state


def bellman_ford_oracle(graph: Graph, source: int) -> DistanceState:
    """Exact distances via full relaxation passes (early exit when a pass
    changes nothing).  O(n·m); intended as a test oracle for n up to ~2000."""
    state = DistanceState.fresh(graph, source)
    dist = state.dist
    adj = graph.adj
    relaxations = 0
    for _ in range(max(1, graph.n - 1)):
        changed = False
        for u in range(graph.n):
            du = dist[u]
            if du == INFINITY:
                continue
            for v, w in adj[u]:
                relaxations += 1
                nd = du + w
                if nd < dist[v]:
                    dist[v] = nd
                    changed = True
        if not changed:
            break
    for v in range(graph.n):
        if dist[v] != INFINITY:
            state.complete[v] = True
    state.relaxations = relaxations
    return state
