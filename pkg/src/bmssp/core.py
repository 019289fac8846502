"""Bounded multi-source shortest-path recursion and the SSSP entry point.

The solver recursively partitions work across ``l_max`` levels.  Each level
shrinks its source set to pivots via bounded relaxation rounds, then drains
a :class:`~bmssp.bounded_queue.BoundedQueue` of frontier vertices in batches
of ``2^((l-1)t)``, recursing on each batch with a tightened distance bound.
Level 0 runs a small truncated Dijkstra.

Vertex sets handled by :func:`find_pivots`, :func:`base_case` and
:func:`bmssp` use internal 0-based indices; the public :func:`sssp` entry
point takes the external 1-based source like the rest of the library.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .bounded_queue import BoundedQueue
from .dijkstra import INFINITY, DistanceState
from .graph import Graph

__all__ = [
    "Params",
    "PivotResult",
    "BoundedResult",
    "compute_params",
    "find_pivots",
    "base_case",
    "bmssp",
    "sssp",
]


@dataclass(frozen=True)
class Params:
    """Recursion parameters derived from the vertex count."""

    n: int
    k: int  # pivot-relaxation depth
    t: int  # branching exponent; batches of 2^((l-1)t) at level l
    l_max: int  # top recursion level


@dataclass(frozen=True)
class PivotResult:
    """Pivot set and the working set touched by the relaxation rounds."""

    pivots: set[int]
    working: set[int]


@dataclass(frozen=True)
class BoundedResult:
    """A tightened bound and the vertices completed below it."""

    bound: int | float
    completed: set[int]


def _floor_power(x: float, exponent_num: int, exponent_den: int) -> int:
    """floor(x ** (exponent_num / exponent_den)) for x >= 0, robust to the
    rounding of float ``pow`` at exact integer powers."""
    if x <= 0:
        return 0
    candidate = int(x ** (exponent_num / exponent_den))
    # candidate**den <= x**num  <=>  candidate <= x**(num/den)
    while (candidate + 1) ** exponent_den <= x**exponent_num:
        candidate += 1
    while candidate > 0 and candidate**exponent_den > x**exponent_num:
        candidate -= 1
    return candidate


def compute_params(n: int) -> Params:
    """Choose k, t and the level count for an n-vertex instance.

    k = floor(log2(n) ** (1/3)), t = floor(log2(n) ** (2/3)), and
    l_max = ceil(log2(n) / t), each clamped to at least 1 so degenerate
    small instances simply collapse to base cases.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    x = math.log2(n) if n > 1 else 0.0
    k = max(1, _floor_power(x, 1, 3))
    t = max(1, _floor_power(x, 2, 3))
    l_max = max(1, math.ceil(x / t))
    return Params(n=n, k=k, t=t, l_max=l_max)


def find_pivots(
    B: int | float,
    S: set[int],
    state: DistanceState,
    params: Params,
    graph: Graph,
) -> PivotResult:
    """Shrink the source set ``S`` to pivots worth recursing on.

    Runs k rounds of relaxation from ``S`` restricted to tentative values
    below ``B``; round i relaxes the out-edges of vertices reached in round
    i-1.  If the working set ever exceeds k*|S| the whole of ``S`` is
    returned as pivots.  Otherwise the graph of currently tight edges inside
    the working set is measured, and the members of ``S`` without a tight
    in-edge whose trees span at least k vertices become pivots.
    """
    dist = state.dist
    adj = graph.adj
    k = params.k
    assert all(dist[v] < B for v in S), "find_pivots source at or beyond bound"

    working = set(S)
    frontier: list[int] = list(S)
    limit = k * len(S)
    relaxations = 0
    for _ in range(k):
        nxt: list[int] = []
        nxt_seen: set[int] = set()
        for u in frontier:
            du = dist[u]
            for v, w in adj[u]:
                relaxations += 1
                nd = du + w
                # Matching values keep propagating (the rounds must measure
                # the true reach of S even across values discovered by
                # earlier phases); only strict improvements rewrite state.
                if nd < B and nd <= dist[v]:
                    if nd < dist[v]:
                        dist[v] = nd
                    if v not in nxt_seen:
                        nxt_seen.add(v)
                        nxt.append(v)
        working |= nxt_seen
        if len(working) > limit:
            state.relaxations += relaxations
            return PivotResult(pivots=set(S), working=working)
        frontier = nxt
    state.relaxations += relaxations

    # Pivot selection over the graph of currently tight edges inside the
    # working set.  Equal-distance ties can give a vertex several tight
    # in-edges, so trees are carved out disjointly (first root wins, in
    # vertex order), which also caps the pivot count at |W| / k.
    children: dict[int, list[int]] = {}
    has_tight_parent: set[int] = set()
    for u in working:
        du = dist[u]
        for v, w in adj[u]:
            if v != u and v in working and du + w == dist[v]:
                children.setdefault(u, []).append(v)
                has_tight_parent.add(v)
    pivots: set[int] = set()
    claimed: set[int] = set()
    for root in sorted(S):
        if root in has_tight_parent or root in claimed:
            continue
        claimed.add(root)
        tree = [root]
        size = 1
        while tree and size < k:
            x = tree.pop()
            for v in children.get(x, ()):
                if v not in claimed:
                    claimed.add(v)
                    tree.append(v)
                    size += 1
                    if size >= k:
                        break
        if size >= k:
            pivots.add(root)
    return PivotResult(pivots=pivots, working=working)


def base_case(
    B: int | float,
    S: set[int],
    state: DistanceState,
    params: Params,
    graph: Graph,
) -> BoundedResult:
    """Level-0 solver: truncated Dijkstra from the batch ``S``.

    Settles vertices in distance order, strictly below ``B``, stopping once
    k + |S| vertices are settled (k+1 for the usual singleton batch).  If the
    heap empties first, everything reachable below ``B`` was settled and the
    bound comes back unchanged.  Otherwise the settled vertices strictly
    below the last settled distance are completed and that distance is the
    new bound; when all settled vertices tie, they are all completed and the
    first value beyond the tie separates instead, so a call always makes
    progress even on plateaus of equal distances.
    """
    if not S:
        raise ValueError("base case requires a non-empty source batch")
    dist = state.dist
    complete = state.complete
    adj = graph.adj
    limit = params.k + len(S)

    heap: list[tuple[int | float, int]] = [(dist[x], x) for x in S]
    heapq.heapify(heap)
    settled: set[int] = set()
    settled_max: int | float = 0
    pending: int | float | None = None
    relaxations = 0
    while heap:
        d, u = heapq.heappop(heap)
        if u in settled or d != dist[u]:
            continue
        if len(settled) >= limit and d > settled_max:
            pending = d
            break
        settled.add(u)
        settled_max = d
        for v, w in adj[u]:
            relaxations += 1
            nd = d + w
            if nd >= B or v in settled:
                continue
            dv = dist[v]
            if nd < dv:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
            elif nd == dv:
                # Equal values keep the walk going: vertices whose exact
                # value was discovered by an earlier call must still be
                # traversed so everything behind them is reached.
                heapq.heappush(heap, (nd, v))
    state.relaxations += relaxations

    if pending is None:
        completed = settled
        bound = B
    else:
        below = {u for u in settled if dist[u] < settled_max}
        if below:
            completed = below
            bound = settled_max
        else:
            completed = settled
            bound = pending
    for u in completed:
        complete[u] = True
    return BoundedResult(bound=bound, completed=completed)


def bmssp(
    level: int,
    B: int | float,
    S: set[int],
    state: DistanceState,
    params: Params,
    graph: Graph,
) -> BoundedResult:
    """Recursive driver: complete the vertices reachable from ``S`` below
    ``B``, possibly stopping early at a tightened bound.

    Returns ``(B', U)`` where every vertex of ``U`` is complete with
    distance strictly below ``B'``.  ``B' = B`` when the frontier queue
    drained fully; otherwise the run was partial and ``B'`` is the bound of
    the last sub-call, reached once more than k * 2^(level*t) vertices were
    completed.
    """
    assert 0 <= level <= params.l_max, "recursion level out of range"
    if level == 0:
        return base_case(B, S, state, params, graph)

    pivot_result = find_pivots(B, S, state, params, graph)
    dist = state.dist
    complete = state.complete
    adj = graph.adj

    M = 1 << ((level - 1) * params.t)
    queue = BoundedQueue(M, B)
    for p in pivot_result.pivots:
        queue.insert(p, dist[p])

    threshold = params.k << (level * params.t)
    completed: set[int] = set()
    bound = B
    relaxations = 0
    while not queue.is_empty():
        inner_bound, batch = queue.pull()
        sub = bmssp(level - 1, inner_bound, batch, state, params, graph)
        completed |= sub.completed
        prepend: list[tuple[int, int | float]] = []
        for u in sub.completed:
            du = dist[u]
            for v, w in adj[u]:
                relaxations += 1
                nd = du + w
                if nd >= B:
                    continue
                dv = dist[v]
                if nd > dv:
                    continue
                improved = nd < dv
                if improved:
                    dist[v] = nd
                # Route by value.  Equal values re-queue vertices the
                # sub-calls discovered but did not finish; vertices already
                # finished at this level stay out, or zero-weight plateaus
                # would circulate forever.
                if improved or v not in completed:
                    if nd >= inner_bound:
                        queue.insert(v, nd)
                    else:
                        prepend.append((v, nd))
        for x in batch:
            if x not in completed:
                prepend.append((x, dist[x]))
        if prepend:
            queue.batch_prepend(prepend)
        if len(completed) > threshold:
            bound = sub.bound
            break

    for w_vertex in pivot_result.working:
        if dist[w_vertex] < bound:
            completed.add(w_vertex)
    for v in completed:
        complete[v] = True
    state.relaxations += relaxations
    return BoundedResult(bound=bound, completed=completed)


def sssp(graph: Graph, source: int, params: Params | None = None) -> DistanceState:
    """Single-source shortest paths via the bounded multi-source recursion.

    Produces the same distances as :func:`~bmssp.dijkstra.dijkstra`.  The
    top-level call uses the full recursion depth with an infinite bound; if
    it ever reports a finite bound the driver re-invokes on the surviving
    frontier until everything reachable is complete.
    """
    state = DistanceState.fresh(graph, source)
    if params is None:
        params = compute_params(graph.n)
    frontier = {source - 1}
    while frontier:
        result = bmssp(params.l_max, INFINITY, frontier, state, params, graph)
        if result.bound == INFINITY:
            break
        frontier = {
            v
            for v in range(graph.n)
            if not state.complete[v] and state.dist[v] != INFINITY
        }
    return state
