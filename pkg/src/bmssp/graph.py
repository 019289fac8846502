"""Directed graph representation, DIMACS ``.gr`` ingestion, and the sparse
random graph generator used by the benchmark harness.

Vertices are numbered 1..n externally (the DIMACS convention).  Internally
everything is 0-based: ``Graph.adj[i]`` holds the out-edges of vertex ``i+1``
as ``(target_index, weight)`` pairs.  Weights are non-negative numbers;
DIMACS files and generated instances always carry integers, which keeps
every distance computed by the algorithms exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

__all__ = [
    "Graph",
    "GraphSource",
    "DimacsFormatError",
    "build_graph",
    "parse_dimacs",
    "emit_dimacs",
    "generate_sparse_random",
]

DEFAULT_MAX_WEIGHT = 10**6

# Generated instances target a mean out-degree of 3, capped at 4.
_TARGET_MEAN_DEGREE = 3
_MAX_OUT_DEGREE = 4


class DimacsFormatError(ValueError):
    """Raised for malformed DIMACS ``.gr`` input; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    """Immutable directed graph in adjacency form.

    Attributes:
        n: vertex count; vertices are 1..n externally, 0..n-1 internally.
        m: number of directed edges.
        adj: ``adj[i]`` is a tuple of ``(target_index, weight)`` pairs for
            the out-edges of internal vertex ``i``, in insertion order.
    """

    n: int
    m: int
    adj: tuple[tuple[tuple[int, int | float], ...], ...]

    def out_edges(self, v: int) -> list[tuple[int, int | float]]:
        """Out-edges of external (1-based) vertex ``v`` as (target, weight) pairs,
        with 1-based targets."""
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        return [(t + 1, w) for t, w in self.adj[v - 1]]

    def edges(self) -> Iterator[tuple[int, int, int | float]]:
        """All edges as external (u, v, w) triples, grouped by source."""
        for u0, out in enumerate(self.adj):
            for v0, w in out:
                yield (u0 + 1, v0 + 1, w)


@dataclass(frozen=True)
class GraphSource:
    """Identity of a benchmark instance: either a DIMACS file or generator
    parameters.  Exactly one of ``path`` / ``seed`` is set, per ``kind``."""

    kind: str  # "dimacs-file" | "generated"
    name: str
    seed: int | None = None
    path: str | None = None
    n: int | None = None
    max_weight: int = DEFAULT_MAX_WEIGHT

    def __post_init__(self):
        if self.kind == "dimacs-file":
            if self.path is None or self.seed is not None:
                raise ValueError("dimacs-file source requires path and no seed")
        elif self.kind == "generated":
            if self.seed is None or self.path is not None:
                raise ValueError("generated source requires seed and no path")
            if self.n is None or self.n < 1:
                raise ValueError("generated source requires n >= 1")
        else:
            raise ValueError(f"unknown source kind {self.kind!r}")

    def load(self) -> Graph:
        if self.kind == "dimacs-file":
            assert self.path is not None
            with open(self.path, "rb") as fh:
                return parse_dimacs(fh)
        assert self.n is not None and self.seed is not None
        return generate_sparse_random(self.n, self.seed, self.max_weight)


def build_graph(n: int, edges: Iterable[tuple[int, int, int | float]]) -> Graph:
    """Build a Graph from external (u, v, w) triples, grouping by source
    vertex and preserving each vertex's edge order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out: list[list[tuple[int, int | float]]] = [[] for _ in range(n)]
    m = 0
    for u, v, w in edges:
        if not 1 <= u <= n:
            raise ValueError(f"edge source {u} out of range 1..{n}")
        if not 1 <= v <= n:
            raise ValueError(f"edge target {v} out of range 1..{n}")
        if w < 0:
            raise ValueError(f"negative weight {w} on edge ({u}, {v})")
        out[u - 1].append((v - 1, w))
        m += 1
    return Graph(n=n, m=m, adj=tuple(tuple(lst) for lst in out))


def _iter_text_lines(text: str | bytes | IO) -> Iterator[str]:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    if isinstance(text, str):
        yield from text.splitlines()
        return
    for raw in text:
        if isinstance(raw, bytes):
            raw = raw.decode("ascii", errors="replace")
        yield raw.rstrip("\r\n")


def parse_dimacs(text: str | bytes | IO) -> Graph:
    """Parse a DIMACS shortest-path ``.gr`` document.

    Grammar: ``c ...`` comment lines, exactly one ``p sp <n> <m>`` problem
    line, and ``a <u> <v> <w>`` arc lines with 1-based endpoints and
    non-negative integer weights.  Arcs are kept in file order; parallel
    edges and self-loops are preserved.  Malformed input raises
    :class:`DimacsFormatError` with the offending line number.
    """
    n = None
    declared_m = 0
    edges: list[tuple[int, int, int]] = []
    for lineno, line in enumerate(_iter_text_lines(text), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        fields = stripped.split()
        tag = fields[0]
        if tag == "c":
            continue
        if tag == "p":
            if n is not None:
                raise DimacsFormatError(lineno, "duplicate problem line")
            if len(fields) != 4 or fields[1] != "sp":
                raise DimacsFormatError(lineno, f"malformed problem line {stripped!r}")
            try:
                n = int(fields[2])
                declared_m = int(fields[3])
            except ValueError:
                raise DimacsFormatError(lineno, f"malformed problem line {stripped!r}") from None
            if n < 0 or declared_m < 0:
                raise DimacsFormatError(lineno, "negative count in problem line")
            continue
        if tag == "a":
            if n is None:
                raise DimacsFormatError(lineno, "arc line before problem line")
            if len(fields) != 4:
                raise DimacsFormatError(lineno, f"malformed arc line {stripped!r}")
            try:
                u, v, w = int(fields[1]), int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsFormatError(lineno, f"malformed token in arc line {stripped!r}") from None
            if not 1 <= u <= n:
                raise DimacsFormatError(lineno, f"arc source {u} out of range 1..{n}")
            if not 1 <= v <= n:
                raise DimacsFormatError(lineno, f"arc target {v} out of range 1..{n}")
            if w < 0:
                raise DimacsFormatError(lineno, f"negative arc weight {w}")
            edges.append((u, v, w))
            continue
        raise DimacsFormatError(lineno, f"unrecognized line {stripped!r}")
    if n is None:
        raise DimacsFormatError(0, "missing problem line")
    if len(edges) != declared_m:
        raise DimacsFormatError(
            0, f"problem line declares {declared_m} arcs but file contains {len(edges)}"
        )
    return build_graph(n, edges)


def emit_dimacs(graph: Graph, stream: IO, comment: str | None = None) -> None:
    """Write ``graph`` in DIMACS ``.gr`` format.  Inverse of :func:`parse_dimacs`
    up to (n, m, multiset of arcs)."""
    if comment:
        for line in comment.splitlines():
            stream.write(f"c {line}\n")
    stream.write(f"p sp {graph.n} {graph.m}\n")
    for u, v, w in graph.edges():
        stream.write(f"a {u} {v} {w}\n")


def generate_sparse_random(n: int, seed: int, max_weight: int = DEFAULT_MAX_WEIGHT) -> Graph:
    """Generate a sparse random directed graph: out-degree at most 4, total
    edge count targeting 3n, every vertex reachable from vertex 1, integer
    weights uniform in 1..max_weight.

    Construction: a random arborescence rooted at vertex 1 (each new vertex
    receives one incoming edge from an earlier vertex with spare out-degree,
    under a random relabeling), then extra random edges until m = 3n,
    rejecting self-loops, parallel edges, and out-degree overflows.  Output
    is a pure function of (n, seed, max_weight).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    rng = random.Random(seed)
    if n == 1:
        return build_graph(1, [])

    # Random relabeling with vertex 0 (external 1) fixed as the root.
    label = list(range(1, n))
    rng.shuffle(label)
    label = [0] + label

    out_deg = [0] * n
    targets: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int, int]] = []  # internal indices

    def add_edge(u: int, v: int) -> None:
        w = rng.randint(1, max_weight)
        edges.append((u, v, w))
        out_deg[u] += 1
        targets[u].add(v)

    for rank in range(1, n):
        v = label[rank]
        while True:
            u = label[rng.randrange(rank)]
            if out_deg[u] < _MAX_OUT_DEGREE:
                break
        add_edge(u, v)

    # Extra edges up to m = 3n.  A vertex leaves the pool once its out-degree
    # hits 4 or it has already used every distinct non-self target.
    target_m = _TARGET_MEAN_DEGREE * n
    pool = [u for u in range(n) if out_deg[u] < _MAX_OUT_DEGREE and len(targets[u]) < n - 1]
    while len(edges) < target_m and pool:
        idx = rng.randrange(len(pool))
        u = pool[idx]
        if out_deg[u] >= _MAX_OUT_DEGREE or len(targets[u]) >= n - 1:
            pool[idx] = pool[-1]
            pool.pop()
            continue
        v = rng.randrange(n)
        if v == u or v in targets[u]:
            continue
        add_edge(u, v)

    return build_graph(n, [(u + 1, v + 1, w) for u, v, w in edges])
