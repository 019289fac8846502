"""Benchmark harness: repeated timing of both solvers on graph instances,
checksum cross-verification, CSV emission, and the asymptotic-ratio and
crossover calculators.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass, field
from typing import IO, Callable, Iterable, Sequence

from .core import sssp
from .dijkstra import INFINITY, DistanceState, dijkstra
from .graph import Graph, GraphSource

__all__ = [
    "BenchRecord",
    "ChecksumMismatchError",
    "ThresholdQuery",
    "distance_checksum",
    "run_benchmark",
    "run_single",
    "theoretical_ratio",
    "crossover_threshold",
    "order_of_magnitude",
    "emit_csv",
    "parse_csv",
]

CSV_HEADER = [
    "instance",
    "n",
    "m",
    "time_dijkstra_ms",
    "time_bmssp_ms",
    "ratio",
    "repetitions",
    "checksum",
]

_CHECKSUM_MASK = (1 << 64) - 1

ALGORITHMS: dict[str, Callable[[Graph, int], DistanceState]] = {
    "dijkstra": dijkstra,
    "bmssp": sssp,
}


class ChecksumMismatchError(RuntimeError):
    """The two solvers disagreed on an instance's distances."""


@dataclass
class BenchRecord:
    """One benchmark row.

    Times are arithmetic means over ``repetitions`` runs, in milliseconds,
    rounded to three decimals (the CSV resolution, so emitted rows parse
    back field-for-field).  ``checksum`` is the 64-bit wrapping sum of
    finite distances, identical for both solvers whenever ``valid``.
    """

    instance: str
    n: int
    m: int
    time_dijkstra_ms: float
    time_bmssp_ms: float
    ratio: float
    repetitions: int
    checksum: int
    valid: bool = field(default=True, compare=False)
    error: str | None = field(default=None, compare=False)


def distance_checksum(state: DistanceState) -> int:
    """Sum of finite distances, wrapping at 64 bits."""
    total = 0
    for d in state.dist:
        if d != INFINITY:
            total += int(d)
    return total & _CHECKSUM_MASK


def _mean_ms(samples_ns: Sequence[int]) -> float:
    mean = sum(samples_ns) / len(samples_ns) / 1e6
    rounded = round(mean, 3)
    return rounded if rounded > 0 else 0.001  # clamp to the CSV resolution


def run_single(graph: Graph, algorithm: str, source: int = 1) -> tuple[float, int]:
    """Run one solver once; returns (elapsed ms, distance checksum)."""
    solver = ALGORITHMS[algorithm]
    start = time.perf_counter_ns()
    state = solver(graph, source)
    elapsed = time.perf_counter_ns() - start
    return elapsed / 1e6, distance_checksum(state)


def run_benchmark(
    sources: Iterable[GraphSource],
    repetitions: int = 5,
    source_vertex: int = 1,
) -> list[BenchRecord]:
    """Time both solvers on every instance.

    For each instance the solvers run interleaved, ``repetitions`` times
    each, on one thread; loading/generation is excluded from the timing.
    Checksums are compared on every run: a mismatch flags the record as
    invalid rather than silently dropping it.  Per-instance failures
    (missing file, out of memory) are captured on the record so one bad
    instance never aborts the batch.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    records: list[BenchRecord] = []
    for source in sources:
        try:
            graph = source.load()
        except (OSError, MemoryError, ValueError) as exc:
            records.append(
                BenchRecord(
                    instance=source.name, n=0, m=0,
                    time_dijkstra_ms=0.0, time_bmssp_ms=0.0, ratio=0.0,
                    repetitions=repetitions, checksum=0,
                    valid=False, error=f"{type(exc).__name__}: {exc}",
                )
            )
            continue
        try:
            dijkstra_ns: list[int] = []
            bmssp_ns: list[int] = []
            checksums: dict[str, set[int]] = {"dijkstra": set(), "bmssp": set()}
            for _ in range(repetitions):
                for name, samples in (("dijkstra", dijkstra_ns), ("bmssp", bmssp_ns)):
                    solver = ALGORITHMS[name]
                    start = time.perf_counter_ns()
                    state = solver(graph, source_vertex)
                    samples.append(time.perf_counter_ns() - start)
                    checksums[name].add(distance_checksum(state))
            agreed = checksums["dijkstra"] | checksums["bmssp"]
            valid = len(agreed) == 1
            time_d = _mean_ms(dijkstra_ns)
            time_b = _mean_ms(bmssp_ns)
            records.append(
                BenchRecord(
                    instance=source.name,
                    n=graph.n,
                    m=graph.m,
                    time_dijkstra_ms=time_d,
                    time_bmssp_ms=time_b,
                    ratio=round(time_b / time_d, 3),
                    repetitions=repetitions,
                    checksum=next(iter(agreed)) if valid else 0,
                    valid=valid,
                    error=None if valid else f"checksum mismatch: {checksums}",
                )
            )
        except MemoryError:
            records.append(
                BenchRecord(
                    instance=source.name, n=graph.n, m=graph.m,
                    time_dijkstra_ms=0.0, time_bmssp_ms=0.0, ratio=0.0,
                    repetitions=repetitions, checksum=0,
                    valid=False, error="MemoryError",
                )
            )
    return records


def theoretical_ratio(n: int) -> float:
    """Expected solver time ratio under the asymptotic cost models:
    log2(n) ** (-1/3)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return math.log2(n) ** (-1.0 / 3.0)


def crossover_threshold(c_ratio: float) -> int:
    """Smallest n where a cost model c2*n*log^{2/3}(n) beats c1*n*log(n),
    given c_ratio = c2/c1: the least n with log2(n)^(1/3) > c_ratio.

    Exact for integer ``c_ratio**3`` (every whole c_ratio); for fractional
    exponents beyond float range the result keeps 52 significant bits.
    """
    if c_ratio <= 0:
        raise ValueError("c_ratio must be positive")
    exponent = c_ratio**3
    if float(exponent).is_integer():
        return (1 << int(exponent)) + 1
    if exponent < 1000:
        return math.floor(2.0**exponent) + 1
    frac, whole = math.modf(exponent)
    mantissa = math.floor(2.0 ** (frac + 52))
    return (mantissa << (int(whole) - 52)) + 1


def order_of_magnitude(n: int) -> int:
    """Nearest power of ten: round(log10(n))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return round(_log10_big(n))


@dataclass(frozen=True)
class ThresholdQuery:
    """A constant-factor ratio c2/c1 paired with the smallest vertex count
    where the n*log^(2/3) n cost model undercuts n*log n."""

    c_ratio: float
    n0: int

    @classmethod
    def evaluate(cls, c_ratio: float) -> "ThresholdQuery":
        return cls(c_ratio=c_ratio, n0=crossover_threshold(c_ratio))

    @property
    def magnitude(self) -> int:
        return order_of_magnitude(self.n0)


def _log10_big(n: int) -> float:
    try:
        return math.log10(n)
    except OverflowError:
        # ints beyond float range: split off the bit length
        bits = n.bit_length() - 53
        return math.log10(n >> bits) + bits * math.log10(2)


def emit_csv(records: Iterable[BenchRecord], destination: IO) -> None:
    """Write valid records as CSV; flagged records are never emitted as rows."""
    writer = csv.writer(destination, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        if not record.valid:
            continue
        writer.writerow(
            [
                record.instance,
                record.n,
                record.m,
                f"{record.time_dijkstra_ms:.3f}",
                f"{record.time_bmssp_ms:.3f}",
                f"{record.ratio:.3f}",
                record.repetitions,
                record.checksum,
            ]
        )


def parse_csv(stream: IO) -> list[BenchRecord]:
    """Inverse of :func:`emit_csv` for valid rows."""
    reader = csv.reader(stream)
    header = next(reader, None)
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {header!r}")
    records = []
    for row in reader:
        if not row:
            continue
        records.append(
            BenchRecord(
                instance=row[0],
                n=int(row[1]),
                m=int(row[2]),
                time_dijkstra_ms=float(row[3]),
                time_bmssp_ms=float(row[4]),
                ratio=float(row[5]),
                repetitions=int(row[6]),
                checksum=int(row[7]),
            )
        )
    return records
