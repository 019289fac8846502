"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with ``pytest -s`` to see them).

Criteria:
  1. solver/oracle equivalence over 1100 randomized graphs (zero weights in)
  2. road-network checksum agreement (needs a local DIMACS instance)
  3. benchmark ratio qualitative trend over n = 2^7..2^17
  4. crossover calculator against the reference constants
  5. theoretical ratio values and strict monotonicity
  6. bounded-queue oracle suite, 100k randomized operation sequences
  7. generator degree/reachability/determinism statistics
  8. work accounting: relaxations within a flat constant of m*log^(2/3) n
"""

import math
import os
import random
import time
from collections import deque

import pytest

from bmssp import (
    BoundedQueue,
    GraphSource,
    bellman_ford_oracle,
    build_graph,
    dijkstra,
    generate_sparse_random,
    parse_dimacs,
    run_benchmark,
    sssp,
    theoretical_ratio,
    crossover_threshold,
)
from bmssp.bench import distance_checksum, order_of_magnitude
from conftest import dimacs_instances

REPORT = "acceptance: {name}: {verdict} ({detail})"


def report(name, ok, detail=""):
    print(REPORT.format(name=name, verdict="PASS" if ok else "FAIL", detail=detail))
    assert ok, f"{name}: {detail}"


class TestCriterion1OracleEquivalence:
    def test_equivalence_gauntlet(self):
        start = time.time()
        rng = random.Random(0xACCE9717)
        checked = 0
        for _ in range(1000):
            n = rng.randint(1, 256)
            m = rng.randint(0, 3 * n)
            edges = [
                (rng.randint(1, n), rng.randint(1, n), rng.randint(0, 100))
                for _ in range(m)
            ]
            g = build_graph(n, edges)
            source = rng.randint(1, n)
            expected = bellman_ford_oracle(g, source).dist
            assert sssp(g, source).dist == expected, f"sssp != oracle (n={n})"
            assert dijkstra(g, source).dist == expected, f"dijkstra != oracle (n={n})"
            checked += 1
        for _ in range(100):
            n = rng.randint(257, 2048)
            m = rng.randint(n, 3 * n)
            edges = [
                (rng.randint(1, n), rng.randint(1, n), rng.randint(0, 100))
                for _ in range(m)
            ]
            g = build_graph(n, edges)
            source = rng.randint(1, n)
            expected = bellman_ford_oracle(g, source).dist
            assert sssp(g, source).dist == expected, f"sssp != oracle (n={n})"
            assert dijkstra(g, source).dist == expected, f"dijkstra != oracle (n={n})"
            checked += 1
        elapsed = time.time() - start
        report(
            "criterion 1 (oracle equivalence)",
            elapsed < 120,
            f"{checked} graphs exact-equal in {elapsed:.1f}s (budget 120s)",
        )


class TestCriterion2RoadNetwork:
    def test_road_network_checksums(self):
        instances = dimacs_instances()
        if not instances:
            print(REPORT.format(
                name="criterion 2 (road networks)", verdict="SKIP",
                detail="no DIMACS .gr files found; set BMSSP_DIMACS_DIR or put"
                       " files under data/",
            ))
            pytest.skip("no DIMACS road instances available in this environment")
        for path in instances:
            with open(path, "rb") as fh:
                g = parse_dimacs(fh)
            name = os.path.basename(path)
            if "ny" in name.lower():
                assert (g.n, g.m) == (264346, 733846), f"{name}: unexpected size"
            c_d = distance_checksum(dijkstra(g, 1))
            c_b = distance_checksum(sssp(g, 1))
            report(
                f"criterion 2 (road network {name})",
                c_d == c_b,
                f"n={g.n} m={g.m} checksum={c_d}",
            )


@pytest.mark.slow
class TestCriterion3RatioTrend:
    def test_ratio_above_one_and_falling(self):
        sources = [
            GraphSource(kind="generated", name=f"gen-2^{exp}", seed=exp, n=2**exp)
            for exp in range(7, 18)
        ]
        records = run_benchmark(sources, repetitions=5, source_vertex=1)
        assert all(r.valid for r in records), [r.error for r in records]
        ratios = {r.instance: r.ratio for r in records}
        detail = " ".join(f"{r.instance.split('-')[1]}:{r.ratio:.1f}" for r in records)
        report(
            "criterion 3 (ratio > 1 at every size)",
            all(r.ratio > 1 for r in records),
            detail,
        )
        report(
            "criterion 3 (ratio falls from 2^7 to 2^17)",
            ratios["gen-2^17"] < ratios["gen-2^7"],
            f"2^7: {ratios['gen-2^7']:.2f} -> 2^17: {ratios['gen-2^17']:.2f}",
        )


class TestCriterion4Crossover:
    def test_reference_constants(self):
        expected = {3: 8, 4: 19, 5: 38, 6: 65, 7: 103}
        details = []
        ok = True
        for c, magnitude in expected.items():
            n0 = crossover_threshold(c)
            edge = 1 << c**3  # exact: (log2 n)^{1/3} > c  <=>  n > 2^(c^3)
            flips = n0 > edge and n0 - 1 <= edge
            ok = ok and flips and order_of_magnitude(n0) == magnitude
            details.append(f"c={c}: 10^{order_of_magnitude(n0)}")
        report("criterion 4 (crossover constants)", ok, ", ".join(details))


class TestCriterion5TheoreticalRatio:
    def test_values_and_monotonicity(self):
        ok_256 = abs(theoretical_ratio(256) - 0.5) < 1e-12
        ok_227 = abs(theoretical_ratio(2**27) - 1 / 3) < 1e-12
        curve = [theoretical_ratio(1 << e) for e in range(7, 25)]
        strictly_decreasing = all(a > b for a, b in zip(curve, curve[1:]))
        report(
            "criterion 5 (theoretical ratio)",
            ok_256 and ok_227 and strictly_decreasing,
            f"f(256)={theoretical_ratio(256):.12f}, f(2^27)={theoretical_ratio(2**27):.12f}, "
            f"curve strictly decreasing over 2^7..2^24: {strictly_decreasing}",
        )


class TestCriterion6QueueOracle:
    def test_randomized_sessions(self):
        from test_bounded_queue import SortedMapReference

        start = time.time()
        sessions = 100_000
        violations = 0
        rng = random.Random(0xACCE9716)
        m_choices = [1, 2, 4, 16, 256]
        for session in range(sessions):
            M = m_choices[session % len(m_choices)]
            bound = math.inf if session % 3 else 10_000
            q = BoundedQueue(M, bound)
            ref = SortedMapReference(M, bound)
            for _ in range(rng.randint(3, 14)):
                roll = rng.random()
                if roll < 0.55:
                    key = rng.randint(0, 30)
                    value = rng.randint(-5000, 9999)
                    q.insert(key, value)
                    ref.insert(key, value)
                elif roll < 0.75:
                    current = ref.min_value()
                    base = current if current is not None else 10_000
                    pairs = [
                        (rng.randint(0, 30), base - rng.randint(1, 40))
                        for _ in range(rng.randint(1, 2 * M + 1))
                    ]
                    q.batch_prepend(pairs)
                    ref.batch_prepend(pairs)
                else:
                    expected_bound, expected_keys = ref.pull()
                    got_bound, got_keys = q.pull()
                    if got_keys != expected_keys or got_bound != expected_bound:
                        violations += 1
            while True:
                expected_bound, expected_keys = ref.pull()
                got_bound, got_keys = q.pull()
                if got_keys != expected_keys or got_bound != expected_bound:
                    violations += 1
                    break
                if not expected_keys:
                    break
        elapsed = time.time() - start
        report(
            "criterion 6 (queue oracle suite)",
            violations == 0 and elapsed < 60,
            f"{sessions} sessions, {violations} violations, {elapsed:.1f}s (budget 60s)",
        )


class TestCriterion7GeneratorStatistics:
    def test_degree_reachability_determinism(self):
        ok = True
        details = []
        for n in (2**7, 2**10, 2**14):
            max_deg = 0
            for seed in range(20):
                g = generate_sparse_random(n, seed=seed)
                degrees = [len(out) for out in g.adj]
                max_deg = max(max_deg, max(degrees))
                mean = g.m / n
                if max(degrees) > 4 or not 2.7 <= mean <= 3.3:
                    ok = False
                seen = {0}
                todo = deque([0])
                while todo:
                    u = todo.popleft()
                    for v, _ in g.adj[u]:
                        if v not in seen:
                            seen.add(v)
                            todo.append(v)
                if len(seen) != n:
                    ok = False
                if list(g.edges()) != list(generate_sparse_random(n, seed=seed).edges()):
                    ok = False
            details.append(f"n={n}: max_deg={max_deg}")
        report("criterion 7 (generator statistics)", ok, ", ".join(details))


@pytest.mark.slow
class TestCriterion8WorkAccounting:
    def test_relaxation_constant_flat(self):
        ratios = []
        details = []
        for exp in range(10, 18):
            g = generate_sparse_random(2**exp, seed=exp)
            state = sssp(g, 1)
            normalizer = g.m * math.log2(g.n) ** (2 / 3)
            ratios.append(state.relaxations / normalizer)
            details.append(f"2^{exp}:{ratios[-1]:.3f}")
        non_increasing_within_20 = all(
            later <= earlier * 1.2 for earlier, later in zip(ratios, ratios[1:])
        )
        constant = max(ratios)
        report(
            "criterion 8 (work accounting)",
            non_increasing_within_20,
            f"C={constant:.3f}; count/(m*log^(2/3) n) per size: {' '.join(details)}",
        )
