"""Benchmark harness: calculators, CSV round-trip, record production."""

import io
import math

import pytest

from bmssp import (
    BenchRecord,
    GraphSource,
    crossover_threshold,
    emit_csv,
    parse_csv,
    run_benchmark,
    theoretical_ratio,
)
from bmssp.bench import distance_checksum, order_of_magnitude, run_single
from bmssp import dijkstra, generate_sparse_random, sssp


class TestTheoreticalRatio:
    def test_reference_points(self):
        assert theoretical_ratio(2) == 1.0
        assert abs(theoretical_ratio(256) - 0.5) < 1e-12
        assert abs(theoretical_ratio(2**27) - 1 / 3) < 1e-12

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            theoretical_ratio(1)

    def test_strictly_decreasing_over_doublings(self):
        values = [theoretical_ratio(1 << e) for e in range(7, 25)]
        assert all(a > b for a, b in zip(values, values[1:]))


class TestCrossoverThreshold:
    # independent check: n0 is minimal iff the inequality flips exactly there.
    # (log2 n)^(1/3) > c  <=>  n > 2^(c^3); whole c allows exact integers,
    # far from the float rounding of cube roots near the boundary.
    @staticmethod
    def crosses_at(n0, c):
        if float(c**3).is_integer():
            edge = 1 << int(c**3)
            return n0 > edge and n0 - 1 <= edge
        above = math.log2(n0) > c**3
        below = math.log2(n0 - 1) <= c**3 if n0 > 2 else True
        return above and below

    @pytest.mark.parametrize(
        "c,expected_magnitude",
        [(3, 8), (4, 19), (5, 38), (6, 65), (7, 103)],
    )
    def test_reference_constants(self, c, expected_magnitude):
        n0 = crossover_threshold(c)
        assert n0 == 2 ** (c**3) + 1
        assert order_of_magnitude(n0) == expected_magnitude
        assert self.crosses_at(n0, c)

    def test_strict_inequality_edge(self):
        # log2(2) = 1 is not > 1, so n0 must skip to 3
        assert crossover_threshold(1) == 3

    def test_small_ratios(self):
        assert crossover_threshold(0.5) == 2
        assert crossover_threshold(0.01) == 2

    def test_fractional_ratio(self):
        c = 2.5
        n0 = crossover_threshold(c)
        assert self.crosses_at(n0, c)

    def test_monotone_in_c(self):
        values = [crossover_threshold(c) for c in (0.5, 1, 1.5, 2, 2.5, 3, 4, 5, 6, 7)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            crossover_threshold(0)
        with pytest.raises(ValueError):
            crossover_threshold(-1)

    def test_consistency_with_ratio_calculator(self):
        # c * theoretical_ratio crosses 1 exactly at the threshold
        for c in (1, 2, 3):
            n0 = crossover_threshold(c)
            assert c * theoretical_ratio(n0) < 1
            assert c * theoretical_ratio(n0 - 1) >= 1


class TestEmitCsv:
    def _record(self, **kw):
        base = dict(
            instance="nyc", n=264346, m=733846,
            time_dijkstra_ms=32.490, time_bmssp_ms=250.030,
            ratio=round(250.030 / 32.490, 3),
            repetitions=5, checksum=1234567890123,
        )
        base.update(kw)
        return BenchRecord(**base)

    def test_empty_list_header_only(self):
        buf = io.StringIO()
        emit_csv([], buf)
        assert buf.getvalue() == (
            "instance,n,m,time_dijkstra_ms,time_bmssp_ms,ratio,repetitions,checksum\n"
        )

    def test_one_record_two_lines(self):
        buf = io.StringIO()
        emit_csv([self._record()], buf)
        assert len(buf.getvalue().splitlines()) == 2

    def test_reference_formatting(self):
        # 250.030 / 32.490 presents as 7.696 at three decimals
        buf = io.StringIO()
        emit_csv([self._record()], buf)
        row = buf.getvalue().splitlines()[1].split(",")
        assert row[3] == "32.490"
        assert row[4] == "250.030"
        assert row[5] == "7.696"

    def test_flagged_records_never_emitted(self):
        buf = io.StringIO()
        emit_csv([self._record(valid=False, error="checksum mismatch")], buf)
        assert len(buf.getvalue().splitlines()) == 1

    def test_roundtrip(self):
        records = [
            self._record(),
            self._record(instance="gen-1024", n=1024, m=3072,
                         time_dijkstra_ms=1.5, time_bmssp_ms=12.25,
                         ratio=round(12.25 / 1.5, 3), checksum=42),
        ]
        buf = io.StringIO()
        emit_csv(records, buf)
        buf.seek(0)
        assert parse_csv(buf) == records

    def test_parse_rejects_foreign_header(self):
        with pytest.raises(ValueError):
            parse_csv(io.StringIO("a,b,c\n1,2,3\n"))


class TestRunBenchmark:
    def test_generated_instance_record(self):
        src = GraphSource(kind="generated", name="gen-1024", seed=9, n=1024)
        records = run_benchmark([src], repetitions=2)
        assert len(records) == 1
        rec = records[0]
        assert rec.valid
        assert (rec.n, rec.m) == (1024, 3072)
        assert rec.repetitions == 2
        assert rec.ratio == round(rec.time_bmssp_ms / rec.time_dijkstra_ms, 3)
        assert rec.checksum == distance_checksum(dijkstra(src.load(), 1))

    def test_checksums_cross_verified(self):
        g = generate_sparse_random(1024, seed=4)
        assert distance_checksum(dijkstra(g, 1)) == distance_checksum(sssp(g, 1))

    def test_missing_file_flagged_not_raised(self):
        src = GraphSource(kind="dimacs-file", name="nope", path="/nonexistent/x.gr")
        records = run_benchmark([src], repetitions=1)
        assert len(records) == 1
        assert not records[0].valid
        assert "Error" in records[0].error or "No such" in records[0].error

    def test_batch_continues_after_failure(self, tmp_path):
        good = tmp_path / "good.gr"
        good.write_text("p sp 2 1\na 1 2 5\n")
        sources = [
            GraphSource(kind="dimacs-file", name="bad", path=str(tmp_path / "bad.gr")),
            GraphSource(kind="dimacs-file", name="good", path=str(good)),
        ]
        records = run_benchmark(sources, repetitions=1)
        assert [r.valid for r in records] == [False, True]

    def test_rejects_zero_repetitions(self):
        with pytest.raises(ValueError):
            run_benchmark([], repetitions=0)

    def test_mean_of_repetitions(self, monkeypatch):
        # pin the clock: dijkstra runs "take" 1,2,3 ms; bmssp 4,5,6 ms
        import bmssp.bench as bench_mod

        ticks = iter([0, 1e6, 10e6, 14e6, 20e6, 22e6, 30e6, 35e6, 40e6, 43e6, 50e6, 56e6])
        monkeypatch.setattr(bench_mod.time, "perf_counter_ns", lambda: next(ticks))
        src = GraphSource(kind="generated", name="tiny", seed=1, n=2)
        [rec] = bench_mod.run_benchmark([src], repetitions=3)
        assert rec.time_dijkstra_ms == 2.0  # mean of 1,2,3
        assert rec.time_bmssp_ms == 5.0  # mean of 4,5,6

    def test_run_single(self):
        g = generate_sparse_random(64, seed=1)
        ms, checksum = run_single(g, "dijkstra")
        assert ms > 0
        assert checksum == distance_checksum(dijkstra(g, 1))


class TestThresholdQuery:
    def test_evaluate_holds_invariant(self):
        from bmssp.bench import ThresholdQuery

        for c in (1, 2, 3, 5, 7, 2.5):
            q = ThresholdQuery.evaluate(c)
            assert q.c_ratio == c
            assert q.n0 == crossover_threshold(c)
            assert TestCrossoverThreshold.crosses_at(q.n0, c)

    def test_magnitude(self):
        from bmssp.bench import ThresholdQuery

        assert ThresholdQuery.evaluate(7).magnitude == 103
