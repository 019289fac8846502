"""Command-line interface.

Subcommands:
  gen          write a generated sparse instance as a DIMACS ``.gr`` file
  run          run one solver once on an instance, print time and checksum
  bench        full timing harness over several instances, CSV output
  ratio-curve  emit the asymptotic time-ratio curve as CSV
  threshold    crossover size for a given constant-factor ratio

Exit codes: 0 success, 1 usage error, 2 correctness failure (solver
checksums disagree), 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import (
    ALGORITHMS,
    ThresholdQuery,
    emit_csv,
    run_benchmark,
    run_single,
    theoretical_ratio,
)
from .graph import (
    DEFAULT_MAX_WEIGHT,
    DimacsFormatError,
    GraphSource,
    emit_dimacs,
    generate_sparse_random,
    parse_dimacs,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CORRECTNESS = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bmssp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a sparse random instance")
    p_gen.add_argument("--n", type=int, required=True, help="vertex count")
    p_gen.add_argument("--seed", type=int, required=True, help="generator seed")
    p_gen.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
    p_gen.add_argument("--out", required=True, help="output .gr path")

    p_run = sub.add_parser("run", help="single timed run of one solver")
    src = p_run.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="DIMACS .gr file")
    src.add_argument("--gen-n", type=int, help="generate an instance of this size")
    p_run.add_argument("--algo", choices=sorted(ALGORITHMS), required=True)
    p_run.add_argument("--source", type=int, default=1)
    p_run.add_argument("--seed", type=int, default=1, help="seed for --gen-n")
    p_run.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)

    p_bench = sub.add_parser("bench", help="timing harness over instances")
    p_bench.add_argument("--inputs", nargs="+", required=True, help=".gr files")
    p_bench.add_argument("--reps", type=int, default=5)
    p_bench.add_argument("--source", type=int, default=1)
    p_bench.add_argument("--csv", required=True, help="output CSV path")

    p_curve = sub.add_parser("ratio-curve", help="asymptotic ratio curve")
    p_curve.add_argument("--n-min", type=int, required=True, help="smallest power of two")
    p_curve.add_argument("--n-max", type=int, required=True, help="largest power of two")
    p_curve.add_argument("--csv", required=True, help="output CSV path")

    p_thr = sub.add_parser("threshold", help="constant-factor crossover size")
    p_thr.add_argument("--c", type=float, required=True, help="constant ratio c2/c1")
    return parser


def _cmd_gen(args) -> int:
    try:
        graph = generate_sparse_random(args.n, args.seed, args.max_weight)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        with open(args.out, "w") as fh:
            emit_dimacs(
                graph, fh,
                comment=f"generated: n={args.n} seed={args.seed} max-weight={args.max_weight}",
            )
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {args.out}: n={graph.n} m={graph.m}")
    return EXIT_OK


def _cmd_run(args) -> int:
    try:
        if args.input:
            with open(args.input, "rb") as fh:
                graph = parse_dimacs(fh)
            name = Path(args.input).name
        else:
            graph = generate_sparse_random(args.gen_n, args.seed, args.max_weight)
            name = f"gen-{args.gen_n}-seed{args.seed}"
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DimacsFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        elapsed_ms, checksum = run_single(graph, args.algo, args.source)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"instance={name} n={graph.n} m={graph.m} algo={args.algo} "
          f"time_ms={elapsed_ms:.3f} checksum={checksum}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    if args.reps < 1:
        print("error: --reps must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    sources = []
    for path in args.inputs:
        if not Path(path).exists():
            print(f"error: input not found: {path}", file=sys.stderr)
            return EXIT_IO
        sources.append(GraphSource(kind="dimacs-file", name=Path(path).name, path=path))
    records = run_benchmark(sources, repetitions=args.reps, source_vertex=args.source)
    try:
        with open(args.csv, "w", newline="") as fh:
            emit_csv(records, fh)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    status = EXIT_OK
    for record in records:
        if record.valid:
            print(f"{record.instance}: n={record.n} m={record.m} "
                  f"dijkstra={record.time_dijkstra_ms:.3f}ms "
                  f"bmssp={record.time_bmssp_ms:.3f}ms ratio={record.ratio:.3f}")
        else:
            print(f"{record.instance}: FAILED ({record.error})", file=sys.stderr)
            if record.error and "checksum" in record.error:
                status = EXIT_CORRECTNESS
            elif status == EXIT_OK:
                status = EXIT_IO
    print(f"wrote {args.csv}")
    return status


def _cmd_ratio_curve(args) -> int:
    if not 1 <= args.n_min <= args.n_max:
        print("error: need 1 <= --n-min <= --n-max", file=sys.stderr)
        return EXIT_USAGE
    try:
        with open(args.csv, "w") as fh:
            fh.write("n,theoretical_ratio\n")
            for exp in range(args.n_min, args.n_max + 1):
                n = 1 << exp
                fh.write(f"{n},{theoretical_ratio(n):.6f}\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {args.csv}")
    return EXIT_OK


def _cmd_threshold(args) -> int:
    if args.c <= 0:
        print("error: --c must be positive", file=sys.stderr)
        return EXIT_USAGE
    query = ThresholdQuery.evaluate(args.c)
    if query.n0.bit_length() <= 64:
        exact = str(query.n0)
    else:
        exact = f"2^{args.c ** 3:g} + 1 ({str(query.n0)[:12]}... {len(str(query.n0))} digits)"
    print(f"c2/c1 = {args.c:g}")
    print(f"n0 = {exact}")
    print(f"n0 ~= 10^{query.magnitude}")
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "run": _cmd_run,
    "bench": _cmd_bench,
    "ratio-curve": _cmd_ratio_curve,
    "threshold": _cmd_threshold,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
