"""Command-line front end: design | metrics | generate | bench.

Exit codes: 0 success, 1 runtime or I/O failure, 2 usage error. The
UNIPOL_THREADS environment variable caps benchmark trial concurrency.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from unipol import bench as bench_mod
from unipol import io as io_mod
from unipol.baselines import FAMILIES, can_run, generate
from unipol.metrics import autocorrelation, isl_time, merit_factor, psl, sidelobe_db
from unipol.solver import PHASE_RANGES, SolverConfig, run

__all__ = ["main"]


class UsageError(Exception):
    """Invalid flag values; maps to exit code 2."""


def _parse_lengths(text: str) -> list[int]:
    try:
        lengths = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"bad length list {text!r}") from None
    if not lengths:
        raise UsageError("empty length list")
    return lengths


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unipol",
        description="Design and analyze unimodular sequences with low autocorrelation sidelobes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    design = sub.add_parser("design", help="run a sidelobe-minimization solver")
    design.add_argument("--algo", choices=("unipol", "can"), default="unipol")
    design.add_argument("-N", "--length", dest="n", type=int, required=True)
    design.add_argument("--iters", type=int, default=1000)
    design.add_argument("--tol", type=float, default=0.0)
    design.add_argument("--seed", type=int, default=0)
    design.add_argument("--phase-range", choices=PHASE_RANGES, default="full")
    design.add_argument(
        "--direct",
        action="store_true",
        help="use the O(N^2) per-variable path instead of the transform fast path",
    )
    design.add_argument("-o", "--output", help="run record JSON path (default: stdout)")
    design.add_argument(
        "--seq-out",
        help="final-design sequence CSV path (default: derived from --output)",
    )
    design.set_defaults(func=cmd_design)

    metrics = sub.add_parser("metrics", help="report metrics for a sequence file")
    metrics.add_argument("input", help="sequence CSV path")
    metrics.add_argument("--json", action="store_true", help="emit a JSON report")
    metrics.set_defaults(func=cmd_metrics)

    gen = sub.add_parser("generate", help="emit a classical sequence")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("-N", "--length", dest="n", type=int, required=True)
    gen.add_argument("-o", "--output", help="sequence CSV path (default: stdout)")
    gen.set_defaults(func=cmd_generate)

    bench = sub.add_parser("bench", help="run the seeded benchmark matrix")
    bench.add_argument("--algos", default="unipol", help="comma list from {unipol,can}")
    bench.add_argument(
        "--lengths",
        default=",".join(str(n) for n in bench_mod.DEFAULT_LENGTHS),
        help="comma list of sequence lengths",
    )
    bench.add_argument("--runs", type=int, default=30)
    bench.add_argument("--iters", type=int, default=1000)
    bench.add_argument("--tol", type=float, default=0.0)
    bench.add_argument("--seed", type=int, default=0, help="base seed; trial i uses seed+i")
    bench.add_argument("--direct", action="store_true")
    bench.add_argument("-o", "--output", help="CSV path (default: stdout)")
    bench.set_defaults(func=cmd_bench)

    return parser


def cmd_design(args) -> int:
    try:
        cfg = SolverConfig(
            n=args.n,
            max_iterations=args.iters,
            rel_tolerance=args.tol,
            seed=args.seed,
            phase_range=args.phase_range,
            fast_path=not args.direct,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    trace = run(cfg) if args.algo == "unipol" else can_run(cfg)
    record = io_mod.run_record_dict(args.algo, trace)

    seq_path = args.seq_out
    if seq_path is None and args.output is not None:
        seq_path = str(Path(args.output).with_suffix(".seq.csv"))

    if args.output is not None:
        io_mod.write_run_record(args.output, record)
    if seq_path is not None:
        io_mod.write_sequence_file(seq_path, trace.final_sequence)

    if args.output is None:
        json.dump(record, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(
            f"{args.algo}: N={cfg.n} iterations={trace.iterations_run} "
            f"isl {record['islTrace'][0]:.6g} -> {record['finalIsl']:.6g} "
            f"(record: {args.output})"
        )
    return 0


def cmd_metrics(args) -> int:
    seq = io_mod.read_sequence_file(args.input)
    isl = isl_time(seq)
    peak = psl(seq)
    mf = merit_factor(seq) if len(seq) >= 2 else None
    db = sidelobe_db(seq)

    if args.json:
        report = {
            "N": len(seq),
            "isl": isl,
            "psl": peak,
            "meritFactor": mf if mf is not None and math.isfinite(mf) else None,
            "sidelobeDb": [None if not math.isfinite(v) else float(v) for v in db],
        }
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 0

    print(f"N:            {len(seq)}")
    print(f"ISL:          {isl:.12g}")
    print(f"PSL:          {peak:.12g}")
    print(f"merit factor: {'undefined' if mf is None else format(mf, '.12g')}")
    print("lag  |r_k|          20log10(|r_k|/N)")
    mags = np.abs(autocorrelation(seq))
    for k, (mag, level) in enumerate(zip(mags, db)):
        print(f"{k:<4d} {mag:<14.6g} {level:.6g}")
    return 0


def cmd_generate(args) -> int:
    try:
        seq = generate(args.family, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.output is not None:
        io_mod.write_sequence_file(args.output, seq)
        print(f"{args.family}: wrote N={len(seq)} sequence to {args.output}")
    else:
        sys.stdout.write(io_mod.sequence_file_text(seq))
    return 0


def cmd_bench(args) -> int:
    algos = [tok.strip() for tok in args.algos.split(",") if tok.strip()]
    lengths = _parse_lengths(args.lengths)
    try:
        rows = bench_mod.run_bench(
            algos=algos,
            lengths=lengths,
            runs=args.runs,
            iters=args.iters,
            base_seed=args.seed,
            tol=args.tol,
            fast=not args.direct,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    csv_text = bench_mod.rows_to_csv(rows)
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
        print(f"wrote {len(rows)} rows to {args.output}")
    else:
        sys.stdout.write(csv_text)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except io_mod.SequenceFileError as exc:
        print(f"error: {args.input if hasattr(args, 'input') else ''}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
