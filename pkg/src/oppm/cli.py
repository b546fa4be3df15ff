"""Command-line front end: ``oppm gen|match|bench|summarize``."""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path

from . import bench
from .fileio import ParseError, read_matrix, read_sequence, write_matrix, write_sequence

log = logging.getLogger("oppm")


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _str_list(text: str) -> list[str]:
    return [v for v in text.split(",") if v]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oppm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write random text/pattern files")
    g.add_argument("--dim", type=int, choices=(1, 2), default=1)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--sigma", type=int, default=1000)
    g.add_argument("--trials", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", type=Path, default=Path("."), help="output directory")

    m = sub.add_parser("match", help="find occurrences of PATTERN in TEXT")
    m.add_argument("text", type=Path)
    m.add_argument("pattern", type=Path)
    m.add_argument("--dim", type=int, choices=(1, 2), default=1)
    m.add_argument("--algo", default="duel")
    m.add_argument("--stats", action="store_true", help="print instrumentation")

    b = sub.add_parser("bench", help="run a benchmark grid and emit CSV")
    b.add_argument("--dim", type=int, choices=(1, 2), default=1)
    b.add_argument("--algo", type=_str_list, default=["duel", "kmp"])
    b.add_argument("--n", type=_int_list, default=[100_000])
    b.add_argument("--m", type=_int_list, default=[10])
    b.add_argument("--sigma", type=int, default=1000)
    b.add_argument("--trials", type=int)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--preset", choices=sorted(bench.PRESETS))
    b.add_argument("--out", type=Path, help="CSV path (default: stdout)")

    s = sub.add_parser("summarize", help="average a bench CSV per configuration")
    s.add_argument("input", type=Path)
    s.add_argument("--out", type=Path, help="CSV path (default: stdout)")
    return parser


def cmd_gen(args, parser) -> int:
    try:
        wl = bench.Workload(args.dim, args.n, args.m, args.sigma, args.trials, args.seed)
    except ValueError as exc:
        parser.error(str(exc))
    args.out.mkdir(parents=True, exist_ok=True)
    for trial in range(wl.trials):
        text, pattern = bench.generate(wl.dim, wl.n, wl.m, wl.sigma, wl.trial_seed(trial))
        write = write_sequence if wl.dim == 1 else write_matrix
        write(args.out / f"text-{trial}.txt", text)
        write(args.out / f"pattern-{trial}.txt", pattern)
    log.info("wrote %d trial(s) to %s", wl.trials, args.out)
    return 0


def cmd_match(args, parser) -> int:
    if args.algo not in bench.ALGOS[args.dim]:
        parser.error(f"--algo must be one of {', '.join(bench.ALGOS[args.dim])} for --dim {args.dim}")
    read = read_sequence if args.dim == 1 else read_matrix
    try:
        text = read(args.text)
        pattern = read(args.pattern)
    except ParseError as exc:
        print(f"oppm: parse error: {exc}", file=sys.stderr)
        return 2
    if args.dim == 1:
        if not pattern:
            parser.error("pattern is empty")
        too_big = len(pattern) > len(text)
    else:
        if not pattern.width or not pattern.height:
            parser.error("pattern is empty")
        too_big = pattern.width > text.width or pattern.height > text.height
    if too_big:
        log.warning("pattern larger than text; no occurrences")
        report = bench.MatchReport([])
    else:
        report = bench.run_match(args.algo, args.dim, text, pattern)
    out = sys.stdout
    for pos in report.positions:
        out.write(f"{pos}\n" if args.dim == 1 else f"{pos[0]} {pos[1]}\n")
    if args.stats:
        out.write(f"# algo={args.algo} dim={args.dim} occurrences={len(report.positions)}\n")
        out.write(f"# time_ns={report.time_ns} comparisons={report.comparisons}\n")
        for name, st in report.stages.items():
            fields = " ".join(f"{k}={v}" for k, v in st.items())
            out.write(f"# stage {name}: {fields}\n")
    return 0


def _open_out(path: Path | None):
    if path is None:
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="")


def cmd_bench(args, parser) -> int:
    trials = args.trials
    if args.preset:
        trials = trials or bench.PRESETS[args.preset]["trials"]
    trials = trials or 1
    try:
        points = bench.grid_points(args.n, args.m, args.preset)
        for n, m in points:
            bench.Workload(args.dim, n, m, args.sigma, trials, args.seed)
        for algo in args.algo:
            if algo not in bench.ALGOS[args.dim]:
                raise ValueError(f"algorithm {algo!r} not available for dim {args.dim}")
    except ValueError as exc:
        parser.error(str(exc))
    fh = _open_out(args.out)
    try:
        rows = bench.bench_rows(args.algo, args.dim, points, args.sigma, trials, args.seed)
        count = bench.write_csv(rows, fh)
    finally:
        if fh is not sys.stdout:
            fh.close()
    log.info("wrote %d rows", count)
    return 0


def cmd_summarize(args, parser) -> int:
    with open(args.input, encoding="utf-8", newline="") as fh:
        rows = list(csv.DictReader(fh))
    missing = set(bench.CSV_FIELDS) - set(rows[0] if rows else bench.CSV_FIELDS)
    if missing:
        parser.error(f"{args.input}: missing columns {', '.join(sorted(missing))}")
    fh = _open_out(args.out)
    try:
        bench.write_csv(bench.summarize(rows), fh, bench.SUMMARY_FIELDS)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return 0


COMMANDS = {"gen": cmd_gen, "match": cmd_match, "bench": cmd_bench, "summarize": cmd_summarize}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="oppm: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    return COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
