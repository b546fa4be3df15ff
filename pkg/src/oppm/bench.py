"""Workload generation, instrumented runs and benchmark grids."""

from __future__ import annotations

import csv
import statistics
import time
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from .core import Counter
from .match1d import Pattern1D, dueling_stage, kmp_match_1d, naive_match_1d, sweeping_stage
from .match2d import (
    Matrix,
    Pattern2D,
    dueling_stage_2d,
    match_2d_reduction,
    naive_match_2d,
    sweeping_stage_2d,
)

ALGOS = {1: ("duel", "kmp", "naive"), 2: ("duel", "reduction2d", "kmp", "naive")}

CSV_FIELDS = ("algo", "dim", "n", "m", "sigma", "trial", "seed", "time_ns", "comparisons")
SUMMARY_FIELDS = ("algo", "dim", "n", "m", "sigma", "trials", "mean_time_ns", "mean_comparisons")

# (fixed m, varying n) and (fixed n, varying m) experiments
PRESETS = {
    "paper": {
        "trials": 50,
        "vary_n": (10, tuple(range(100_000, 1_000_001, 100_000))),
        "vary_m": (1_000_000, (5, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100)),
    },
    "paper-small": {
        "trials": 10,
        "vary_n": (10, tuple(range(10_000, 100_001, 10_000))),
        "vary_m": (100_000, (5, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100)),
    },
}


@dataclass
class Workload:
    dim: int
    n: int
    m: int
    sigma: int = 1000
    trials: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError("dim must be 1 or 2")
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be positive")
        if self.m > self.n:
            raise ValueError(f"pattern size {self.m} exceeds text size {self.n}")
        if self.sigma < 1:
            raise ValueError("sigma must be positive")
        if self.trials < 1:
            raise ValueError("trials must be positive")

    def trial_seed(self, trial: int) -> int:
        return self.seed + trial


def generate(dim: int, n: int, m: int, sigma: int, seed: int):
    """Random text and pattern with characters uniform on ``[1, sigma]``.

    1D returns two lists; 2D returns an ``n x n`` and an ``m x m`` Matrix.
    """
    rng = np.random.default_rng(seed)
    if dim == 1:
        text = rng.integers(1, sigma + 1, size=n).tolist()
        pattern = rng.integers(1, sigma + 1, size=m).tolist()
        return text, pattern
    text = rng.integers(1, sigma + 1, size=n * n).tolist()
    pattern = rng.integers(1, sigma + 1, size=m * m).tolist()
    return Matrix(n, n, tuple(text)), Matrix(m, m, tuple(pattern))


@dataclass
class MatchReport:
    positions: list
    time_ns: int = 0
    comparisons: int = 0
    stages: dict[str, dict[str, int]] = field(default_factory=dict)


class _Stages:
    def __init__(self):
        self.stages: dict[str, dict[str, int]] = {}

    def run(self, name, fn, *args):
        counter = Counter()
        start = time.perf_counter_ns()
        result = fn(*args, counter)
        elapsed = time.perf_counter_ns() - start
        self.stages[name] = {
            "time_ns": elapsed,
            "comparisons": counter.comparisons,
            "verify_calls": counter.verify_calls,
            "duels": counter.duels,
        }
        return result


def _timed(fn, *args):
    start = time.perf_counter_ns()
    result = fn(*args)
    return result, {"time_ns": time.perf_counter_ns() - start}


def run_match(algo: str, dim: int, text, pattern) -> MatchReport:
    """Run one algorithm with per-stage instrumentation.

    Pattern preprocessing is timed but performs no text comparisons.
    """
    if algo not in ALGOS.get(dim, ()):
        raise ValueError(f"algorithm {algo!r} not available for dim {dim}")
    st = _Stages()
    start = time.perf_counter_ns()
    if dim == 1 and algo == "duel":
        pat, st.stages["preprocess"] = _timed(Pattern1D.build, pattern)
        if len(pat) > len(text):
            positions = []
        else:
            survivors = st.run("dueling", dueling_stage, text, pat)
            positions = st.run("sweeping", sweeping_stage, text, pat, survivors)
    elif dim == 1 and algo == "kmp":
        positions = st.run("scan", kmp_match_1d, text, pattern)
    elif dim == 1:
        positions = st.run("scan", naive_match_1d, text, pattern)
    elif algo == "duel":
        pat, st.stages["preprocess"] = _timed(Pattern2D.build, pattern)
        survivors = st.run("dueling", dueling_stage_2d, text, pat)
        positions = st.run("sweeping", sweeping_stage_2d, text, pat, survivors)
    elif algo == "reduction2d":
        positions = st.run("scan", match_2d_reduction, text, pattern)
    elif algo == "kmp":
        positions = st.run(
            "scan", lambda t, p, c: match_2d_reduction(t, p, c, engine="kmp"), text, pattern
        )
    else:
        positions = st.run("scan", naive_match_2d, text, pattern)
    elapsed = time.perf_counter_ns() - start
    comparisons = sum(s.get("comparisons", 0) for s in st.stages.values())
    return MatchReport(list(positions), elapsed, comparisons, st.stages)


def grid_points(ns: Iterable[int], ms: Iterable[int], preset: str | None = None):
    """``(n, m)`` pairs, in order, for explicit lists or a named preset."""
    if preset is None:
        return [(n, m) for n, m in product(ns, ms)]
    grid = PRESETS[preset]
    m0, ns0 = grid["vary_n"]
    n0, ms0 = grid["vary_m"]
    points = [(n, m0) for n in ns0] + [(n0, m) for m in ms0]
    return sorted(set(points))


def bench_rows(
    algos: Iterable[str],
    dim: int,
    points: Iterable[tuple[int, int]],
    sigma: int,
    trials: int,
    seed: int,
) -> Iterator[dict]:
    """One row per (algo, n, m, trial), ordered that way.

    All algorithms see the same generated text and pattern for a given
    ``(n, m, trial)``.
    """
    algos = list(algos)
    for algo in algos:
        if algo not in ALGOS[dim]:
            raise ValueError(f"algorithm {algo!r} not available for dim {dim}")
    points = sorted(points)
    for algo in algos:
        for n, m in points:
            wl = Workload(dim, n, m, sigma, trials, seed)
            for trial in range(trials):
                sub = wl.trial_seed(trial)
                text, pattern = generate(dim, n, m, sigma, sub)
                report = run_match(algo, dim, text, pattern)
                yield {
                    "algo": algo,
                    "dim": dim,
                    "n": n,
                    "m": m,
                    "sigma": sigma,
                    "trial": trial,
                    "seed": sub,
                    "time_ns": report.time_ns,
                    "comparisons": report.comparisons,
                }


def write_csv(rows: Iterable[dict], fh, fields=CSV_FIELDS) -> int:
    writer = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    count = 0
    for row in rows:
        writer.writerow(row)
        count += 1
    return count


def summarize(rows: Iterable[dict]) -> list[dict]:
    """Mean time and comparisons per (algo, dim, n, m, sigma)."""
    groups: dict[tuple, list[dict]] = defaultdict(list)
    for row in rows:
        key = (row["algo"], int(row["dim"]), int(row["n"]), int(row["m"]), int(row["sigma"]))
        groups[key].append(row)
    out = []
    for key in sorted(groups):
        rs = groups[key]
        out.append(
            dict(
                zip(SUMMARY_FIELDS[:5], key),
                trials=len(rs),
                mean_time_ns=statistics.fmean(int(r["time_ns"]) for r in rs),
                mean_comparisons=statistics.fmean(int(r["comparisons"]) for r in rs),
            )
        )
    return out
