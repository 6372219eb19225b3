"""Experiment harness: discrete hulls of disks with random centers.

Each trial draws a disk center uniformly from the unit square (rationals on
a 2**-20 grid, so every predicate stays exact), computes the hull with the
convergent search and optionally with the naive column scan, and records
sizes, iteration counts and timings.
"""

import csv
import logging
import math
import random
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .baseline import naive_hull
from .hull import discrete_hull
from .oracle import DiskBody

log = logging.getLogger(__name__)

CENTER_DENOMINATOR = 2 ** 20
CSV_COLUMNS = ("radius", "trial", "vertices", "boundary", "max_iter",
               "oracle_calls", "t_dch_s", "t_naive_s")


@dataclass
class TrialStats:
    radius: int
    trial: int
    vertex_count: int
    boundary_count: int
    max_iterations_per_edge: int
    oracle_calls: int
    wall_time_dch: float
    wall_time_naive: float = None
    center: tuple = None

    def row(self):
        return (self.radius, self.trial, self.vertex_count, self.boundary_count,
                self.max_iterations_per_edge, self.oracle_calls,
                f"{self.wall_time_dch:.6f}",
                "" if self.wall_time_naive is None else f"{self.wall_time_naive:.6f}")


@dataclass
class AggregateRow:
    radius: int
    trials: int
    vertices_min: int
    vertices_max: int
    vertices_avg: float
    vertex_ratio_min: float
    vertex_ratio_max: float
    vertex_ratio_avg: float
    boundary_min: int
    boundary_max: int
    boundary_avg: float
    boundary_ratio_min: float
    boundary_ratio_max: float
    boundary_ratio_avg: float
    max_iterations: int
    oracle_calls_avg: float
    t_dch_mean: float
    t_naive_mean: float = None


def disk_seed(center):
    """Lattice point nearest to the center."""
    return (math.floor(center[0] + Fraction(1, 2)),
            math.floor(center[1] + Fraction(1, 2)))


def random_centers(rng, count):
    den = CENTER_DENOMINATOR
    return [(Fraction(rng.randrange(den), den), Fraction(rng.randrange(den), den))
            for _ in range(count)]


def _timed(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return out, statistics.median(times)


def run_trial(radius, trial, center, with_naive=False, repeats=None):
    if repeats is None:
        repeats = 3 if radius >= 10 ** 5 else 1
    body = DiskBody(center, radius * radius)
    seed = disk_seed(center)
    body.reset_counters()
    hull, t_dch = _timed(lambda: discrete_hull(body, seed), repeats)
    t_naive = None
    if with_naive:
        ref, t_naive = _timed(lambda: naive_hull(body), repeats)
        if ref.vertices != hull.vertices:
            raise AssertionError(f"hull mismatch for {body!r}")
    return TrialStats(radius, trial, hull.vertex_count, hull.boundary_count,
                      hull.max_iterations, hull.oracle_calls, t_dch, t_naive,
                      center)


def run_trials(radii, trials_per_radius, seed=42, with_naive=False, repeats=None):
    """Trials for every radius; deterministic for a fixed seed.

    Each radius gets its own generator derived from (seed, radius), so a
    radius produces the same centers whatever else is in the batch.
    """
    out = []
    for r in radii:
        if r < 2:
            raise ValueError("radii must be >= 2")
        rng = random.Random(f"{seed}:{r}")
        for t, c in enumerate(random_centers(rng, trials_per_radius)):
            out.append(run_trial(r, t, c, with_naive, repeats))
        log.info("radius %d: %d trials done", r, trials_per_radius)
    return out


def aggregate(stats):
    by_radius = {}
    for s in stats:
        by_radius.setdefault(s.radius, []).append(s)
    rows = []
    for r in sorted(by_radius):
        batch = by_radius[r]
        scale = r ** (2 / 3)
        v = [s.vertex_count for s in batch]
        b = [s.boundary_count for s in batch]
        naive = [s.wall_time_naive for s in batch if s.wall_time_naive is not None]
        rows.append(AggregateRow(
            radius=r, trials=len(batch),
            vertices_min=min(v), vertices_max=max(v),
            vertices_avg=round(statistics.fmean(v), 3),
            vertex_ratio_min=round(min(v) / scale, 3),
            vertex_ratio_max=round(max(v) / scale, 3),
            vertex_ratio_avg=round(statistics.fmean(v) / scale, 3),
            boundary_min=min(b), boundary_max=max(b),
            boundary_avg=round(statistics.fmean(b), 3),
            boundary_ratio_min=round(min(b) / scale, 3),
            boundary_ratio_max=round(max(b) / scale, 3),
            boundary_ratio_avg=round(statistics.fmean(b) / scale, 3),
            max_iterations=max(s.max_iterations_per_edge for s in batch),
            oracle_calls_avg=round(statistics.fmean(s.oracle_calls for s in batch), 3),
            t_dch_mean=statistics.fmean(s.wall_time_dch for s in batch),
            t_naive_mean=statistics.fmean(naive) if naive else None,
        ))
    return rows


def write_csv(stats, path_or_file):
    def _write(f):
        w = csv.writer(f, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for s in stats:
            w.writerow(s.row())

    if hasattr(path_or_file, "write"):
        _write(path_or_file)
    else:
        with open(path_or_file, "w", newline="") as f:
            _write(f)


def read_csv(path):
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


# -- verification ------------------------------------------------------------

@dataclass
class Mismatch:
    radius: object
    center: tuple
    radius_sq: Fraction
    dch_vertices: list
    naive_vertices: list

    def describe(self):
        return (f"DiskBody(center=({self.center[0]}, {self.center[1]}), "
                f"radius_sq={self.radius_sq}): dch {len(self.dch_vertices)} vertices, "
                f"naive {len(self.naive_vertices)}; first difference at "
                f"{_first_diff(self.dch_vertices, self.naive_vertices)}")


def _first_diff(a, b):
    for i, (p, q) in enumerate(zip(a, b)):
        if p != q:
            return f"index {i}: {tuple(p)} vs {tuple(q)}"
    return f"index {min(len(a), len(b))} (length differs)"


@dataclass
class VerifyReport:
    cases: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

    def summary(self):
        if self.ok:
            return f"all equal ({self.cases} cases)"
        return (f"{len(self.mismatches)} mismatches in {self.cases} cases; first: "
                + self.mismatches[0].describe())


def adversarial_disks(radius):
    """Disks whose boundary passes through lattice points or whose center
    sits on a lattice point or half-integer position."""
    half = Fraction(1, 2)
    centers = [(0, 0), (half, half), (half, 0), (0, half), (Fraction(1, 3), 0)]
    r2s = [radius * radius, radius * radius + 1, radius * radius + radius]
    for c in centers:
        for r2 in r2s:
            yield (Fraction(c[0]), Fraction(c[1])), Fraction(r2)


def verify_disk(report, radius, center, r2):
    body = DiskBody(center, r2)
    ref = naive_hull(body)
    hull = discrete_hull(body, disk_seed(center))
    report.cases += 1
    if hull.vertices != ref.vertices:
        report.mismatches.append(
            Mismatch(radius, center, r2, hull.vertices, ref.vertices))


def verify(radii, trials, seed=42, adversarial=True):
    report = VerifyReport()
    for r in radii:
        rng = random.Random(f"{seed}:{r}")
        for c in random_centers(rng, trials):
            verify_disk(report, r, c, Fraction(r * r))
        if adversarial:
            for c, r2 in adversarial_disks(r):
                verify_disk(report, r, c, r2)
    return report


def parse_radii(text):
    """``"10,100,1000"`` or ``"2..2000[:n]"`` (n log-spaced integers, default 12)."""
    text = text.strip()
    if ".." in text:
        span, _, count = text.partition(":")
        lo, hi = (int(v) for v in span.split(".."))
        n = int(count) if count else 12
        if lo < 1 or hi < lo or n < 1:
            raise ValueError(f"bad radius range: {text!r}")
        if n == 1:
            return [lo]
        vals = [round(lo * (hi / lo) ** (i / (n - 1))) for i in range(n)]
        out = []
        for v in vals:
            if not out or v > out[-1]:
                out.append(v)
        return out
    return [int(v) for v in text.split(",") if v.strip()]
