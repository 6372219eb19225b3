"""Figures for hulls and benchmark batches (PNG via the Agg backend)."""

import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

GOLDEN = (math.sqrt(5) - 1) / 2


def _figure(width=6.0):
    return plt.subplots(figsize=(width, width * GOLDEN))


def plot_hull(chain, path, body=None, title=None):
    """Hull polygon, its boundary lattice points and (for disks) the circle."""
    fig, ax = plt.subplots(figsize=(6, 6))
    vs = list(chain.vertices)
    if body is not None and hasattr(body, "radius_sq"):
        cx, cy = (float(c) for c in body.center)
        ax.add_patch(plt.Circle((cx, cy), body.radius, fill=False, lw=0.8,
                                color="0.5"))
    if len(vs) > 1:
        xs = [p[0] for p in vs] + [vs[0][0]]
        ys = [p[1] for p in vs] + [vs[0][1]]
        ax.plot(xs, ys, "-", lw=1.0, color="C0")
    ax.plot([p[0] for p in vs], [p[1] for p in vs], "o", ms=3, color="C3")
    ax.set_aspect("equal")
    ax.set_title(title or f"{len(vs)} vertices, {chain.boundary_count} boundary points")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_ratios(rows, path):
    """Vertex and boundary counts over r^(2/3), min/avg/max per radius."""
    fig, ax = _figure()
    r = [row.radius for row in rows]
    for label, lo, avg, hi, color in (
            ("vertices", "vertex_ratio_min", "vertex_ratio_avg", "vertex_ratio_max", "C0"),
            ("boundary points", "boundary_ratio_min", "boundary_ratio_avg",
             "boundary_ratio_max", "C1")):
        ax.fill_between(r, [getattr(x, lo) for x in rows], [getattr(x, hi) for x in rows],
                        color=color, alpha=0.2, lw=0)
        ax.plot(r, [getattr(x, avg) for x in rows], "o-", color=color, label=label)
    ax.set_xscale("log")
    ax.set_xlabel("radius r")
    ax.set_ylabel("count / r^(2/3)")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_timings(rows, path):
    fig, ax = _figure()
    r = [row.radius for row in rows]
    ax.plot(r, [row.t_dch_mean for row in rows], "o-", label="convergent search")
    naive = [(row.radius, row.t_naive_mean) for row in rows if row.t_naive_mean]
    if naive:
        ax.plot(*zip(*naive), "s--", label="naive column scan")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("radius r")
    ax.set_ylabel("mean wall time [s]")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def bench_figures(rows, directory):
    os.makedirs(directory, exist_ok=True)
    return [plot_ratios(rows, os.path.join(directory, "hull_size_ratios.png")),
            plot_timings(rows, os.path.join(directory, "timings.png"))]
