"""Command line interface: ``dhull {convergents,hull,bench,verify}``."""

import argparse
import json
import logging
import os
import sys
import time

from . import bench
from .baseline import naive_hull
from .cfrac import convergents, geom_gcd
from .hull import discrete_hull, discrete_hull_from, find_hull_vertex_general
from .oracle import DiskBody, parse_shape

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load_shape(text):
    if os.path.exists(text):
        with open(text) as f:
            text = f.read()
    try:
        return parse_shape(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"invalid shape: {exc}") from exc


def _interior_point(body):
    if isinstance(body, DiskBody):
        return body.center
    vs = body.vertices
    n = len(vs)
    return (sum(v[0] for v in vs) / n, sum(v[1] for v in vs) / n)


def compute_hull(body, algorithm="dch", seed=None):
    if algorithm == "naive":
        return naive_hull(body)
    if seed is not None:
        return discrete_hull(body, seed)
    v0 = find_hull_vertex_general(body, _interior_point(body))
    if v0 is None:
        raise ValueError("no lattice points")
    return discrete_hull_from(body, v0).normalized()


def cmd_convergents(args):
    fn = geom_gcd if args.geometric else convergents
    try:
        t0 = time.perf_counter()
        out = fn(args.rational)
        elapsed = time.perf_counter() - t0
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for c in out:
        print(c.index, c.quotient, c.point.x, c.point.y)
    logging.getLogger(__name__).debug("convergents took %.6f s", elapsed)
    return EXIT_OK


def cmd_hull(args):
    body = _load_shape(args.shape)
    seed = None
    if args.seed:
        try:
            seed = tuple(int(v) for v in args.seed.split(","))
        except ValueError as exc:
            raise UsageError(f"bad seed: {args.seed!r}") from exc
    try:
        chain = compute_hull(body, args.algorithm, seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    summary = {
        "vertex_count": chain.vertex_count,
        "boundary_count": chain.boundary_count,
        "oracle_calls": chain.oracle_calls,
        "max_iterations": chain.max_iterations,
    }
    if args.format == "json":
        doc = {"vertices": [list(v) for v in chain.vertices],
               "edge_weights": chain.edge_weights, **summary}
        print(json.dumps(doc))
    else:
        print("index,x,y,edge_weight")
        for i, v in enumerate(chain.vertices):
            w = chain.edge_weights[i] if i < len(chain.edge_weights) else ""
            print(f"{i},{v.x},{v.y},{w}")
        for k, v in summary.items():
            print(f"# {k}={v}")
    if args.plot:
        from .plotting import plot_hull
        plot_hull(chain, args.plot, body)
    return EXIT_OK


def _radii(text):
    try:
        radii = bench.parse_radii(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not radii or min(radii) < 2:
        raise UsageError("radii must be integers >= 2")
    return radii


def cmd_bench(args):
    radii = _radii(args.radii)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    stats = bench.run_trials(radii, args.trials, args.seed, args.naive)
    if args.out:
        bench.write_csv(stats, args.out)
    else:
        bench.write_csv(stats, sys.stdout)
    rows = bench.aggregate(stats)
    out = sys.stderr if not args.out else sys.stdout
    print("radius  trials  vmin  vmax  vavg  v/r^2/3  bavg  b/r^2/3  max_iter  t_dch  t_naive",
          file=out)
    for r in rows:
        tn = "-" if r.t_naive_mean is None else f"{r.t_naive_mean:.4f}"
        print(f"{r.radius:>6} {r.trials:>7} {r.vertices_min:>5} {r.vertices_max:>5} "
              f"{r.vertices_avg:>5.0f} {r.vertex_ratio_avg:>8.3f} {r.boundary_avg:>5.0f} "
              f"{r.boundary_ratio_avg:>8.3f} {r.max_iterations:>9} {r.t_dch_mean:.4f} {tn}",
              file=out)
    if args.figures:
        from .plotting import bench_figures
        for path in bench_figures(rows, args.figures):
            print(f"wrote {path}", file=out)
    return EXIT_OK


def cmd_verify(args):
    radii = _radii(args.radii)
    report = bench.verify(radii, args.trials, args.seed, adversarial=not args.no_adversarial)
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="dhull", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("convergents", help="print 'i q_i b_i a_i' per convergent of a/b")
    c.add_argument("rational", help="positive reduced rational a/b")
    c.add_argument("--geometric", action="store_true",
                   help="compute by ray shooting against the line y = (a/b) x")
    c.set_defaults(func=cmd_convergents)

    h = sub.add_parser("hull", help="discrete hull of a shape")
    h.add_argument("--shape", required=True, help="JSON file or inline JSON")
    h.add_argument("--format", choices=("json", "csv"), default="json")
    h.add_argument("--algorithm", choices=("dch", "naive"), default="dch")
    h.add_argument("--seed", help="lattice point 'x,y' inside the shape")
    h.add_argument("--plot", help="write a PNG of the hull to this path")
    h.set_defaults(func=cmd_hull)

    b = sub.add_parser("bench", help="random-center disk experiments")
    b.add_argument("--radii", required=True, help="'10,100,1000' or '2..2000:12'")
    b.add_argument("--trials", type=int, default=100)
    b.add_argument("--seed", type=int, default=42)
    b.add_argument("--naive", action="store_true", help="also time the naive scan")
    b.add_argument("--out", help="CSV output path (default: stdout)")
    b.add_argument("--figures", help="directory for PNG figures")
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("verify", help="compare against the naive scan")
    v.add_argument("--radii", required=True)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--no-adversarial", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
