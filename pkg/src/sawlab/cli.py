"""Command-line front end: one subcommand per quantity.

Exit codes: 0 success, 2 usage or parameter error, 3 budget truncation.
Errors are reported as a JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass, field

from . import __version__
from .bounds import (
    GOLDEN,
    estimate_lambda,
    fisher_iterate,
    fisher_mu_pull,
    fisher_mu_push,
    fisher_rate_bounds,
    girth_degree_upper,
    locality_scan,
    mu_interval,
    ratio_estimate,
    semicubic_solve,
    spectral_lower,
    cubic_girth_lower,
)
from .enum import DEFAULT_BUDGET, BudgetExceeded, SeriesCache, count_bridges, count_saws
from .graph import FAMILIES, GraphError, graph_from_spec, make_family, quotient_cylinder
from .output import render
from .reports import COLUMNS as REPORT_COLUMNS
from .reports import REPORTS, TIMED_COLUMNS, run_report
from .sampler import displacement_stats, nu_estimate, sample_uniform, speed_probe

EXIT_OK, EXIT_USAGE, EXIT_TRUNCATED = 0, 2, 3
GRAPH_COMMANDS = ("count", "bridges", "interval", "ratio", "sample", "nu", "speed")
BOUND_COLUMNS = ("graph_key", "method", "n", "lower", "upper", "rigor_lower", "rigor_upper")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    graph: dict | None = None
    n: int | None = None
    n_max: int | None = None
    count: int | None = None
    seed: int | None = None
    workers: int | None = None
    budget: int = DEFAULT_BUDGET
    format: str = "csv"
    cache: str | None = None
    extra: dict = field(default_factory=dict)


def _graph_spec(args) -> dict:
    if args.graph:
        try:
            return json.loads(args.graph)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--graph is not valid JSON: {exc}") from None
    if not args.family:
        raise UsageError("a graph is required: --family NAME or --graph JSON")
    if args.family == "cylinder":
        return quotient_cylinder(args.m if args.m is not None else 3).spec
    params = {}
    if args.family == "hypercubic":
        params["dim"] = args.dim if args.dim is not None else 2
    if args.family in ("tree", "bridge", "free-product") and args.delta is not None:
        params["delta"] = args.delta
    if args.family == "free-product" and args.g is not None:
        params["g"] = args.g
    return make_family(args.family, **params).spec


def _add_graph(p):
    p.add_argument("--family", choices=FAMILIES + ("cylinder",))
    p.add_argument("--dim", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--m", type=int, help="cylinder circumference")
    p.add_argument("--graph", help="full graph spec as JSON, e.g. for Fisher transforms")


def _add_run(p, sampling=False):
    p.add_argument("--workers", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node-visit cap")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--cache", help="cache file or directory (default: $SAWLAB_CACHE_DIR)")
    p.add_argument("--no-cache", action="store_true")
    if sampling:
        p.add_argument("--count", type=int, default=1000)
        p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sawlab", description=__doc__, allow_abbrev=False)
    parser.add_argument("--version", action="version", version=f"sawlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("families", help="list the graph zoo", allow_abbrev=False)
    _add_run(p)

    for name, help_ in (("count", "SAW counts sigma_0..sigma_n"), ("bridges", "bridge counts b_0..b_n")):
        p = sub.add_parser(name, help=help_, allow_abbrev=False)
        _add_graph(p)
        p.add_argument("--n", type=int, required=True)
        _add_run(p)

    p = sub.add_parser("interval", help="b_n^(1/n) <= mu <= sigma_n^(1/n)", allow_abbrev=False)
    _add_graph(p)
    p.add_argument("--n", type=int, required=True)
    _add_run(p)

    p = sub.add_parser("ratio", help="(sigma_{n+step}/sigma_n)^(1/step)", allow_abbrev=False)
    _add_graph(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--step", type=int, choices=(1, 2), default=1)
    _add_run(p)

    p = sub.add_parser("fisher", help="Fisher-transformation recursions", allow_abbrev=False)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pull", type=float)
    group.add_argument("--push", type=float)
    group.add_argument("--iterate", type=float, metavar="MU0")
    group.add_argument("--semicubic", type=float, metavar="MU")
    p.add_argument("--k", type=int, default=10)
    _add_run(p)

    p = sub.add_parser("girthbound", help="degree/girth upper bound", allow_abbrev=False)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    _add_run(p)

    p = sub.add_parser("cubiclower", help="cubic girth-3/4 lower bounds", allow_abbrev=False)
    p.add_argument("--g", type=int, required=True)
    _add_run(p)

    p = sub.add_parser("spectral", help="spectral lower bound", allow_abbrev=False)
    p.add_argument("--delta", type=int)
    p.add_argument("--lam", type=float, help="spectral bottom; estimated from the graph if omitted")
    p.add_argument("--family", choices=FAMILIES + ("cylinder",))
    p.add_argument("--dim", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--graph")
    p.add_argument("--n", type=int, default=12, help="return-probability depth for the estimate")
    _add_run(p)

    p = sub.add_parser("locality", help="cylinder ratio estimates against Z^2", allow_abbrev=False)
    p.add_argument("--ms", type=int, nargs="+", default=list(range(3, 9)))
    p.add_argument("--n", type=int, default=14)
    p.add_argument("--step", type=int, choices=(1, 2), default=2)
    _add_run(p)

    p = sub.add_parser("sample", help="exactly uniform SAWs", allow_abbrev=False)
    _add_graph(p)
    p.add_argument("--n", type=int, required=True)
    _add_run(p, sampling=True)

    p = sub.add_parser("nu", help="mean-square displacement table and nu estimate", allow_abbrev=False)
    _add_graph(p)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--exact", action="store_true")
    _add_run(p, sampling=True)

    p = sub.add_parser("speed", help="P(|pi_n| <= c n) probe", allow_abbrev=False)
    _add_graph(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, default=0.1)
    _add_run(p, sampling=True)

    p = sub.add_parser("report", help="run a named acceptance experiment", allow_abbrev=False)
    p.add_argument("name", choices=sorted(REPORTS))
    p.add_argument("--timing", action="store_true", help="include machine-dependent runtime checks")
    _add_run(p)
    return parser


def _config(args) -> RunConfig:
    skip = {"command", "workers", "budget", "format", "cache", "no_cache", "count", "seed",
            "family", "dim", "delta", "g", "m", "graph"}
    extra = {k: v for k, v in vars(args).items() if k not in skip and v is not None}
    graph = None
    if args.command in GRAPH_COMMANDS or getattr(args, "family", None) or getattr(args, "graph", None):
        graph = _graph_spec(args)
    n = extra.pop("n", None)
    cfg = RunConfig(
        command=args.command,
        graph=graph,
        n=n if isinstance(n, int) else None,
        n_max=max(n) if isinstance(n, list) else n,
        count=getattr(args, "count", None),
        seed=getattr(args, "seed", None),
        workers=args.workers,
        budget=args.budget,
        format=args.format,
        cache=None,
        extra=extra,
    )
    if isinstance(n, list):
        cfg.extra["n_list"] = n
    if args.command not in ("families", "fisher", "girthbound", "cubiclower") and not args.no_cache:
        cfg.cache = str(SeriesCache(args.cache).path)
    return cfg


def _series_rows(series, column):
    return [{"n": n, column: v} for n, v in enumerate(series.values)]


def _bound_row(key, method, n, lower, upper, rl, ru):
    return dict(zip(BOUND_COLUMNS, (key, method, n, lower, upper, rl, ru)))


def _dispatch(args, cfg):
    """Returns (columns, rows, extra, truncated)."""
    opts = {"workers": cfg.workers, "budget": cfg.budget}
    if cfg.cache:
        opts["cache"] = SeriesCache(cfg.cache)
    G = graph_from_spec(cfg.graph) if cfg.graph else None
    cmd = args.command
    if cmd == "families":
        rows = []
        for name in FAMILIES + ("cylinder",):
            H = quotient_cylinder(3) if name == "cylinder" else make_family(name)
            rows.append({"family": name, "graph_key": H.key, "degree": H.degree, "simple": H.simple,
                         "transitive_class": H.transitive_class, "girth": H.girth,
                         "height": H.height.rigor if H.height else None})
        return ("family", "graph_key", "degree", "simple", "transitive_class", "girth", "height"), rows, {}, False
    if cmd in ("count", "bridges"):
        fn = count_saws if cmd == "count" else count_bridges
        series = fn(G, args.n, **opts)
        col = "sigma" if cmd == "count" else "b"
        return ("n", col), _series_rows(series, col), {}, series.truncated
    if cmd == "interval":
        iv = mu_interval(G, args.n, **opts)
        row = _bound_row(G.key, "sandwich", args.n, iv.lower, iv.upper, iv.lower_rigor, iv.upper_rigor)
        return BOUND_COLUMNS, [row], {}, False
    if cmd == "ratio":
        est = ratio_estimate(G, args.n, args.step, **opts)
        row = _bound_row(G.key, f"ratio-step{args.step}", args.n, est, est, "heuristic", "heuristic")
        return BOUND_COLUMNS, [row], {}, False
    if cmd == "fisher":
        if args.iterate is not None:
            seq = fisher_iterate(args.iterate, args.k)
            rows = []
            for k, mu in enumerate(seq):
                lo, hi = fisher_rate_bounds(k) if k else (None, None)
                dev = 1 / mu - 1 / GOLDEN
                rows.append({"k": k, "mu": mu, "inv_deviation": dev, "window_low": lo, "window_high": hi,
                             "within": None if k == 0 else lo <= dev <= hi})
            return ("k", "mu", "inv_deviation", "window_low", "window_high", "within"), rows, {}, False
        for op, fn in (("pull", fisher_mu_pull), ("push", fisher_mu_push), ("semicubic", semicubic_solve)):
            value = getattr(args, op)
            if value is not None:
                return ("operation", "input", "value"), [{"operation": op, "input": value, "value": fn(value)}], {}, False
    if cmd == "girthbound":
        y = girth_degree_upper(args.delta, args.g)
        return ("delta", "g", "upper"), [{"delta": args.delta, "g": args.g, "upper": y}], {}, False
    if cmd == "cubiclower":
        return ("g", "lower"), [{"g": args.g, "lower": cubic_girth_lower(args.g)}], {}, False
    if cmd == "spectral":
        lam, lam_source = args.lam, "given"
        delta = args.delta
        if lam is None:
            if G is None:
                raise UsageError("spectral needs --lam or a graph to estimate it from")
            lam, lam_source = estimate_lambda(G, args.n), f"estimated n={args.n}"
        if delta is None:
            if G is None:
                raise UsageError("spectral needs --delta or a graph")
            delta = G.degree
        value = spectral_lower(delta, lam)
        # an estimated lambda overshoots, so the bound built on it is not certified
        rigor = "certified" if lam_source == "given" else "heuristic"
        return ("delta", "lambda", "lambda_source", "lower", "rigor"), [
            {"delta": delta, "lambda": lam, "lambda_source": lam_source, "lower": value, "rigor": rigor}], {}, False
    if cmd == "locality":
        rows = [{"m": r.m if r.m is not None else "inf", "mu_hat": r.mu_hat, "gap": r.gap}
                for r in locality_scan(args.ms, args.n, args.step, **opts)]
        return ("m", "mu_hat", "gap"), rows, {}, False
    sample_opts = {"budget": cfg.budget}
    if cmd == "sample":
        rows = [{"index": i, "displacement": s.displacement, "vertices": json.dumps([list(v) for v in s.vertices])}
                for i, s in enumerate(sample_uniform(G, args.n, args.count, args.seed, **sample_opts))]
        return ("index", "displacement", "vertices"), rows, {"seed": args.seed}, False
    if cmd == "nu":
        table = displacement_stats(G, args.n, args.count, args.seed, exact=args.exact, **sample_opts)
        rows = [{"n": r.n, "mean_sq_displacement": r.mean_sq_displacement, "stderr": r.stderr,
                 "count": r.count, "seed": r.seed} for r in table]
        extra = {}
        if len(table) >= 4:
            extra["nu_estimate"] = nu_estimate(table)
        return ("n", "mean_sq_displacement", "stderr", "count", "seed"), rows, extra, False
    if cmd == "speed":
        probe = speed_probe(G, args.n, args.c, args.count, args.seed, **sample_opts)
        row = {"n": args.n, "c": args.c, "frequency": probe.frequency, "half_width": probe.half_width,
               "count": probe.count, "seed": args.seed}
        return ("n", "c", "frequency", "half_width", "count", "seed"), [row], {}, False
    if cmd == "report":
        rows = run_report(args.name, timing=args.timing, **opts)
        columns = TIMED_COLUMNS if args.timing else REPORT_COLUMNS
        passed = all(r["passed"] for r in rows)
        return columns, rows, {"all_passed": passed}, False
    raise UsageError(f"unknown command {cmd}")  # pragma: no cover


def _error(kind, message, stream):
    stream.write(json.dumps({"error": kind, "message": message}) + "\n")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config(args)
        columns, rows, extra, truncated = _dispatch(args, cfg)
    except UsageError as exc:
        _error("usage", str(exc), stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        _error("budget", str(exc), stderr)
        return EXIT_TRUNCATED
    except (GraphError, ValueError, ArithmeticError) as exc:
        _error(type(exc).__name__, str(exc), stderr)
        return EXIT_USAGE
    text = render(columns, rows, fmt_name=cfg.format, config=asdict(cfg), version=__version__, extra=extra)
    stdout.write(text)
    if truncated:
        _error("budget", "node-visit budget reached; series truncated", stderr)
        return EXIT_TRUNCATED
    return EXIT_OK


def console_main():  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    console_main()
