"""Exact big-integer counts of SAWs, bridges and extendable walks."""

from __future__ import annotations

import math
from typing import Sequence

from ..graph.core import GraphError, RootedGraph, VertexId
from . import engine
from .cache import SeriesCache
from .compiled import BallTooLarge, compiled_ball
from .engine import BudgetExceeded
from .series import BRIDGE, EXTENDABLE, SAW, CountSeries

DEFAULT_BUDGET = 5 * 10**9
DEFAULT_PREFIX_DEPTH = 4
METHODS = ("auto", "backtrack", "memo")

# Total node visits across every engine call in this process; lets callers
# (and tests) check that a cached run did no enumeration.
stats = {"nodes": 0, "calls": 0}


def _resolve_method(G: RootedGraph, method: str, kind: str) -> str:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "auto":
        return "memo" if (G.strip and kind == SAW) else "backtrack"
    if method == "memo" and kind != SAW:
        raise ValueError("the memoized counter handles plain SAW counts only")
    return method


def _ball(G, radius, budget):
    try:
        return compiled_ball(G, radius, max_vertices=budget)
    except BallTooLarge as exc:
        raise BudgetExceeded(str(exc)) from exc


def _run_counts(G, n, kind, method, workers, budget, prefix_depth, compiled):
    ball = _ball(G, n, budget)
    if method == "memo":
        values, nodes = engine.memo_counts(ball, [0], n, budget=budget)
    else:
        values, nodes = engine.backtrack_counts(
            ball, [0], n, kind, workers=workers, prefix_depth=prefix_depth,
            budget=budget, compiled=compiled,
        )
    stats["nodes"] += nodes
    stats["calls"] += 1
    return values


def _series(G, n_max, kind, *, workers, budget, prefix_depth, method, cache, compiled, rigor=None):
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    method = _resolve_method(G, method, kind)
    workers = engine.max_workers() if workers is None else max(1, int(workers))
    if cache is not None:
        hit = cache.lookup(G.key, kind, {}, n_max)
        if hit is not None:
            return CountSeries(kind, tuple(hit), G.key, {}, False, n_max, rigor)
    n = n_max
    while n >= 0:
        try:
            values = _run_counts(G, n, kind, method, workers, budget, prefix_depth, compiled)
        except BudgetExceeded:
            n -= 1
            continue
        if cache is not None:
            cache.store(G.key, kind, {}, dict(enumerate(values)))
        return CountSeries(kind, tuple(values), G.key, {}, n < n_max, n_max, rigor)
    return CountSeries(kind, (), G.key, {}, True, n_max, rigor)


def count_saws(
    G: RootedGraph,
    n_max: int,
    *,
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
    prefix_depth: int = DEFAULT_PREFIX_DEPTH,
    method: str = "auto",
    cache: SeriesCache | None = None,
    compiled: bool = True,
) -> CountSeries:
    """sigma_0..sigma_{n_max}: n-step SAWs from the root, weighted by edge multiplicity.

    On directed graphs walks follow edge directions.  If the node-visit budget
    runs out, the longest fully counted prefix is returned with
    ``truncated=True``.
    """
    return _series(G, n_max, SAW, workers=workers, budget=budget, prefix_depth=prefix_depth,
                   method=method, cache=cache, compiled=compiled)


def count_bridges(
    G: RootedGraph,
    n_max: int,
    *,
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
    prefix_depth: int = DEFAULT_PREFIX_DEPTH,
    cache: SeriesCache | None = None,
    compiled: bool = True,
) -> CountSeries:
    """b_0..b_{n_max}: SAWs with h(start) < h(step m) <= h(end) for every m >= 1."""
    if G.height is None:
        raise GraphError(f"{G.family} has no height function")
    return _series(G, n_max, BRIDGE, workers=workers, budget=budget, prefix_depth=prefix_depth,
                   method="backtrack", cache=cache, compiled=compiled, rigor=G.height.rigor)


def count_saws_to(
    G: RootedGraph,
    n: int,
    *,
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
    prefix_depth: int = DEFAULT_PREFIX_DEPTH,
    compiled: bool = True,
) -> dict:
    """Endpoint-resolved counts {w: number of n-step SAWs from the root to w}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    workers = engine.max_workers() if workers is None else max(1, int(workers))
    ball = _ball(G, n, budget)
    total, nodes = engine.endpoint_map(ball, n, workers=workers, prefix_depth=prefix_depth,
                                       budget=budget, compiled=compiled)
    stats["nodes"] += nodes
    stats["calls"] += 1
    return {ball.ids[i]: c for i, c in sorted(total.items(), key=lambda kv: ball.ids[kv[0]])}


def count_extendable(
    G: RootedGraph,
    n: int,
    m: int,
    *,
    budget: int = DEFAULT_BUDGET,
    cache: SeriesCache | None = None,
    compiled: bool = True,
) -> int:
    """n-step SAWs from the root that are the first n steps of some (n+m)-step SAW.

    A finite-depth stand-in for forward-extendability: it is non-increasing in
    m and never below the number of truly forward-extendable walks.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be >= 0")
    params = {"m": m}
    if cache is not None:
        hit = cache.get(G.key, EXTENDABLE, params, n)
        if hit is not None:
            return hit
    ball = _ball(G, n + m, budget)
    value, nodes = engine.extendable(ball, n, m, budget=budget, compiled=compiled)
    stats["nodes"] += nodes
    stats["calls"] += 1
    if cache is not None:
        cache.store(G.key, EXTENDABLE, params, {n: value})
    return value


def count_extensions(
    G: RootedGraph,
    path: Sequence[VertexId],
    remaining: int,
    *,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
    compiled: bool = True,
) -> list:
    """Weighted continuation counts of a SAW from the root, for 0..remaining extra steps."""
    if not path or path[0] != G.root:
        raise GraphError("path must start at the root")
    method = _resolve_method(G, method, SAW)
    ball = _ball(G, len(path) - 1 + remaining, budget)
    try:
        idx = [ball.index[v] for v in path]
    except KeyError as exc:
        raise GraphError(f"vertex {exc.args[0]!r} is not on a walk from the root") from None
    if method == "memo":
        values, nodes = engine.memo_counts(ball, idx, remaining, budget=budget)
    else:
        values, nodes = engine.backtrack_counts(ball, idx, remaining, SAW, workers=1,
                                                budget=budget, compiled=compiled)
    stats["nodes"] += nodes
    stats["calls"] += 1
    return values


def generating_function_eval(G: RootedGraph, x: float, n_max: int, **kwargs) -> float:
    """Truncated Z(x) = sum_{n <= n_max} sigma_n x^n.

    The full series converges only for x < 1/mu; beyond that the partial sums
    grow without bound as n_max increases.
    """
    if x < 0:
        raise ValueError("x must be >= 0")
    series = count_saws(G, n_max, **kwargs)
    return math.fsum(float(s) * x**k for k, s in enumerate(series.values))
