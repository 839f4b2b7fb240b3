"""Exactly uniform SAW samples by unranking, and displacement statistics.

A sample is a uniform integer in [0, sigma_n) mapped to a walk by walking the
enumeration tree in canonical neighbor order, subtracting subtree sizes.  On
multigraphs each parallel edge is its own branch, so a vertex sequence is
drawn with probability proportional to its multiplicity weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .enum import DEFAULT_BUDGET, BudgetExceeded, count_saws, count_saws_to
from .enum import engine
from .enum.compiled import BallTooLarge, compiled_ball
from .enum.counting import _resolve_method, stats
from .graph.core import RootedGraph, distances_from

EXACT_LIMIT = 10**7


@dataclass(frozen=True)
class WalkSample:
    vertices: tuple
    n: int
    displacement: int


def _stream(seed: int, *index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed & (2**64 - 1), *index])))


def uniform_below(rng: np.random.Generator, bound: int) -> int:
    """Uniform integer in [0, bound) for arbitrarily large bound (rejection on bit strings)."""
    if bound < 1:
        raise ValueError("bound must be positive")
    if bound < 2**63:
        return int(rng.integers(0, bound, dtype=np.int64)) if bound > 1 else 0
    bits = bound.bit_length()
    words = (bits + 31) // 32
    while True:
        chunks = rng.integers(0, 2**32, size=words, dtype=np.uint64)
        value = 0
        for c in chunks:
            value = (value << 32) | int(c)
        value >>= words * 32 - bits
        if value < bound:
            return value


class Unranker:
    """Maps ranks in [0, sigma_n) to n-step SAWs in canonical enumeration order."""

    def __init__(self, G: RootedGraph, n: int, *, method: str = "auto", budget: int = DEFAULT_BUDGET):
        self.G = G
        self.n = n
        self.budget = budget
        self.method = _resolve_method(G, method, "saw")
        try:
            self.ball = compiled_ball(G, n, max_vertices=budget)
        except BallTooLarge as exc:
            raise BudgetExceeded(str(exc)) from exc
        self._memo = {}
        self._subtree = {}
        self.total = self.completions((0,), n)

    def completions(self, path: tuple, r: int) -> int:
        """Weighted number of ways to extend `path` (ball indices) by exactly r steps."""
        if r == 0:
            return 1
        key = (path, r)
        hit = self._subtree.get(key)
        if hit is not None:
            return hit
        if self.method == "memo":
            values, nodes = engine.memo_counts(self.ball, list(path), r, budget=self.budget, memo=self._memo)
        else:
            values, nodes = engine.backtrack_counts(self.ball, list(path), r, prefix_depth=0, budget=self.budget)
        stats["nodes"] += nodes
        self._subtree[key] = values[r]
        return values[r]

    def unrank(self, rank: int) -> list:
        if not 0 <= rank < self.total:
            raise ValueError(f"rank {rank} outside [0, {self.total})")
        path = (0,)
        adj = self.ball.adj
        for step in range(self.n):
            r = self.n - step - 1
            on_path = set(path)
            for w, mult in adj[path[-1]]:
                if w in on_path:
                    continue
                c = self.completions(path + (w,), r)
                block = mult * c
                if rank < block:
                    rank %= c
                    path = path + (w,)
                    break
                rank -= block
            else:  # pragma: no cover - counts are exact, so a branch always matches
                raise AssertionError("rank fell off the enumeration tree")
        return [self.ball.ids[i] for i in path]

    def sample(self, rng: np.random.Generator) -> WalkSample:
        walk = self.unrank(uniform_below(rng, self.total))
        end = self.ball.index[walk[-1]]
        return WalkSample(tuple(walk), self.n, int(self.ball.dist[end]))


def sample_uniform(
    G: RootedGraph,
    n: int,
    count: int,
    seed: int,
    *,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
) -> list:
    """`count` independent exactly-uniform n-step SAWs from the root.

    Sample i draws from its own counter-based stream keyed by (seed, i), so
    the output depends only on the inputs.  Refuses (BudgetExceeded) rather
    than falling back to an approximate sampler.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    unranker = Unranker(G, n, method=method, budget=budget)
    return [unranker.sample(_stream(seed, i)) for i in range(count)]


@dataclass(frozen=True)
class DisplacementRow:
    n: int
    mean_sq_displacement: float
    stderr: float
    count: int
    seed: int | None
    exact: bool = False


def exact_mean_sq_displacement(G: RootedGraph, n: int, *, budget: int = DEFAULT_BUDGET):
    """E|pi_n|^2 over all n-step SAWs, as an exact rational (num, den)."""
    sigma = count_saws(G, n, budget=budget)
    if sigma.truncated:
        raise BudgetExceeded(f"sigma_{n} exceeds the budget")
    if sigma[n] > EXACT_LIMIT:
        raise BudgetExceeded(f"sigma_{n} = {sigma[n]} is above the exact-mode limit {EXACT_LIMIT}")
    ends = count_saws_to(G, n, budget=budget)
    dist = distances_from(G, G.root, n)
    num = sum(c * dist[w] ** 2 for w, c in ends.items())
    return num, sigma[n]


def displacement_stats(
    G: RootedGraph,
    n_list,
    count: int = 1000,
    seed: int = 0,
    *,
    exact: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> list:
    """Mean squared endpoint graph-distance for each n, exact or Monte-Carlo."""
    rows = []
    for n in n_list:
        if exact:
            num, den = exact_mean_sq_displacement(G, n, budget=budget)
            rows.append(DisplacementRow(n, num / den, 0.0, den, None, True))
            continue
        samples = sample_uniform(G, n, count, seed, budget=budget)
        d2 = np.array([s.displacement**2 for s in samples], dtype=float)
        se = float(d2.std(ddof=1) / math.sqrt(count)) if count > 1 else math.nan
        rows.append(DisplacementRow(n, float(d2.mean()), se, count, seed, False))
    return rows


def nu_estimate(table) -> float:
    """Half the least-squares slope of log E|pi_n|^2 against log n."""
    ns = np.array([row.n for row in table], dtype=float)
    ms = np.array([row.mean_sq_displacement for row in table], dtype=float)
    if len(ns) < 4:
        raise ValueError("need at least 4 points")
    if ns.min() <= 0 or ns.max() == ns.min():
        raise ValueError("degenerate table: n values must be positive and not all equal")
    if ns.max() < 2 * ns.min():
        raise ValueError("n must span at least a factor of 2")
    slope = np.polyfit(np.log(ns), np.log(ms), 1)[0]
    return float(slope / 2)


@dataclass(frozen=True)
class SpeedProbe:
    frequency: float
    half_width: float
    count: int
    threshold: float


def speed_probe(G: RootedGraph, n: int, c: float, count: int = 1000, seed: int = 0, *,
                budget: int = DEFAULT_BUDGET) -> SpeedProbe:
    """Fraction of uniform n-step SAWs with endpoint distance <= c*n.

    The half-width is that of the 95% Wilson score interval.
    """
    if c <= 0:
        raise ValueError("c must be positive")
    samples = sample_uniform(G, n, count, seed, budget=budget)
    hits = sum(1 for s in samples if s.displacement <= c * n)
    p = hits / count
    z = 1.959963984540054
    denom = 1 + z * z / count
    half = z * math.sqrt(p * (1 - p) / count + z * z / (4 * count * count)) / denom
    return SpeedProbe(p, half, count, c * n)
