"""Numeric bounds and estimates for mu built from exact count series."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy import sparse

from ..enum import BudgetExceeded, count_bridges, count_saws
from ..enum.compiled import compiled_ball
from ..graph.core import CERTIFIED as HEIGHT_CERTIFIED
from ..graph.core import TRANSITIVE, GraphError, RootedGraph
from ..graph.families import make_family
from ..graph.transforms import quotient_cylinder

CERTIFIED = "certified"
HEURISTIC = "heuristic"

# Families where bridge counts are supermultiplicative for the built-in
# height, so b_n^(1/n) is a proven lower bound.
CERTIFIED_LOWER_FAMILIES = ("hypercubic", "ladder")


@dataclass(frozen=True)
class MuInterval:
    lower: float
    upper: float
    lower_rigor: str
    upper_rigor: str
    n_used: int
    notes: list = field(default_factory=list)

    def __contains__(self, mu: float) -> bool:
        return self.lower <= mu <= self.upper


def _root(value: int, n: int) -> float:
    if value == 0:
        return 0.0
    return math.exp(math.log(value) / n)


def _series_or_raise(series):
    if series.truncated:
        raise BudgetExceeded(f"{series.kind} series truncated at n={series.n_max}")
    return series


def mu_interval(G: RootedGraph, n: int, **kwargs) -> MuInterval:
    """b_n^(1/n) <= mu <= sigma_n^(1/n), with a rigor flag on each end."""
    if n < 1:
        raise ValueError("n must be >= 1")
    notes = []
    sigma = _series_or_raise(count_saws(G, n, **kwargs))
    upper = _root(sigma[n], n)
    if G.transitive_class == TRANSITIVE:
        upper_rigor = CERTIFIED
    else:
        upper_rigor = HEURISTIC
        notes.append("upper: submultiplicativity not established for quasi-transitive graphs")
    if G.height is not None:
        kw = {k: v for k, v in kwargs.items() if k != "method"}
        bridges = _series_or_raise(count_bridges(G, n, **kw))
        lower = _root(bridges[n], n)
        certified = G.height.rigor == HEIGHT_CERTIFIED and G.family in CERTIFIED_LOWER_FAMILIES
        lower_rigor = CERTIFIED if certified else HEURISTIC
        notes.append(f"lower: bridge count b_{n}={bridges[n]}")
    else:
        lower, lower_rigor = 1.0, HEURISTIC
        notes.append("lower: no height function, trivial bound 1")
    return MuInterval(lower, upper, lower_rigor, upper_rigor, n, notes)


def ratio_estimate(G: RootedGraph, n: int, step: int = 1, **kwargs) -> float:
    """(sigma_{n+step} / sigma_n)^(1/step), a point estimate of mu."""
    if step not in (1, 2):
        raise ValueError("step must be 1 or 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    sigma = _series_or_raise(count_saws(G, n + step, **kwargs))
    if sigma[n] == 0:
        raise ZeroDivisionError(f"sigma_{n} = 0")
    return float(Fraction(sigma[n + step], sigma[n])) ** (1 / step)


def upper_envelope(values) -> list:
    """min over 1 <= k <= n of sigma_k^(1/k), for each n >= 1."""
    out, best = [], math.inf
    for k, s in enumerate(values):
        if k == 0:
            continue
        best = min(best, _root(s, k))
        out.append(best)
    return out


def exact_value(G_or_family, **params) -> float:
    """Known connective constants: ladder, hexagonal, bridge graph, regular tree."""
    if isinstance(G_or_family, RootedGraph):
        family = G_or_family.family
        params = dict(G_or_family.spec["params"])
    else:
        family = G_or_family
    if family == "ladder":
        return (1 + math.sqrt(5)) / 2
    if family == "hexagonal":
        return math.sqrt(2 + math.sqrt(2))
    if family == "bridge":
        return math.sqrt(params.get("delta", 3) - 1)
    if family == "tree":
        return float(params.get("delta", 3) - 1)
    raise GraphError(f"no known exact connective constant for {family!r}")


def return_probability(G: RootedGraph, steps: int) -> float:
    """P(simple random walk is back at the root after `steps` steps), by exact DP.

    Mass that strays beyond distance steps/2 can never return in time, so the
    walk is run on the ball of that radius.
    """
    radius = steps // 2
    ball = compiled_ball(G, radius + 1)
    inner = np.flatnonzero(ball.dist <= radius)
    pos = {int(i): k for k, i in enumerate(inner)}
    rows, cols, vals = [], [], []
    for i in inner:
        v = ball.ids[int(i)]
        edges = G.neighbor_rule(v)
        total = sum(m for _, m, _ in edges)
        for j, mult in ball.adj[int(i)]:
            if j in pos:
                rows.append(pos[j])
                cols.append(pos[int(i)])
                vals.append(mult / total)
    P = sparse.csr_matrix((vals, (rows, cols)), shape=(len(inner), len(inner)))
    p = np.zeros(len(inner))
    p[0] = 1.0
    for _ in range(steps):
        p = P @ p
    return float(p[0])


def estimate_lambda(G: RootedGraph, n: int) -> float:
    """1 - p_{2n}(root, root)^(1/2n).

    p_{2n} <= rho^(2n), so the root underestimates rho and the returned
    spectral bottom overestimates lambda; a bound built on it is heuristic.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = return_probability(G, 2 * n)
    if p <= 0:
        raise ValueError("no return path of that length")
    return 1.0 - p ** (1.0 / (2 * n))


@dataclass(frozen=True)
class LocalityRow:
    m: int | None  # None marks the square lattice itself
    mu_hat: float
    gap: float


def locality_scan(m_list, n: int, step: int = 2, **kwargs) -> list:
    """Ratio estimates on Z^2 wrapped around cylinders of circumference m.

    The square lattice's own estimate is appended as the final row, and
    every row records its distance from it.
    """
    if any(m < 2 for m in m_list):
        raise ValueError("every m must be >= 2")
    z2 = ratio_estimate(make_family("hypercubic", dim=2), n, step, **kwargs)
    rows = []
    for m in m_list:
        mu = ratio_estimate(quotient_cylinder(m), n, step, **kwargs)
        rows.append(LocalityRow(m, mu, abs(mu - z2)))
    rows.append(LocalityRow(None, z2, 0.0))
    return rows
