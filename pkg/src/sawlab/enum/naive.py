"""Reference enumerator that materializes every walk.

Deliberately simple and slow: it calls the graph's neighbor rule directly,
builds each walk as an explicit list and filters it afterwards.  Used only to
cross-check the optimized counters at small lengths.
"""

from __future__ import annotations

from ..graph.core import RootedGraph


def all_walks(G: RootedGraph, n: int):
    """Every n-step SAW from the root as (vertex list, multiplicity weight)."""
    walks = [([G.root], 1)]
    for _ in range(n):
        grown = []
        for path, weight in walks:
            for w, mult, _ in G.neighbor_rule(path[-1]):
                if w not in path:
                    grown.append((path + [w], weight * mult))
        walks = grown
    return walks


def naive_saw_counts(G: RootedGraph, n_max: int) -> list:
    return [sum(w for _, w in all_walks(G, n)) for n in range(n_max + 1)]


def is_bridge(G: RootedGraph, path) -> bool:
    h = [G.height(v) for v in path]
    return all(h[0] < h[m] <= h[-1] for m in range(1, len(path)))


def naive_bridge_counts(G: RootedGraph, n_max: int) -> list:
    return [sum(w for p, w in all_walks(G, n) if is_bridge(G, p)) for n in range(n_max + 1)]


def naive_endpoints(G: RootedGraph, n: int) -> dict:
    out = {}
    for path, weight in all_walks(G, n):
        out[path[-1]] = out.get(path[-1], 0) + weight
    return out
