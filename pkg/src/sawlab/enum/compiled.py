"""Finite integer-indexed snapshot of the ball around the root.

Walks of length <= n from the root never leave the ball of radius n, so the
counters work on this snapshot rather than calling the neighbor rule.
"""

from __future__ import annotations

import weakref
from collections import deque

import numpy as np

from ..graph.core import RootedGraph


class BallTooLarge(RuntimeError):
    pass


class CompiledBall:
    def __init__(self, G: RootedGraph, radius: int, max_vertices: int | None = None):
        self.graph = G
        self.radius = radius
        ids = [G.root]
        index = {G.root: 0}
        dist = [0]
        raw = []
        queue = deque([0])
        while queue:
            i = queue.popleft()
            edges = []
            for w, mult, _ in G.neighbor_rule(ids[i]):
                j = index.get(w)
                if j is None:
                    if dist[i] == radius:
                        continue
                    j = len(ids)
                    index[w] = j
                    ids.append(w)
                    dist.append(dist[i] + 1)
                    queue.append(j)
                    if max_vertices is not None and len(ids) > max_vertices:
                        raise BallTooLarge(f"ball of radius {radius} exceeds {max_vertices} vertices")
                edges.append((j, mult))
            raw.append(edges)
        self.ids = ids
        self.index = index
        self.dist = np.asarray(dist, dtype=np.int64)
        self.adj = raw
        indptr = np.zeros(len(ids) + 1, dtype=np.int64)
        for i, edges in enumerate(raw):
            indptr[i + 1] = indptr[i] + len(edges)
        self.indptr = indptr
        self.indices = np.fromiter((j for edges in raw for j, _ in edges), dtype=np.int64, count=int(indptr[-1]))
        self.mults = np.fromiter((m for edges in raw for _, m in edges), dtype=np.int64, count=int(indptr[-1]))
        self.max_mult = int(self.mults.max()) if len(self.mults) else 1
        if G.height is not None:
            self.heights = np.fromiter((G.height(v) for v in ids), dtype=np.int64, count=len(ids))
        else:
            self.heights = None

    def __len__(self) -> int:
        return len(self.ids)


_balls: "weakref.WeakKeyDictionary[RootedGraph, CompiledBall]" = weakref.WeakKeyDictionary()


def compiled_ball(G: RootedGraph, radius: int, max_vertices: int | None = None) -> CompiledBall:
    """Return a (cached) compiled ball of at least the given radius.

    A larger cached ball is reused as-is: walks of length <= radius from the
    root only see the inner part of it.
    """
    cached = _balls.get(G)
    if cached is not None and cached.radius >= radius:
        return cached
    ball = CompiledBall(G, radius, max_vertices)
    _balls[G] = ball
    return ball
