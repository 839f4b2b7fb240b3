"""Counting engines behind the public walk-enumeration operations.

Two exact strategies share one contract (weighted counts per length, node
visits charged against a budget):

* ``backtrack``: depth-first search with a visited set.  Unit-multiplicity
  graphs run the compiled kernels; multigraphs run a big-integer Python loop.
  Work is split at a fixed prefix depth and the subtrees summed.
* ``memo``: depth-first search memoized on (vertex, steps left, set of free
  vertices reachable within that many steps).  The number of continuations
  depends only on that triple, so this is exact; it collapses the walk tree
  on bounded-width graphs and is what makes length 40 on the ladder cheap.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import kernels
from .compiled import CompiledBall

SAW = "saw"
BRIDGE = "bridge"


class BudgetExceeded(RuntimeError):
    """The node-visit cap was hit before the computation finished."""


def max_workers() -> int:
    return os.cpu_count() or 1


class _Meter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def charge(self, k: int = 1):
        self.nodes += k
        if self.nodes > self.budget:
            raise BudgetExceeded(f"node-visit budget {self.budget} exceeded")


# ---------------------------------------------------------------------------
# prefix expansion


def _expand_prefixes(ball: CompiledBall, start_path, depth, kind, counts, weight0, meter):
    """Walk the first `depth` levels in Python.

    Adds counts for lengths shorter than the split depth into `counts` and
    returns the frontier as (path, weight, runmax) tasks.
    """
    adj = ball.adj
    h = ball.heights
    h0 = int(h[start_path[0]]) if kind == BRIDGE else 0
    tasks = []
    visited = set(start_path)

    def rec(path, weight, runmax, level):
        v = path[-1]
        if level == depth:
            tasks.append((list(path), weight, runmax))
            return
        if kind == SAW or int(h[v]) >= runmax:
            counts[level] += weight
        for w, mult in adj[v]:
            if w in visited:
                continue
            if kind == BRIDGE and int(h[w]) <= h0:
                continue
            meter.charge()
            visited.add(w)
            path.append(w)
            rec(path, weight * mult, max(runmax, int(h[w])) if kind == BRIDGE else 0, level + 1)
            path.pop()
            visited.discard(w)

    if kind == BRIDGE:
        runmax = max(int(h[i]) for i in start_path)
    else:
        runmax = 0
    rec(list(start_path), weight0, runmax, 0)
    return tasks


# ---------------------------------------------------------------------------
# Python big-integer backtracking (any multiplicities)


def _py_subtree(ball: CompiledBall, path, remaining, kind, runmax, meter):
    adj = ball.adj
    h = ball.heights
    counts = [0] * (remaining + 1)
    visited = set(path)
    h0 = int(h[path[0]]) if kind == BRIDGE else 0

    def rec(v, weight, level, rmax):
        if kind == SAW or int(h[v]) >= rmax:
            counts[level] += weight
        if level == remaining:
            return
        for w, mult in adj[v]:
            if w in visited:
                continue
            if kind == BRIDGE and int(h[w]) <= h0:
                continue
            meter.charge()
            visited.add(w)
            rec(w, weight * mult, level + 1, max(rmax, int(h[w])) if kind == BRIDGE else 0)
            visited.discard(w)

    rec(path[-1], 1, 0, runmax)
    return counts


# ---------------------------------------------------------------------------
# compiled backtracking


def _kernel_subtree(ball: CompiledBall, path, remaining, kind, runmax, budget):
    visited = np.zeros(len(ball), dtype=np.uint8)
    visited[path] = 1
    counts = np.zeros(remaining + 1, dtype=np.int64)
    if kind == SAW:
        nodes = kernels.saw_counts(ball.indptr, ball.indices, visited, path[-1], remaining, counts, budget)
    else:
        h0 = ball.heights[path[0]]
        nodes = kernels.bridge_counts(
            ball.indptr, ball.indices, ball.heights, visited, path[-1], remaining, h0, runmax, counts, budget
        )
    return [int(c) for c in counts], int(nodes)


def backtrack_counts(ball: CompiledBall, start_path, remaining, kind=SAW, *, workers=1,
                     prefix_depth=4, budget=5 * 10**9, compiled=True):
    """Weighted counts of continuations of `start_path` for 0..remaining extra steps."""
    meter = _Meter(budget)
    counts = [0] * (remaining + 1)
    split = min(prefix_depth, remaining)
    tasks = _expand_prefixes(ball, start_path, split, kind, counts, 1, meter)
    rest = remaining - split
    use_kernel = compiled and ball.max_mult == 1
    if use_kernel:
        def run(task):
            path, weight, runmax = task
            sub, nodes = _kernel_subtree(ball, path, rest, kind, runmax, budget)
            return sub, nodes, weight
        if workers > 1 and len(tasks) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(run, tasks))
        else:
            results = [run(t) for t in tasks]
        for sub, nodes, weight in results:
            if nodes < 0:
                raise BudgetExceeded(f"node-visit budget {budget} exceeded")
            meter.charge(nodes)
            for i, c in enumerate(sub):
                counts[split + i] += weight * c
    else:
        for path, weight, runmax in tasks:
            meter.charge()
            sub = _py_subtree(ball, path, rest, kind, runmax, meter)
            for i, c in enumerate(sub):
                counts[split + i] += weight * c
    return counts, meter.nodes


def endpoint_map(ball: CompiledBall, n, *, workers=1, prefix_depth=4, budget=5 * 10**9, compiled=True):
    """Weighted number of n-step SAWs from the root ending at each ball index."""
    meter = _Meter(budget)
    split = min(prefix_depth, n)
    scratch = [0] * (split + 1)
    tasks = _expand_prefixes(ball, [0], split, SAW, scratch, 1, meter)
    rest = n - split
    total = {}
    if compiled and ball.max_mult == 1:
        def run(task):
            path, weight, _ = task
            visited = np.zeros(len(ball), dtype=np.uint8)
            visited[path] = 1
            out = np.zeros(len(ball), dtype=np.int64)
            nodes = kernels.endpoint_counts(ball.indptr, ball.indices, visited, path[-1], rest, out, budget)
            return out, int(nodes), weight
        if workers > 1 and len(tasks) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(run, tasks))
        else:
            results = [run(t) for t in tasks]
        for out, nodes, weight in results:
            if nodes < 0:
                raise BudgetExceeded(f"node-visit budget {budget} exceeded")
            meter.charge(nodes)
            for j in np.nonzero(out)[0]:
                total[int(j)] = total.get(int(j), 0) + weight * int(out[j])
    else:
        adj = ball.adj
        for path, weight, _ in tasks:
            visited = set(path)

            def rec(v, wgt, level):
                if level == rest:
                    total[v] = total.get(v, 0) + wgt
                    return
                for w, mult in adj[v]:
                    if w not in visited:
                        meter.charge()
                        visited.add(w)
                        rec(w, wgt * mult, level + 1)
                        visited.discard(w)

            rec(path[-1], weight, 0)
    return total, meter.nodes


def extendable(ball: CompiledBall, n, m, *, budget=5 * 10**9, compiled=True):
    """Number of n-step SAWs (multiplicity-weighted) extending to n+m steps."""
    if compiled and ball.max_mult == 1:
        visited = np.zeros(len(ball), dtype=np.uint8)
        visited[0] = 1
        total, nodes = kernels.extendable_count(ball.indptr, ball.indices, visited, 0, n, m, budget)
        if nodes < 0:
            raise BudgetExceeded(f"node-visit budget {budget} exceeded")
        return int(total), int(nodes)
    meter = _Meter(budget)
    adj = ball.adj
    visited = {0}

    def extends(v, left):
        if left == 0:
            return True
        for w, _ in adj[v]:
            if w not in visited:
                meter.charge()
                visited.add(w)
                ok = extends(w, left - 1)
                visited.discard(w)
                if ok:
                    return True
        return False

    def rec(v, weight, level):
        if level == n:
            return weight if extends(v, m) else 0
        total = 0
        for w, mult in adj[v]:
            if w not in visited:
                meter.charge()
                visited.add(w)
                total += rec(w, weight * mult, level + 1)
                visited.discard(w)
        return total

    return rec(0, 1, 0), meter.nodes


# ---------------------------------------------------------------------------
# memoized counting on bounded-width graphs


def memo_counts(ball: CompiledBall, start_path, remaining, *, budget=5 * 10**9, memo=None):
    """Weighted SAW continuation counts, memoized on the reachable free region.

    Memo entries do not depend on the start path, so callers making many
    queries against one ball may pass the same `memo` dict each time.
    """
    meter = _Meter(budget)
    adj = ball.adj
    if memo is None:
        memo = {}

    def region(v, visited, r):
        seen = 1 << v
        frontier = [v]
        for _ in range(r):
            nxt = []
            for u in frontier:
                for w, _ in adj[u]:
                    bit = 1 << w
                    if not (seen & bit) and not (visited & bit):
                        seen |= bit
                        nxt.append(w)
            if not nxt:
                break
            frontier = nxt
        return seen

    def rec(v, visited, r):
        if r == 0:
            return (1,)
        key = (v, r, region(v, visited, r))
        hit = memo.get(key)
        if hit is not None:
            return hit
        meter.charge()
        acc = [0] * (r + 1)
        acc[0] = 1
        for w, mult in adj[v]:
            bit = 1 << w
            if visited & bit:
                continue
            sub = rec(w, visited | bit, r - 1)
            for i, c in enumerate(sub):
                acc[i + 1] += mult * c
        out = tuple(acc)
        memo[key] = out
        return out

    visited = 0
    for i in start_path:
        visited |= 1 << i
    return list(rec(start_path[-1], visited, remaining)), meter.nodes
