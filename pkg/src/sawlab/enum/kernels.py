"""Compiled depth-first counters over a CompiledBall (unit multiplicities only).

Every kernel takes a `visited` byte array in which the current prefix is
already marked, starts at `start`, and leaves `visited` as it found it.
They return the number of walk-tree nodes visited, or -1 once that exceeds
`budget`.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def saw_counts(indptr, indices, visited, start, depth, counts, budget):
    counts[0] += 1
    if depth == 0:
        return 1
    vstack = np.empty(depth + 1, np.int64)
    pstack = np.empty(depth + 1, np.int64)
    vstack[0] = start
    pstack[0] = indptr[start]
    level = 0
    nodes = 1
    while level >= 0:
        v = vstack[level]
        if level == depth - 1:
            c = 0
            for q in range(indptr[v], indptr[v + 1]):
                if visited[indices[q]] == 0:
                    c += 1
            counts[depth] += c
            nodes += c
            if level > 0:
                visited[v] = 0
            level -= 1
            continue
        p = pstack[level]
        if p == indptr[v + 1]:
            if level > 0:
                visited[v] = 0
            level -= 1
            continue
        pstack[level] = p + 1
        w = indices[p]
        if visited[w]:
            continue
        visited[w] = 1
        level += 1
        vstack[level] = w
        pstack[level] = indptr[w]
        counts[level] += 1
        nodes += 1
        if nodes > budget:
            for k in range(1, level + 1):
                visited[vstack[k]] = 0
            return -1
    return nodes


@njit(cache=True, nogil=True)
def endpoint_counts(indptr, indices, visited, start, depth, out, budget):
    """out[w] += number of depth-step SAWs from start ending at w."""
    if depth == 0:
        out[start] += 1
        return 1
    vstack = np.empty(depth + 1, np.int64)
    pstack = np.empty(depth + 1, np.int64)
    vstack[0] = start
    pstack[0] = indptr[start]
    level = 0
    nodes = 1
    while level >= 0:
        v = vstack[level]
        if level == depth - 1:
            for q in range(indptr[v], indptr[v + 1]):
                w = indices[q]
                if visited[w] == 0:
                    out[w] += 1
                    nodes += 1
            if level > 0:
                visited[v] = 0
            level -= 1
            continue
        p = pstack[level]
        if p == indptr[v + 1]:
            if level > 0:
                visited[v] = 0
            level -= 1
            continue
        pstack[level] = p + 1
        w = indices[p]
        if visited[w]:
            continue
        visited[w] = 1
        level += 1
        vstack[level] = w
        pstack[level] = indptr[w]
        nodes += 1
        if nodes > budget:
            for k in range(1, level + 1):
                visited[vstack[k]] = 0
            return -1
    return nodes


@njit(cache=True, nogil=True)
def bridge_counts(indptr, indices, heights, visited, start, depth, h0, runmax0, counts, budget):
    """Walks staying strictly above h0; counted when the endpoint is a running maximum.

    runmax0 is the largest height seen along the prefix, start included.
    """
    if heights[start] >= runmax0:
        counts[0] += 1
    if depth == 0:
        return 1
    vstack = np.empty(depth + 1, np.int64)
    pstack = np.empty(depth + 1, np.int64)
    rmax = np.empty(depth + 1, np.int64)
    vstack[0] = start
    pstack[0] = indptr[start]
    rmax[0] = runmax0
    level = 0
    nodes = 1
    while level >= 0:
        v = vstack[level]
        if level == depth - 1:
            for q in range(indptr[v], indptr[v + 1]):
                w = indices[q]
                if visited[w] == 0 and heights[w] > h0:
                    nodes += 1
                    if heights[w] >= rmax[level]:
                        counts[depth] += 1
            if level > 0:
                visited[v] = 0
            level -= 1
            continue
        p = pstack[level]
        if p == indptr[v + 1]:
            if level > 0:
                visited[v] = 0
            level -= 1
            continue
        pstack[level] = p + 1
        w = indices[p]
        if visited[w] or heights[w] <= h0:
            continue
        visited[w] = 1
        hw = heights[w]
        level += 1
        vstack[level] = w
        pstack[level] = indptr[w]
        if hw >= rmax[level - 1]:
            counts[level] += 1
            rmax[level] = hw
        else:
            rmax[level] = rmax[level - 1]
        nodes += 1
        if nodes > budget:
            for k in range(1, level + 1):
                visited[vstack[k]] = 0
            return -1
    return nodes


@njit(cache=True, nogil=True)
def _extends(indptr, indices, visited, start, depth, stats):
    """True if some depth-step SAW leaves start; stats[0] accumulates nodes."""
    if depth == 0:
        return True
    vstack = np.empty(depth + 1, np.int64)
    pstack = np.empty(depth + 1, np.int64)
    vstack[0] = start
    pstack[0] = indptr[start]
    level = 0
    while level >= 0:
        v = vstack[level]
        p = pstack[level]
        if p == indptr[v + 1]:
            if level > 0:
                visited[v] = 0
            level -= 1
            continue
        pstack[level] = p + 1
        w = indices[p]
        if visited[w]:
            continue
        stats[0] += 1
        if level + 1 == depth:
            for k in range(1, level + 1):
                visited[vstack[k]] = 0
            return True
        visited[w] = 1
        level += 1
        vstack[level] = w
        pstack[level] = indptr[w]
    return False


@njit(cache=True, nogil=True)
def extendable_count(indptr, indices, visited, start, depth, ext, budget):
    """Number of depth-step SAWs from start that extend by ext more steps."""
    stats = np.zeros(1, np.int64)
    if depth == 0:
        return (1 if _extends(indptr, indices, visited, start, ext, stats) else 0), stats[0] + 1
    vstack = np.empty(depth + 1, np.int64)
    pstack = np.empty(depth + 1, np.int64)
    vstack[0] = start
    pstack[0] = indptr[start]
    level = 0
    total = 0
    stats[0] = 1
    while level >= 0:
        v = vstack[level]
        p = pstack[level]
        if p == indptr[v + 1]:
            if level > 0:
                visited[v] = 0
            level -= 1
            continue
        pstack[level] = p + 1
        w = indices[p]
        if visited[w]:
            continue
        stats[0] += 1
        visited[w] = 1
        if level + 1 == depth:
            if _extends(indptr, indices, visited, w, ext, stats):
                total += 1
            visited[w] = 0
        else:
            level += 1
            vstack[level] = w
            pstack[level] = indptr[w]
        if stats[0] > budget:
            for k in range(1, level + 1):
                visited[vstack[k]] = 0
            return total, -1
    return total, stats[0]
