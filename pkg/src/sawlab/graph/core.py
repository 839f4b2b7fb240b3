"""Lazily-defined infinite rooted graphs.

A graph is never materialized: it is a root id plus a pure neighbor rule over
canonical vertex ids.  Vertex ids are tuples of small ints; each family
normalizes on construction so that tuple equality is vertex equality.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional

VertexId = tuple  # tuple[int, ...]

UNDIRECTED = "undirected"
OUT = "out-only"

TRANSITIVE = "transitive"
QUASI_TRANSITIVE = "quasi-transitive"

CERTIFIED = "transitive-certified"
HEURISTIC = "heuristic"

# (neighbor id, multiplicity, direction)
Edge = tuple


class GraphError(ValueError):
    """Unsupported family, bad parameter, malformed id or invalid transform input."""


@dataclass(frozen=True)
class HeightFunction:
    eval: Callable[[VertexId], int]
    d: int
    rigor: str = HEURISTIC

    def __call__(self, v: VertexId) -> int:
        return self.eval(v)


@dataclass(frozen=True, eq=False)
class RootedGraph:
    root: VertexId
    neighbor_rule: Callable[[VertexId], tuple]
    degree: int
    simple: bool
    transitive_class: str
    spec: dict
    girth: Optional[int] = None
    height: Optional[HeightFunction] = None
    directed: bool = False
    # True for graphs of bounded width (ladder, bridge graph), where
    # the memoized counter collapses the walk tree.
    strip: bool = False
    validator: Optional[Callable[[VertexId], bool]] = field(default=None, repr=False)

    @property
    def key(self) -> str:
        return graph_key(self.spec)

    @property
    def family(self) -> str:
        return self.spec["family"]

    def is_valid(self, v) -> bool:
        if not isinstance(v, tuple) or not all(type(c) is int for c in v):
            return False
        return self.validator is None or bool(self.validator(v))

    def __repr__(self) -> str:
        return f"RootedGraph({self.key})"


def graph_key(spec: dict) -> str:
    """Byte-stable JSON for a graph spec (sorted keys, compact separators)."""
    _reject_floats(spec)
    return json.dumps(spec, sort_keys=True, separators=(",", ":"))


def _reject_floats(obj):
    if isinstance(obj, float):
        raise GraphError("graph specs must not contain floats")
    if isinstance(obj, dict):
        for value in obj.values():
            _reject_floats(value)
    elif isinstance(obj, (list, tuple)):
        for value in obj:
            _reject_floats(value)


def neighbors(G: RootedGraph, v: VertexId) -> tuple:
    """Canonically ordered (w, multiplicity, direction) triples of v."""
    if not G.is_valid(v):
        raise GraphError(f"malformed vertex id {v!r} for family {G.family!r}")
    return G.neighbor_rule(v)


def out_edges(G: RootedGraph, v: VertexId):
    """(w, multiplicity) pairs a walk may traverse from v."""
    return [(w, m) for w, m, _ in G.neighbor_rule(v)]


def ball(G: RootedGraph, radius: int) -> dict:
    """Map every vertex within (out-)distance `radius` of the root to its distance."""
    dist = {G.root: 0}
    queue = deque([G.root])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        if dv == radius:
            continue
        for w, _, _ in G.neighbor_rule(v):
            if w not in dist:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def distances_from(G: RootedGraph, source: VertexId, radius: int) -> dict:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if dist[v] == radius:
            continue
        for w, _, _ in G.neighbor_rule(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def height_of(G: RootedGraph, v: VertexId) -> int:
    if G.height is None:
        raise GraphError(f"{G.family} has no height function")
    if not G.is_valid(v):
        raise GraphError(f"malformed vertex id {v!r} for family {G.family!r}")
    return G.height(v)


@dataclass
class HeightReport:
    radius: int
    vertices_checked: int
    observed_d: int
    declared_d: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_height(G: RootedGraph, radius: int) -> HeightReport:
    """Probe the height axioms on every vertex of the ball of given radius.

    Checks h(root) = 0, that each vertex has a strictly lower and a strictly
    higher neighbor, and that no edge changes height by more than the declared d.
    """
    if G.height is None:
        raise GraphError(f"{G.family} has no height function")
    if radius < 1:
        raise GraphError("radius must be >= 1")
    h = G.height
    violations = []
    if h(G.root) != 0:
        violations.append((G.root, "h(root) != 0"))
    observed = 0
    dist = ball(G, radius)
    for v in sorted(dist):
        hv = h(v)
        hs = [h(w) for w, _, _ in G.neighbor_rule(v)]
        if not any(x < hv for x in hs):
            violations.append((v, "no lower neighbor"))
        if not any(x > hv for x in hs):
            violations.append((v, "no higher neighbor"))
        for x in hs:
            observed = max(observed, abs(x - hv))
    if observed > h.d:
        violations.append((None, f"observed d={observed} exceeds declared d={h.d}"))
    return HeightReport(radius, len(dist), observed, h.d, violations)


def girth_up_to(G: RootedGraph, limit: int) -> Optional[int]:
    """Length of the shortest cycle through the root, if it is at most `limit`.

    BFS from the root labelling each vertex with the first step of its BFS
    path; an edge joining two different branches closes a cycle through the
    root of length d(u) + d(w) + 1.
    """
    if not G.simple:
        raise GraphError("girth is defined for simple graphs only")
    if limit < 3:
        raise GraphError("limit must be >= 3")
    depth = limit // 2 + 1
    dist = {G.root: 0}
    branch = {G.root: None}
    queue = deque([G.root])
    best = None
    while queue:
        v = queue.popleft()
        if dist[v] >= depth:
            continue
        for w, _, _ in G.neighbor_rule(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                branch[w] = w if v == G.root else branch[v]
                queue.append(w)
            elif w != G.root and v != G.root and branch[w] != branch[v]:
                length = dist[v] + dist[w] + 1
                if best is None or length < best:
                    best = length
    if best is not None and best <= limit:
        return best
    return None
