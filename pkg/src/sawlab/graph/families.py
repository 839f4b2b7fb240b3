"""The built-in zoo of infinite graphs, each given by a local neighbor rule."""

from __future__ import annotations

from .core import (
    CERTIFIED,
    HEURISTIC,
    TRANSITIVE,
    UNDIRECTED,
    GraphError,
    HeightFunction,
    RootedGraph,
)

FAMILIES = (
    "hypercubic",
    "ladder",
    "hexagonal",
    "triangular",
    "square-octagon",
    "tree",
    "bridge",
    "free-product",
)

# square-octagon corners: one small square per Z^2 cell
EAST, NORTH, WEST, SOUTH = 0, 1, 2, 3
_CORNER_X = {WEST: 0, NORTH: 1, SOUTH: 1, EAST: 2}


def _simple(nbrs):
    return tuple((w, 1, UNDIRECTED) for w in sorted(nbrs))


def _hypercubic(dim: int) -> RootedGraph:
    if not isinstance(dim, int) or dim < 1:
        raise GraphError("hypercubic needs dim >= 1")

    def rule(v):
        out = []
        for i in range(dim):
            for s in (-1, 1):
                w = list(v)
                w[i] += s
                out.append(tuple(w))
        return _simple(out)

    return RootedGraph(
        root=(0,) * dim,
        neighbor_rule=rule,
        degree=2 * dim,
        simple=True,
        transitive_class=TRANSITIVE,
        spec={"family": "hypercubic", "params": {"dim": dim}},
        girth=4 if dim >= 2 else None,
        height=HeightFunction(lambda v: v[0], 1, CERTIFIED),
        strip=dim == 1,
        validator=lambda v: len(v) == dim,
    )


def _ladder() -> RootedGraph:
    def rule(v):
        x, s = v
        return _simple([(x - 1, s), (x + 1, s), (x, 1 - s)])

    return RootedGraph(
        root=(0, 0),
        neighbor_rule=rule,
        degree=3,
        simple=True,
        transitive_class=TRANSITIVE,
        spec={"family": "ladder", "params": {}},
        girth=4,
        height=HeightFunction(lambda v: v[0], 1, CERTIFIED),
        strip=True,
        validator=lambda v: len(v) == 2 and v[1] in (0, 1),
    )


def _hexagonal() -> RootedGraph:
    # brick wall: vertical edge (x, y)-(x, y+1) present iff x + y is even
    def rule(v):
        x, y = v
        vert = (x, y + 1) if (x + y) % 2 == 0 else (x, y - 1)
        return _simple([(x - 1, y), (x + 1, y), vert])

    return RootedGraph(
        root=(0, 0),
        neighbor_rule=rule,
        degree=3,
        simple=True,
        transitive_class=TRANSITIVE,
        spec={"family": "hexagonal", "params": {}},
        girth=6,
        height=HeightFunction(lambda v: v[0], 1, HEURISTIC),
        validator=lambda v: len(v) == 2,
    )


def _triangular() -> RootedGraph:
    steps = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1))

    def rule(v):
        x, y = v
        return _simple([(x + a, y + b) for a, b in steps])

    return RootedGraph(
        root=(0, 0),
        neighbor_rule=rule,
        degree=6,
        simple=True,
        transitive_class=TRANSITIVE,
        spec={"family": "triangular", "params": {}},
        girth=3,
        validator=lambda v: len(v) == 2,
    )


def _square_octagon() -> RootedGraph:
    """The (4,8^2) lattice: a 4-cycle per Z^2 cell, corners joined across cells."""

    def rule(v):
        i, j, k = v
        ring = [(i, j, (k + 1) % 4), (i, j, (k - 1) % 4)]
        if k == EAST:
            ring.append((i + 1, j, WEST))
        elif k == WEST:
            ring.append((i - 1, j, EAST))
        elif k == NORTH:
            ring.append((i, j + 1, SOUTH))
        else:
            ring.append((i, j - 1, NORTH))
        return _simple(ring)

    return RootedGraph(
        root=(0, 0, WEST),
        neighbor_rule=rule,
        degree=3,
        simple=True,
        transitive_class=TRANSITIVE,
        spec={"family": "square-octagon", "params": {}},
        girth=4,
        height=HeightFunction(lambda v: 3 * v[0] + _CORNER_X[v[2]], 1, HEURISTIC),
        validator=lambda v: len(v) == 3 and 0 <= v[2] < 4,
    )


def _tree(delta: int) -> RootedGraph:
    """Delta-regular tree as reduced words over Delta involutions."""
    if not isinstance(delta, int) or delta < 2:
        raise GraphError("tree needs delta >= 2")

    def rule(v):
        out = []
        for a in range(delta):
            if v and v[-1] == a:
                out.append(v[:-1])
            else:
                out.append(v + (a,))
        return _simple(out)

    def valid(v):
        return all(0 <= a < delta for a in v) and all(
            v[i] != v[i + 1] for i in range(len(v) - 1)
        )

    return RootedGraph(
        root=(),
        neighbor_rule=rule,
        degree=delta,
        simple=True,
        transitive_class=TRANSITIVE,
        spec={"family": "tree", "params": {"delta": delta}},
        girth=None,
        strip=delta == 2,
        validator=valid,
    )


def _bridge(delta: int) -> RootedGraph:
    """Z with every alternate pair of consecutive vertices joined by delta-1 edges."""
    if not isinstance(delta, int) or delta < 2:
        raise GraphError("bridge needs delta >= 2")
    heavy = delta - 1

    def rule(v):
        (x,) = v
        if x % 2 == 0:
            return (((x - 1,), 1, UNDIRECTED), ((x + 1,), heavy, UNDIRECTED))
        return (((x - 1,), heavy, UNDIRECTED), ((x + 1,), 1, UNDIRECTED))

    return RootedGraph(
        root=(0,),
        neighbor_rule=rule,
        degree=delta,
        simple=delta == 2,
        transitive_class=TRANSITIVE,
        spec={"family": "bridge", "params": {"delta": delta}},
        girth=None,
        strip=True,
        validator=lambda v: len(v) == 1,
    )


def _free_product(delta: int, g: int) -> RootedGraph:
    """Cayley graph of K2 * ... * K2 * Z_g (delta-2 involutions, one g-cycle).

    Normal form: syllables with no two consecutive from the same factor.
    Involution i is the letter i (0 <= i < delta-2); the cycle syllable c^e
    (1 <= e < g) is the letter delta-2+e-1.
    """
    if not isinstance(delta, int) or delta < 3:
        raise GraphError("free-product needs delta >= 3")
    if not isinstance(g, int) or g < 3:
        raise GraphError("free-product needs g >= 3")
    k = delta - 2

    def rule(v):
        out = []
        for a in range(k):
            if v and v[-1] == a:
                out.append(v[:-1])
            else:
                out.append(v + (a,))
        for step in (1, g - 1):
            if v and v[-1] >= k:
                e = (v[-1] - k + 1 + step) % g
                out.append(v[:-1] if e == 0 else v[:-1] + (k + e - 1,))
            else:
                out.append(v + (k + step - 1,))
        return _simple(out)

    def valid(v):
        if not all(0 <= a < k + g - 1 for a in v):
            return False
        for a, b in zip(v, v[1:]):
            if a == b or (a >= k and b >= k):
                return False
        return True

    return RootedGraph(
        root=(),
        neighbor_rule=rule,
        degree=delta,
        simple=True,
        transitive_class=TRANSITIVE,
        spec={"family": "free-product", "params": {"delta": delta, "g": g}},
        girth=g,
        validator=valid,
    )


def make_family(family: str, **params) -> RootedGraph:
    """Build a graph from the zoo.

    >>> make_family("ladder").degree
    3
    """
    builders = {
        "hypercubic": lambda p: _hypercubic(p.pop("dim", 2)),
        "ladder": lambda p: _ladder(),
        "hexagonal": lambda p: _hexagonal(),
        "triangular": lambda p: _triangular(),
        "square-octagon": lambda p: _square_octagon(),
        "tree": lambda p: _tree(p.pop("delta", 3)),
        "bridge": lambda p: _bridge(p.pop("delta", 3)),
        "free-product": lambda p: _free_product(p.pop("delta", 3), p.pop("g", 3)),
    }
    if family not in builders:
        raise GraphError(f"unsupported family {family!r}")
    rest = dict(params)
    G = builders[family](rest)
    if rest:
        raise GraphError(f"unexpected parameters for {family}: {sorted(rest)}")
    return G
