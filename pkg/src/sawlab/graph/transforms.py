"""Graph transforms: Fisher triangles, semi-cubic Fisher, cylinder quotients."""

from __future__ import annotations

from collections import Counter
from typing import Callable

from .core import (
    OUT,
    QUASI_TRANSITIVE,
    TRANSITIVE,
    UNDIRECTED,
    GraphError,
    RootedGraph,
    ball,
)
from .families import FAMILIES, make_family

WHITE = -1

_CHECK_RADIUS = 4


def _require_cubic_simple(G: RootedGraph, what: str):
    if G.directed:
        raise GraphError(f"{what} needs an undirected graph")
    if not G.simple:
        raise GraphError(f"{what} needs a simple graph")


def fisher_transform(G: RootedGraph) -> RootedGraph:
    """Replace every vertex of a cubic graph by a triangle.

    Vertex v becomes corners v+(0,), v+(1,), v+(2,); corner i is also joined to
    the corner of v's i-th neighbor that points back at v.
    """
    _require_cubic_simple(G, "fisher_transform")
    if G.degree != 3:
        raise GraphError("fisher_transform needs a cubic graph")
    rule = G.neighbor_rule

    def corner_rule(key):
        v, i = key[:-1], key[-1]
        base = rule(v)
        if len(base) != 3:
            raise GraphError(f"vertex {v!r} is not of degree 3")
        w = base[i][0]
        back = [u for u, _, _ in rule(w)].index(v)
        out = [v + (j,) for j in range(3) if j != i]
        out.append(w + (back,))
        return tuple((u, 1, UNDIRECTED) for u in sorted(out))

    def valid(key):
        return len(key) >= 1 and 0 <= key[-1] < 3 and G.is_valid(key[:-1])

    return RootedGraph(
        root=G.root + (0,),
        neighbor_rule=corner_rule,
        degree=3,
        simple=True,
        transitive_class=G.transitive_class,
        spec={"family": "fisher", "params": {"base": G.spec}},
        girth=3,
        validator=valid,
    )


def hexagonal_black(v) -> bool:
    """Built-in 2-coloring of the brick-wall hexagonal lattice."""
    return (v[0] + v[1]) % 2 == 0


def fisher_semicubic(
    G: RootedGraph,
    black: Callable | None = None,
    coloring: str = "builtin",
) -> RootedGraph:
    """Apply the Fisher transformation at the black vertices of a bipartite graph.

    Black corners are keyed v+(i,); white vertices are keyed v+(-1,).
    """
    _require_cubic_simple(G, "fisher_semicubic")
    if black is None:
        if G.family != "hexagonal":
            raise GraphError("a built-in coloring exists only for the hexagonal lattice")
        black = hexagonal_black
        coloring = "builtin"
    rule = G.neighbor_rule

    def check(v):
        nbrs = rule(v)
        is_black = black(v)
        if is_black and len(nbrs) != 3:
            raise GraphError(f"black vertex {v!r} has degree {len(nbrs)}")
        for w, _, _ in nbrs:
            if is_black and black(w):
                raise GraphError(f"coloring not proper at edge {v!r}-{w!r}")
        return nbrs

    for v in ball(G, _CHECK_RADIUS):
        check(v)

    def semi_rule(key):
        v, c = key[:-1], key[-1]
        nbrs = check(v)
        out = []
        if c == WHITE:
            for w, _, _ in nbrs:
                if black(w):
                    back = [u for u, _, _ in rule(w)].index(v)
                    out.append(w + (back,))
                else:
                    out.append(w + (WHITE,))
        else:
            out.extend(v + (j,) for j in range(3) if j != c)
            out.append(nbrs[c][0] + (WHITE,))
        return tuple((u, 1, UNDIRECTED) for u in sorted(out))

    def valid(key):
        if len(key) < 1 or not G.is_valid(key[:-1]):
            return False
        c = key[-1]
        return (0 <= c < 3) if black(key[:-1]) else c == WHITE

    root = G.root + ((0,) if black(G.root) else (WHITE,))
    return RootedGraph(
        root=root,
        neighbor_rule=semi_rule,
        degree=G.degree,
        simple=True,
        transitive_class=QUASI_TRANSITIVE,
        spec={"family": "semicubic", "params": {"base": G.spec, "coloring": coloring}},
        girth=3 if black(G.root) else None,
        validator=valid,
    )


def quotient_cylinder(m: int) -> RootedGraph:
    """Z^2 modulo the horizontal translation by m, as a directed multigraph.

    From the class of v there are |N(v) & class(w)| directed edges to the
    class of w, so m = 2 gives doubled edges around the cylinder.
    """
    if not isinstance(m, int) or m < 2:
        raise GraphError("quotient_cylinder needs m >= 2")

    def rule(v):
        x, y = v
        mult = Counter(
            [((x + 1) % m, y), ((x - 1) % m, y), (x, y + 1), (x, y - 1)]
        )
        return tuple((w, mult[w], OUT) for w in sorted(mult))

    return RootedGraph(
        root=(0, 0),
        neighbor_rule=rule,
        degree=4,
        simple=m >= 3,
        transitive_class=TRANSITIVE,
        spec={"family": "cylinder", "params": {"m": m}},
        girth=min(m, 4) if m >= 3 else None,
        directed=True,
        validator=lambda v: len(v) == 2 and 0 <= v[0] < m,
    )


def graph_from_spec(spec: dict) -> RootedGraph:
    """Rebuild a graph from its JSON spec (the inverse of RootedGraph.spec)."""
    family = spec.get("family")
    params = dict(spec.get("params", {}))
    if family in FAMILIES:
        return make_family(family, **params)
    if family == "fisher":
        return fisher_transform(graph_from_spec(params["base"]))
    if family == "semicubic":
        if params.get("coloring") != "builtin":
            raise GraphError("only the built-in coloring can be rebuilt from a spec")
        return fisher_semicubic(graph_from_spec(params["base"]))
    if family == "cylinder":
        return quotient_cylinder(params["m"])
    raise GraphError(f"unsupported family {family!r}")

