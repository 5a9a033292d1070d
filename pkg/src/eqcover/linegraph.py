"""Line graph construction.

The line graph L(G) has one vertex per edge of G, adjacent exactly when
the two edges share an endpoint.  Vertex i of L(G) IS edge i of G (the
numbering is the identity on edge indices), which keeps covering
certificates over L(G) human-checkable against the host edge list.

For each host vertex v the edges incident to v form a clique C_v of
L(G); every L(G)-vertex lies in exactly the two cliques of its edge's
endpoints.
"""

from __future__ import annotations

from itertools import combinations
from typing import FrozenSet, Tuple

from .graphs import Graph


class LineGraphMap:
    """A host graph together with its line graph and the cliques C_v."""

    __slots__ = ("host", "line", "edge_to_vertex", "cliques")

    def __init__(
        self,
        host: Graph,
        line: Graph,
        edge_to_vertex: Tuple[int, ...],
        cliques: Tuple[FrozenSet[int], ...],
    ):
        self.host = host
        self.line = line
        self.edge_to_vertex = edge_to_vertex
        self.cliques = cliques

    def __repr__(self) -> str:
        return (
            f"LineGraphMap(host=({self.host.n},{self.host.m}), "
            f"line=({self.line.n},{self.line.m}))"
        )


def line_graph(g: Graph) -> LineGraphMap:
    """Build L(g) with deterministic vertex numbering (edge index order).

    n(L) = m(g) and m(L) = sum over vertices of C(deg(v), 2): each pair
    of distinct edges at a shared endpoint contributes exactly one line
    edge (two simple edges share at most one vertex).
    """
    line_edges = []
    for v in range(g.n):
        for e, f in combinations(g.incident(v), 2):
            line_edges.append((e, f))
    line = Graph(g.m, line_edges)
    cliques = tuple(frozenset(g.incident(v)) for v in range(g.n))
    return LineGraphMap(g, line, tuple(range(g.m)), cliques)
