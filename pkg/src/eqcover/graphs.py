"""Simple undirected graphs with canonical edge indexing.

Vertices are the integers 0..n-1.  Edges are unordered pairs stored
normalized (u < v) and sorted lexicographically; the index of an edge is
its position in that sorted list.  Every other object in this package
(orientations, covers, colorings) refers to edges by these indices, so
the indexing must be reproducible: identical inputs always produce the
same edge order.

Self-loops and duplicate edges are rejected.  Graphs with two vertices
sharing a closed neighborhood need no special treatment here; callers
that want the reduction can apply it themselves.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

Edge = Tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when a graph file violates the text format."""


class NotBipartiteError(ValueError):
    """Raised when a bipartition is required but an odd cycle exists.

    The offending cycle (a vertex sequence of odd length) is stored in
    ``self.cycle``.
    """

    def __init__(self, cycle: Sequence[int]):
        self.cycle = tuple(cycle)
        super().__init__(f"graph is not bipartite: odd cycle {self.cycle}")


class Graph:
    """Immutable simple undirected graph.

    Attributes:
        n: number of vertices.
        edges: tuple of (u, v) pairs with u < v, lexicographically sorted.
        adjacency: per-vertex tuple of sorted neighbors.
    """

    __slots__ = ("n", "edges", "adjacency", "_index", "_incident")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for i in range(1, len(norm)):
            if norm[i] == norm[i - 1]:
                raise ValueError(f"duplicate edge {norm[i]}")
        self.n = n
        self.edges: Tuple[Edge, ...] = tuple(norm)
        adj: List[List[int]] = [[] for _ in range(n)]
        inc: List[List[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append(v)
            adj[v].append(u)
            inc[u].append(i)
            inc[v].append(i)
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(a)) for a in adj
        )
        # incident edge indices are already ascending: edges are sorted
        self._incident: Tuple[Tuple[int, ...], ...] = tuple(tuple(x) for x in inc)
        self._index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def index_of(self, u: int, v: int) -> int:
        try:
            return self._index[(min(u, v), max(u, v))]
        except KeyError:
            raise ValueError(f"({u}, {v}) is not an edge") from None

    def incident(self, v: int) -> Tuple[int, ...]:
        """Indices of the edges touching v, ascending."""
        return self._incident[v]

    def other_endpoint(self, edge_index: int, v: int) -> int:
        u, w = self.edges[edge_index]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {edge_index}")

    def has_incidence_pairs(self) -> bool:
        """True if some vertex has two distinct incident edges.

        This is exactly the condition under which orientation-covering
        and elbow-covering constraints exist; graphs without such a pair
        (matchings, edgeless graphs) are covered by zero orientations.
        """
        return any(len(a) >= 2 for a in self.adjacency)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by `vertices`, relabeled 0..len-1 in sorted order."""
    keep = sorted(set(vertices))
    if keep and not (0 <= keep[0] and keep[-1] < g.n):
        raise ValueError("vertex out of range")
    relabel = {v: i for i, v in enumerate(keep)}
    edges = [
        (relabel[u], relabel[v])
        for (u, v) in g.edges
        if u in relabel and v in relabel
    ]
    return Graph(len(keep), edges)


def bipartition(g: Graph) -> List[int]:
    """2-color g by breadth-first search; sides are 0 and 1.

    Component roots are the smallest unvisited vertices and get side 0.
    Raises NotBipartiteError carrying an odd cycle when none exists.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = [root]
        while queue:
            nxt: List[int] = []
            for u in queue:
                for v in g.adjacency[u]:
                    if side[v] < 0:
                        side[v] = 1 - side[u]
                        parent[v] = u
                        nxt.append(v)
                    elif side[v] == side[u]:
                        raise NotBipartiteError(_odd_cycle(parent, u, v))
            queue = nxt
    return side


def _odd_cycle(parent: List[int], u: int, v: int) -> List[int]:
    """Cycle through the tree paths of u and v up to their meeting point."""
    up, vp = [u], [v]
    seen = {u: 0}
    x = u
    while parent[x] >= 0:
        x = parent[x]
        seen[x] = len(up)
        up.append(x)
    x = v
    while x not in seen:
        x = parent[x]
        vp.append(x)
    cycle = up[: seen[x] + 1]
    cycle.reverse()
    cycle.extend(vp[:-1])
    return cycle


def find_triangle(g: Graph) -> Optional[Tuple[int, int, int]]:
    """Lexicographically first triangle (a, b, c) with a < b < c, or None."""
    adjsets = [set(a) for a in g.adjacency]
    for a, b in g.edges:
        common = adjsets[a] & adjsets[b]
        later = [c for c in common if c > b]
        if later:
            return (a, b, min(later))
    return None


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: triangle-free preserving, raises chi by one.

    Labeling: original vertices keep 0..n-1, the shadow of vertex i is
    n+i, and the apex is 2n.
    """
    n = g.n
    edges = list(g.edges)
    for u, v in g.edges:
        edges.append((u, n + v))
        edges.append((v, n + u))
    for i in range(n):
        edges.append((n + i, 2 * n))
    return Graph(2 * n + 1, edges)


def _complete(p: int) -> Graph:
    if p < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(p, [(u, v) for u in range(p) for v in range(u + 1, p)])


def _cycle(p: int) -> Graph:
    if p < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(p, [(i, (i + 1) % p) for i in range(p)])


def _path(p: int) -> Graph:
    if p < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(p, [(i, i + 1) for i in range(p - 1)])


def _star(p: int) -> Graph:
    if p < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(p + 1, [(0, i) for i in range(1, p + 1)])


def _complete_bipartite(p: int) -> Graph:
    # single-parameter family: the balanced K_{p,p}
    if p < 1:
        raise ValueError("complete bipartite needs at least one vertex per side")
    return Graph(2 * p, [(a, p + b) for a in range(p) for b in range(p)])


def _petersen(p: int) -> Graph:
    # generalized Petersen graph GP(p, 2); GP(5, 2) is the Petersen graph
    if p < 5:
        raise ValueError("petersen family needs parameter >= 5")
    edges = []
    for i in range(p):
        edges.append((i, (i + 1) % p))  # outer cycle
        edges.append((p + i, p + (i + 2) % p))  # inner star polygon
        edges.append((i, p + i))  # spokes
    return Graph(2 * p, edges)


def _mycielski_iterate(t: int) -> Graph:
    # iterate 2 is a single edge; 3 is the 5-cycle; 4 is the Grotzsch graph
    if t < 2:
        raise ValueError("mycielski iterate needs parameter >= 2")
    g = Graph(2, [(0, 1)])
    for _ in range(t - 2):
        g = mycielskian(g)
    return g


def _triangle_plus_pendant() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def generate_family(family: str, parameter: Optional[int] = None) -> Graph:
    """Canonical named test graphs with deterministic labelings.

    Families: complete(n), cycle(n>=3), path(n>=1), star(leaves>=1),
    complete-bipartite(p) = K_{p,p}, petersen(p>=5) = GP(p,2),
    mycielski-iterate(t>=2), triangle-plus-pendant (no parameter).
    """
    name = family.replace("_", "-").lower()
    if name == "triangle-plus-pendant":
        if parameter is not None:
            raise ValueError("triangle-plus-pendant takes no parameter")
        return _triangle_plus_pendant()
    makers = {
        "complete": _complete,
        "cycle": _cycle,
        "path": _path,
        "star": _star,
        "complete-bipartite": _complete_bipartite,
        "petersen": _petersen,
        "mycielski-iterate": _mycielski_iterate,
    }
    if name not in makers:
        raise ValueError(f"unknown family {family!r}")
    if parameter is None:
        raise ValueError(f"family {family!r} requires an integer parameter")
    return makers[name](parameter)


def parse_graph(text: str) -> Graph:
    """Parse the graph file format.

    Format: optional ``#`` comment lines, a header ``p <n> <m>``, then
    exactly m lines ``<u> <v>`` with 0 <= u < v < n and no duplicates.
    Violations raise GraphFormatError naming the 1-based line number.
    """
    header: Optional[Tuple[int, int]] = None
    edges: List[Edge] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "p" or len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected header 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header") from None
            if n < 0 or m < 0:
                raise GraphFormatError(f"line {lineno}: negative header value")
            header = (n, m)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected '<u> <v>'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint") from None
        n = header[0]
        if not (0 <= u < v < n):
            raise GraphFormatError(
                f"line {lineno}: edge ({u}, {v}) must satisfy 0 <= u < v < {n}"
            )
        if (u, v) in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(edges) != header[1]:
        raise GraphFormatError(
            f"header declares m={header[1]} but found {len(edges)} edge lines"
        )
    return Graph(header[0], edges)


def write_graph(g: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    lines.append(f"p {g.n} {g.m}")
    for u, v in g.edges:
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def read_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph_file(path: str, g: Graph, comment: Optional[str] = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_graph(g, comment))
