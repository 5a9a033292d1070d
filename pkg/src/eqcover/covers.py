"""Covering certificates and their violation witnesses.

A cover is a claim: a list of orientations (orientation or elbow
covering), permutations (eyebrow covering), or clique-partitions
(equivalence covering) said to satisfy a covering property over one
reference graph.  Cover objects only carry the claim; the ``verify``
module checks it and returns a Violation on failure.

Every Violation is self-certifying: ``recheck(graph, cover)`` re-tests
the witness against the definition in isolation, so a reported witness
can be trusted without re-running the full verifier.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .graphs import Graph
from .orientations import Coloring, Orientation, Permutation, ShapeError

COVER_KINDS = ("orientation", "elbow", "eyebrow", "equivalence")


class CoverFormatError(ValueError):
    """Raised when a cover file violates the text format."""


class OrientationCover:
    """k orientations of one reference graph; kind is a label only.

    The kind tag records intent ('orientation' or 'elbow') for file
    round-trips; verifiers accept either tag, and a valid orientation
    covering is always a valid elbow covering.
    """

    __slots__ = ("graph_shape", "orientations", "kind")

    def __init__(
        self,
        graph_shape: Tuple[int, int],
        orientations: Sequence[Orientation],
        kind: str = "orientation",
    ):
        if kind not in ("orientation", "elbow"):
            raise ValueError(f"kind must be 'orientation' or 'elbow', got {kind!r}")
        shape = (int(graph_shape[0]), int(graph_shape[1]))
        for o in orientations:
            if o.graph_shape != shape:
                raise ShapeError(
                    f"orientation shape {o.graph_shape} != cover shape {shape}"
                )
        self.graph_shape = shape
        self.orientations: Tuple[Orientation, ...] = tuple(orientations)
        self.kind = kind

    @property
    def k(self) -> int:
        return len(self.orientations)

    def require_match(self, g: Graph) -> None:
        if self.graph_shape != (g.n, g.m):
            raise ShapeError(
                f"cover shape {self.graph_shape} does not match graph {(g.n, g.m)}"
            )

    def with_kind(self, kind: str) -> "OrientationCover":
        return OrientationCover(self.graph_shape, self.orientations, kind)

    def __repr__(self) -> str:
        return f"OrientationCover(kind={self.kind}, k={self.k}, shape={self.graph_shape})"


class EyebrowCover:
    """k permutations of the reference graph's vertices."""

    __slots__ = ("n", "permutations")

    def __init__(self, n: int, permutations: Sequence[Permutation]):
        for p in permutations:
            if len(p) != n:
                raise ShapeError(f"permutation length {len(p)} != n={n}")
        self.n = int(n)
        self.permutations: Tuple[Permutation, ...] = tuple(permutations)

    @property
    def k(self) -> int:
        return len(self.permutations)

    def __repr__(self) -> str:
        return f"EyebrowCover(k={self.k}, n={self.n})"


# An equivalence subgraph is a list of pairwise-disjoint vertex classes,
# each claimed to induce a clique of the host.
EquivalenceSubgraph = Tuple[Tuple[int, ...], ...]


class EquivalenceCover:
    """k equivalence subgraphs over one host graph."""

    __slots__ = ("n", "subgraphs")

    def __init__(self, n: int, subgraphs: Sequence[Sequence[Sequence[int]]]):
        self.n = int(n)
        subs: List[EquivalenceSubgraph] = []
        for sub in subgraphs:
            classes = []
            for cls in sub:
                cls = tuple(sorted(int(v) for v in cls))
                if not cls:
                    raise ValueError("empty class in equivalence subgraph")
                classes.append(cls)
            subs.append(tuple(classes))
        self.subgraphs: Tuple[EquivalenceSubgraph, ...] = tuple(subs)

    @property
    def k(self) -> int:
        return len(self.subgraphs)

    def __repr__(self) -> str:
        return f"EquivalenceCover(k={self.k}, n={self.n})"


class Violation:
    """Base class for covering-property counterexamples."""

    kind = "generic"

    def line(self) -> str:
        raise NotImplementedError

    def recheck(self, g: Graph, cover) -> bool:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.line()!r}>"

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self.line() == other.line()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.line()))


class OrientationViolation(Violation):
    """A vertex with two incident edges never jointly directed out of it."""

    kind = "orientation"

    def __init__(self, vertex: int, e: Tuple[int, int], f: Tuple[int, int]):
        self.vertex = vertex
        self.e = e
        self.f = f

    def line(self) -> str:
        return f"VIOLATION v={self.vertex} e=({self.e[0]},{self.e[1]}) f=({self.f[0]},{self.f[1]})"

    def recheck(self, g: Graph, cover: OrientationCover) -> bool:
        ei = g.index_of(*self.e)
        fi = g.index_of(*self.f)
        if ei == fi or self.vertex not in self.e or self.vertex not in self.f:
            return False
        return not any(
            o.directs_out_of(g, ei, self.vertex) and o.directs_out_of(g, fi, self.vertex)
            for o in cover.orientations
        )


class ElbowViolation(Violation):
    """A 2-edge path traversed as a directed path in every orientation."""

    kind = "elbow"

    def __init__(self, path: Tuple[int, int, int]):
        self.path = path

    def line(self) -> str:
        u, v, w = self.path
        return f"VIOLATION path=({u},{v},{w})"

    def recheck(self, g: Graph, cover: OrientationCover) -> bool:
        u, v, w = self.path
        if u == w or not (g.has_edge(u, v) and g.has_edge(v, w)):
            return False
        ei, fi = g.index_of(u, v), g.index_of(v, w)
        for o in cover.orientations:
            forward = o.arrow(g, ei) == (u, v) and o.arrow(g, fi) == (v, w)
            backward = o.arrow(g, fi) == (w, v) and o.arrow(g, ei) == (v, u)
            if not (forward or backward):
                return False
        return True


class EyebrowViolation(Violation):
    """An edge and a third vertex ranked strictly between its endpoints
    by every permutation."""

    kind = "eyebrow"

    def __init__(self, edge: Tuple[int, int], w: int):
        self.edge = edge
        self.w = w

    def line(self) -> str:
        return f"VIOLATION edge=({self.edge[0]},{self.edge[1]}) w={self.w}"

    def recheck(self, g: Graph, cover: EyebrowCover) -> bool:
        u, v = self.edge
        if self.w in (u, v) or not g.has_edge(u, v):
            return False
        for p in cover.permutations:
            lo, hi = sorted((p(u), p(v)))
            if not (lo < p(self.w) < hi):
                return False
        return True


class EquivalenceViolation(Violation):
    """Witness against an equivalence covering.

    Three subkinds:
      uncovered    -- a host edge inside no class of any subgraph
      not-a-clique -- (subgraph, class) with a missing host edge
      overlap      -- (subgraph, two classes) sharing a vertex
    """

    kind = "equivalence"

    def __init__(
        self,
        subkind: str,
        edge: Optional[Tuple[int, int]] = None,
        subgraph: Optional[int] = None,
        class_index: Optional[int] = None,
        class_pair: Optional[Tuple[int, int]] = None,
        vertex: Optional[int] = None,
    ):
        if subkind not in ("uncovered", "not-a-clique", "overlap"):
            raise ValueError(f"unknown subkind {subkind!r}")
        self.subkind = subkind
        self.edge = edge
        self.subgraph = subgraph
        self.class_index = class_index
        self.class_pair = class_pair
        self.vertex = vertex

    def line(self) -> str:
        if self.subkind == "uncovered":
            return f"VIOLATION uncovered=({self.edge[0]},{self.edge[1]})"
        if self.subkind == "not-a-clique":
            return (
                f"VIOLATION subgraph={self.subgraph} class={self.class_index} "
                f"missing=({self.edge[0]},{self.edge[1]})"
            )
        return (
            f"VIOLATION subgraph={self.subgraph} "
            f"classes=({self.class_pair[0]},{self.class_pair[1]}) vertex={self.vertex}"
        )

    def recheck(self, h: Graph, cover: EquivalenceCover) -> bool:
        if self.subkind == "uncovered":
            u, v = self.edge
            if not h.has_edge(u, v):
                return False
            for sub in cover.subgraphs:
                for cls in sub:
                    if u in cls and v in cls:
                        return False
            return True
        if self.subkind == "not-a-clique":
            cls = cover.subgraphs[self.subgraph][self.class_index]
            u, v = self.edge
            return u in cls and v in cls and not h.has_edge(u, v)
        a, b = self.class_pair
        sub = cover.subgraphs[self.subgraph]
        return self.vertex in sub[a] and self.vertex in sub[b]


# ---------------------------------------------------------------------------
# cover file format
#
#   cover <kind> <k> <n> <m>
#
# orientation / elbow: k blocks, each "block <i>" (1-based) followed by
# exactly m lines "<u> <v>" meaning u -> v; the undirected pairs must be
# exactly the graph's edge set.
# eyebrow: k lines "perm <r_0> ... <r_{n-1}>" (rank of each vertex).
# equivalence: k blocks, each "block <i>" followed by one line
# "clique <v_1> <v_2> ..." per class.
# "#" comment lines and blank lines are ignored.
# ---------------------------------------------------------------------------


def write_cover_for(g: Graph, cover) -> str:
    """Serialize a cover against its reference graph."""
    lines: List[str] = []
    if isinstance(cover, OrientationCover):
        cover.require_match(g)
        lines.append(f"cover {cover.kind} {cover.k} {g.n} {g.m}")
        for i, o in enumerate(cover.orientations, start=1):
            lines.append(f"block {i}")
            for e in range(g.m):
                t, h = o.arrow(g, e)
                lines.append(f"{t} {h}")
    elif isinstance(cover, EyebrowCover):
        if cover.n != g.n:
            raise ShapeError(f"cover n={cover.n} does not match graph n={g.n}")
        lines.append(f"cover eyebrow {cover.k} {g.n} {g.m}")
        for p in cover.permutations:
            lines.append("perm " + " ".join(str(r) for r in p.values))
    elif isinstance(cover, EquivalenceCover):
        if cover.n != g.n:
            raise ShapeError(f"cover n={cover.n} does not match graph n={g.n}")
        lines.append(f"cover equivalence {cover.k} {g.n} {g.m}")
        for i, sub in enumerate(cover.subgraphs, start=1):
            lines.append(f"block {i}")
            for cls in sub:
                lines.append("clique " + " ".join(str(v) for v in cls))
    else:
        raise TypeError(f"cannot serialize {type(cover).__name__}")
    return "\n".join(lines) + "\n"


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_cover(text: str, g: Graph):
    """Parse a cover file against its reference graph.

    Returns an OrientationCover, EyebrowCover, or EquivalenceCover
    according to the header kind.  Raises CoverFormatError with 1-based
    line numbers on malformed input.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise CoverFormatError("missing 'cover <kind> <k> <n> <m>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 5 or parts[0] != "cover":
        raise CoverFormatError(f"line {lineno}: expected 'cover <kind> <k> <n> <m>'")
    kind = parts[1]
    if kind not in COVER_KINDS:
        raise CoverFormatError(f"line {lineno}: unknown cover kind {kind!r}")
    try:
        k, n, m = int(parts[2]), int(parts[3]), int(parts[4])
    except ValueError:
        raise CoverFormatError(f"line {lineno}: non-integer header field") from None
    if k < 0:
        raise CoverFormatError(f"line {lineno}: negative k")
    if (n, m) != (g.n, g.m):
        raise CoverFormatError(
            f"line {lineno}: header shape ({n}, {m}) does not match graph "
            f"({g.n}, {g.m})"
        )
    body = lines[1:]
    if kind in ("orientation", "elbow"):
        return _parse_orientation_blocks(body, g, k, kind)
    if kind == "eyebrow":
        return _parse_eyebrow(body, g, k)
    return _parse_equivalence(body, g, k)


def _parse_orientation_blocks(body, g: Graph, k: int, kind: str) -> OrientationCover:
    orientations = []
    pos = 0
    for i in range(1, k + 1):
        if pos >= len(body):
            raise CoverFormatError(f"missing 'block {i}'")
        lineno, line = body[pos]
        if line.split() != ["block", str(i)]:
            raise CoverFormatError(f"line {lineno}: expected 'block {i}'")
        pos += 1
        bits: List[Optional[int]] = [None] * g.m
        for _ in range(g.m):
            if pos >= len(body):
                raise CoverFormatError(f"block {i}: expected {g.m} arrow lines")
            lineno, line = body[pos]
            pos += 1
            parts = line.split()
            if len(parts) != 2:
                raise CoverFormatError(f"line {lineno}: expected '<u> <v>'")
            try:
                t, h = int(parts[0]), int(parts[1])
            except ValueError:
                raise CoverFormatError(f"line {lineno}: non-integer endpoint") from None
            if not g.has_edge(t, h):
                raise CoverFormatError(
                    f"line {lineno}: ({t}, {h}) is not an edge of the graph"
                )
            e = g.index_of(t, h)
            if bits[e] is not None:
                raise CoverFormatError(
                    f"line {lineno}: edge ({min(t, h)}, {max(t, h)}) appears twice in block {i}"
                )
            bits[e] = 0 if t < h else 1
        orientations.append(Orientation((g.n, g.m), bits))
    if pos != len(body):
        lineno, _ = body[pos]
        raise CoverFormatError(f"line {lineno}: trailing content after block {k}")
    return OrientationCover((g.n, g.m), orientations, kind)


def _parse_eyebrow(body, g: Graph, k: int) -> EyebrowCover:
    perms = []
    if len(body) != k:
        raise CoverFormatError(f"expected {k} 'perm' lines, found {len(body)}")
    for lineno, line in body:
        parts = line.split()
        if parts[0] != "perm" or len(parts) != g.n + 1:
            raise CoverFormatError(
                f"line {lineno}: expected 'perm' followed by {g.n} ranks"
            )
        try:
            ranks = [int(x) for x in parts[1:]]
        except ValueError:
            raise CoverFormatError(f"line {lineno}: non-integer rank") from None
        try:
            perms.append(Permutation(ranks))
        except ValueError as exc:
            raise CoverFormatError(f"line {lineno}: {exc}") from None
    return EyebrowCover(g.n, perms)


def _parse_equivalence(body, g: Graph, k: int) -> EquivalenceCover:
    subs: List[List[Tuple[int, ...]]] = []
    current: Optional[List[Tuple[int, ...]]] = None
    expect_block = 1
    for lineno, line in body:
        parts = line.split()
        if parts[0] == "block":
            if parts != ["block", str(expect_block)]:
                raise CoverFormatError(f"line {lineno}: expected 'block {expect_block}'")
            expect_block += 1
            current = []
            subs.append(current)
        elif parts[0] == "clique":
            if current is None:
                raise CoverFormatError(f"line {lineno}: 'clique' before any 'block'")
            if len(parts) < 2:
                raise CoverFormatError(f"line {lineno}: empty clique")
            try:
                vs = [int(x) for x in parts[1:]]
            except ValueError:
                raise CoverFormatError(f"line {lineno}: non-integer vertex") from None
            if len(set(vs)) != len(vs):
                raise CoverFormatError(f"line {lineno}: repeated vertex in clique")
            for v in vs:
                if not (0 <= v < g.n):
                    raise CoverFormatError(f"line {lineno}: vertex {v} out of range")
            current.append(tuple(sorted(vs)))
        else:
            raise CoverFormatError(f"line {lineno}: expected 'block' or 'clique'")
    if len(subs) != k:
        raise CoverFormatError(f"expected {k} blocks, found {len(subs)}")
    return EquivalenceCover(g.n, subs)


def write_coloring(coloring: Coloring) -> str:
    return "".join(f"{v} {c}\n" for v, c in enumerate(coloring.colors))


def parse_coloring(text: str, n: int) -> Coloring:
    colors: List[Optional[int]] = [None] * n
    count = 0
    for lineno, line in _significant_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise CoverFormatError(f"line {lineno}: expected '<v> <color>'")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise CoverFormatError(f"line {lineno}: non-integer field") from None
        if not (0 <= v < n):
            raise CoverFormatError(f"line {lineno}: vertex {v} out of range")
        if colors[v] is not None:
            raise CoverFormatError(f"line {lineno}: vertex {v} colored twice")
        if c < 0:
            raise CoverFormatError(f"line {lineno}: negative color")
        colors[v] = c
        count += 1
    if count != n:
        raise CoverFormatError(f"expected {n} colored vertices, found {count}")
    return Coloring([c for c in colors])
