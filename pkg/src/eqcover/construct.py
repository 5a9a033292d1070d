"""Constructive conversions between covering certificates.

Each function here emits a certificate that the verify module accepts;
the proofs behind them are constructive, so the outputs double as
machine-checkable evidence for the size relations between the
invariants:

    eq(L(G)) <= sigma(G) <= 3 eq(L(G))       (analogues / three-orientation split)
    elb(G) <= sigma(G) <= 2 elb(G)           (reversal doubling)
    elb(K_n) = ceil(log2 log2 n) + 1, n >= 3 (self-composition doubling)
    sigma(G) <= sigma(K_c) for any proper c-coloring (pullback)

Arbitrary direction choices are everywhere fixed as low-endpoint to
high-endpoint, so identical inputs give identical certificates.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .covers import EquivalenceCover, EquivalenceSubgraph, OrientationCover, Violation
from .exact import Budget, exact_chromatic, greedy_coloring
from .graphs import Graph, bipartition, find_triangle, generate_family
from .linegraph import LineGraphMap
from .orientations import (
    Coloring,
    Orientation,
    Permutation,
    permutation_to_orientation,
    pullback_orientation,
)
from .verify import (
    incidence_signatures,
    verify_elbow_cover,
    verify_equivalence_cover,
    verify_orientation_cover,
)


class InvalidCoverError(ValueError):
    """An input cover failed verification; the witness is ``violation``."""

    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(f"input cover is invalid: {violation.line()}")


class TriangleError(ValueError):
    """A triangle-free host was required; ``triangle`` is the witness."""

    def __init__(self, triangle: Tuple[int, int, int]):
        self.triangle = triangle
        super().__init__(f"host graph contains triangle {triangle}")


class StructureError(ValueError):
    """A class shape that cannot occur in a line graph's equivalence subgraph."""


# Five permutations of 16 elements (ranks, 0-based) whose induced acyclic
# orientations form an orientation covering of K_16 of size five.
K16_RANK_ROWS: Tuple[Tuple[int, ...], ...] = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15),
    (12, 10, 9, 5, 3, 8, 4, 2, 6, 1, 11, 7, 13, 14, 15, 0),
    (13, 10, 9, 2, 7, 11, 4, 6, 1, 8, 3, 5, 14, 15, 0, 12),
    (14, 6, 7, 8, 5, 3, 2, 11, 9, 10, 4, 1, 15, 0, 12, 13),
    (15, 4, 3, 9, 10, 2, 11, 5, 8, 6, 1, 7, 0, 12, 13, 14),
)

# Elbow covering of K_4 of size two: vertex orders (0,1,2,3) and (2,0,3,1).
K4_ELBOW_ORDERS: Tuple[Tuple[int, ...], ...] = ((0, 1, 2, 3), (2, 0, 3, 1))

# Orientation covering of K_4 of size three, pinned from the exact solver
# (edge order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3); bit 1 reverses).
K4_SIGMA3_DIRECTIONS: Tuple[Tuple[int, ...], ...] = (
    (0, 0, 0, 1, 1, 0),
    (1, 1, 1, 0, 0, 0),
    (1, 1, 1, 1, 1, 1),
)


def k16_table_cover() -> Tuple[Tuple[Permutation, ...], OrientationCover]:
    """The five hardcoded permutations and their induced orientations of K_16."""
    g = generate_family("complete", 16)
    perms = tuple(Permutation(row) for row in K16_RANK_ROWS)
    orientations = [permutation_to_orientation(g, p) for p in perms]
    return perms, OrientationCover((g.n, g.m), orientations, "orientation")


def k4_sigma3_cover() -> OrientationCover:
    """The pinned size-three orientation covering of K_4."""
    return OrientationCover(
        (4, 6), [Orientation((4, 6), bits) for bits in K4_SIGMA3_DIRECTIONS]
    )


def k4_elbow_base() -> OrientationCover:
    """The size-two elbow covering of K_4 from the two pinned vertex orders."""
    g = generate_family("complete", 4)
    orientations = [
        permutation_to_orientation(g, Permutation.from_order(order))
        for order in K4_ELBOW_ORDERS
    ]
    return OrientationCover((4, 6), orientations, "elbow")


# ---------------------------------------------------------------------------
# orientation covers <-> equivalence covers of the line graph
# ---------------------------------------------------------------------------


def analogue(lm: LineGraphMap, o: Orientation) -> EquivalenceSubgraph:
    """Equivalence subgraph of L(G) whose classes are the out-edge sets.

    One class per host vertex with out-degree >= 1; the class members
    are L(G)-vertices (= host edge indices).  Classes are disjoint
    because every edge is out of exactly one endpoint, and each class
    induces a clique of L(G) since its edges share the tail vertex.
    """
    o.require_match(lm.host)
    classes = []
    for v in range(lm.host.n):
        out = o.out_edges(lm.host, v)
        if out:
            classes.append(tuple(out))
    return tuple(classes)


def eq_cover_from_orientation_cover(
    lm: LineGraphMap, c: OrientationCover
) -> EquivalenceCover:
    """Size-preserving conversion: analogues of a valid orientation covering
    cover all edges of L(G)."""
    c.require_match(lm.host)
    violation = verify_orientation_cover(lm.host, c)
    if violation is not None:
        raise InvalidCoverError(violation)
    return EquivalenceCover(lm.line.n, [analogue(lm, o) for o in c.orientations])


def _class_direction_bits(
    host: Graph, lm: LineGraphMap, classes: Sequence[Sequence[int]]
) -> List[Optional[int]]:
    """Directions forced by star classes; None where a class leaves the
    edge free (single-member classes and unclassed edges).

    For a class member e = uv with class mates all incident to u, the
    edge is sent out of u (toward v); symmetrically for v.  Mates split
    between the two endpoint cliques cannot occur in a verified cover of
    a triangle-free host.
    """
    bits: List[Optional[int]] = [None] * host.m
    for cls in classes:
        for e in cls:
            mates = [x for x in cls if x != e]
            if not mates:
                continue
            u, v = host.edges[e]
            if all(x in lm.cliques[u] for x in mates):
                bits[e] = 0  # out of the low endpoint u
            elif all(x in lm.cliques[v] for x in mates):
                bits[e] = 1
            else:
                raise StructureError(
                    f"class {tuple(cls)} is neither a star nor a triangle"
                )
    return bits


def orientation_cover_from_eq_cover_trifree(
    lm: LineGraphMap, c: EquivalenceCover
) -> OrientationCover:
    """Size-preserving converse for triangle-free hosts.

    Every clique of L(G) then lies inside a single endpoint clique C_v,
    so each class forces its edges out of the shared vertex; edges with
    no class mates default to low -> high.
    """
    host = lm.host
    triangle = find_triangle(host)
    if triangle is not None:
        raise TriangleError(triangle)
    violation = verify_equivalence_cover(lm.line, c)
    if violation is not None:
        raise InvalidCoverError(violation)
    shape = (host.n, host.m)
    orientations = []
    for sub in c.subgraphs:
        bits = _class_direction_bits(host, lm, sub)
        orientations.append(
            Orientation(shape, [0 if b is None else b for b in bits])
        )
    return OrientationCover(shape, orientations, "orientation")


def orientation_cover_from_eq_cover(
    lm: LineGraphMap, c: EquivalenceCover
) -> OrientationCover:
    """General converse: three orientations per equivalence subgraph.

    Classes of a line graph's equivalence subgraph are stars (edges
    sharing a host vertex) or host triangles.  Star classes point out of
    their shared vertex in all three emitted orientations; for the
    edge-disjoint triangle classes, orientation j makes each triangle's
    j-th vertex (sorted order) the source of its two edges, third edge
    low -> high; everything else low -> high.
    """
    host = lm.host
    violation = verify_equivalence_cover(lm.line, c)
    if violation is not None:
        raise InvalidCoverError(violation)
    shape = (host.n, host.m)
    orientations = []
    for sub in c.subgraphs:
        stars: List[Sequence[int]] = []
        triangles: List[Tuple[int, int, int]] = []
        for cls in sub:
            if len(cls) <= 1:
                continue  # no pairs to cover; Prop-2 fallback applies
            common = set(host.edges[cls[0]])
            for e in cls[1:]:
                common &= set(host.edges[e])
            if common:
                stars.append(cls)
            else:
                vertices = set()
                for e in cls:
                    vertices.update(host.edges[e])
                if len(cls) != 3 or len(vertices) != 3:
                    raise StructureError(
                        f"class {tuple(cls)} is neither a star nor a triangle"
                    )
                a, b, cc = sorted(vertices)
                triangles.append((a, b, cc))
        base = _class_direction_bits(host, lm, stars)
        for j in range(3):
            bits = list(base)
            for tri in triangles:
                src = tri[j]
                rest = [x for x in tri if x != src]
                for x in rest:
                    e = host.index_of(src, x)
                    bits[e] = 0 if host.edges[e][0] == src else 1
                bits[host.index_of(rest[0], rest[1])] = 0
            orientations.append(
                Orientation(shape, [0 if b is None else b for b in bits])
            )
    return OrientationCover(shape, orientations, "orientation")


# ---------------------------------------------------------------------------
# elbow machinery
# ---------------------------------------------------------------------------


def _require_complete(g: Graph) -> None:
    if g.m != g.n * (g.n - 1) // 2:
        raise ValueError(f"expected a complete graph, got n={g.n}, m={g.m}")


def elbow_double(g: Graph, base: OrientationCover) -> OrientationCover:
    """Square a complete-graph elbow covering: k orientations of K_n
    become k+1 of K_{n*n}.

    Vertices of the big graph are pairs (a, b) flattened as a*n + b.
    Orientation i <= k composes base orientation i with itself
    (first coordinate decides, ties broken by the second); the extra
    orientation composes base orientation 1 with its own reversal.
    """
    _require_complete(g)
    base.require_match(g)
    if base.k == 0:
        raise ValueError("doubling needs at least one orientation")
    violation = verify_elbow_cover(g, base)
    if violation is not None:
        raise InvalidCoverError(violation)
    n = g.n
    big = generate_family("complete", n * n)
    # arrow matrix per base orientation: heads[i][a][c] iff a -> c
    heads = []
    for o in base.orientations:
        mat = [[False] * n for _ in range(n)]
        for e in range(g.m):
            t, h = o.arrow(g, e)
            mat[t][h] = True
        heads.append(mat)
    orientations = []
    for i in range(base.k + 1):
        mat = heads[i] if i < base.k else heads[0]
        flip_second = i == base.k
        bits = []
        for x, y in big.edges:
            a, b = divmod(x, n)
            c, d = divmod(y, n)
            if a != c:
                out_of_x = mat[a][c]
            elif flip_second:
                out_of_x = mat[d][b]
            else:
                out_of_x = mat[b][d]
            bits.append(0 if out_of_x else 1)
        orientations.append(Orientation((big.n, big.m), bits))
    return OrientationCover((big.n, big.m), orientations, "elbow")


def restrict_cover_to_induced(
    g: Graph, cover: OrientationCover, vertices: Sequence[int]
) -> Tuple[Graph, OrientationCover]:
    """Restrict orientations to an induced subgraph (relabeled 0..len-1).

    Restriction preserves both covering properties: every constraint of
    the subgraph is a constraint of the original graph.
    """
    cover.require_match(g)
    keep = sorted(set(vertices))
    relabel = {v: i for i, v in enumerate(keep)}
    kept_edges = [
        (e, relabel[u], relabel[v])
        for e, (u, v) in enumerate(g.edges)
        if u in relabel and v in relabel
    ]
    sub = Graph(len(keep), [(u, v) for _, u, v in kept_edges])
    orientations = []
    for o in cover.orientations:
        # normalized edges keep their endpoint order under monotone relabeling
        bits = [o.direction[e] for e, _, _ in kept_edges]
        orientations.append(Orientation((sub.n, sub.m), bits))
    return sub, OrientationCover((sub.n, sub.m), orientations, cover.kind)


def elbow_cover_complete(n: int) -> OrientationCover:
    """Elbow covering of K_n of size ceil(log2 log2 n) + 1 for n >= 3.

    K_1 and K_2 have no 2-edge path and take the empty covering; 3 and 4
    restrict the pinned K_4 base; larger n doubles the base until the
    vertex count suffices, then restricts to the first n vertices.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n <= 2:
        g = generate_family("complete", n)
        return OrientationCover((g.n, g.m), [], "elbow")
    g = generate_family("complete", 4)
    cover = k4_elbow_base()
    while g.n < n:
        cover = elbow_double(g, cover)
        g = generate_family("complete", g.n * g.n)
    if g.n == n:
        return cover
    _, restricted = restrict_cover_to_induced(g, cover, range(n))
    return restricted


def orientation_cover_from_elbow(g: Graph, c: OrientationCover) -> OrientationCover:
    """Orientation covering of size 2k: the elbow orientations followed by
    their edge-wise reversals."""
    c.require_match(g)
    violation = verify_elbow_cover(g, c)
    if violation is not None:
        raise InvalidCoverError(violation)
    orientations = list(c.orientations) + [o.reversed() for o in c.orientations]
    return OrientationCover((g.n, g.m), orientations, "orientation")


# ---------------------------------------------------------------------------
# covers from colorings and colorings from covers
# ---------------------------------------------------------------------------


def bipartite_orientation_cover(g: Graph) -> OrientationCover:
    """Size-two covering of a bipartite graph: all of side A sources,
    then all of side B."""
    side = bipartition(g)  # NotBipartiteError carries an odd cycle
    bits = [0 if side[u] == 0 else 1 for u, v in g.edges]
    first = Orientation((g.n, g.m), bits)
    return OrientationCover((g.n, g.m), [first, first.reversed()], "orientation")


def cover_via_coloring(
    g: Graph,
    coloring: Optional[Coloring] = None,
    greedy: bool = False,
    budget: Optional[Budget] = None,
) -> OrientationCover:
    """Orientation covering pulled back from a covering of K_c, where c
    is the palette size of a proper coloring of g.

    Prefers the smallest known complete-graph base: the bipartite
    construction for c <= 2, the pinned size-3 covering of K_4 for
    c <= 4, the size-5 table covering of K_16 for c <= 16, and the
    reversal-doubled elbow covering of K_c (size 2 ceil(log2 log2 c) + 2)
    beyond.  With no coloring supplied, the exact solver provides one
    (or the greedy heuristic when ``greedy`` is set).
    """
    if coloring is None:
        if greedy:
            coloring = greedy_coloring(g)
        else:
            result = exact_chromatic(g, budget)
            if result.status != "exact":
                raise ValueError(
                    "chromatic search ran out of budget; pass greedy=True "
                    "or supply a coloring"
                )
            coloring = result.witness
    else:
        coloring.require_proper(g)
    dense = coloring.dense()
    c = dense.palette_size
    if c <= 2:
        return bipartite_orientation_cover(g)
    if c <= 4:
        base_g = generate_family("complete", 4)
        base = k4_sigma3_cover()
    elif c <= 16:
        base_g = generate_family("complete", 16)
        _, base = k16_table_cover()
    else:
        base_g = generate_family("complete", c)
        base = orientation_cover_from_elbow(base_g, elbow_cover_complete(c))
    pulled = [
        pullback_orientation(g, base_g, dense.colors, o) for o in base.orientations
    ]
    return OrientationCover((g.n, g.m), pulled, "orientation")


def elbow_cover_via_coloring(
    g: Graph,
    coloring: Optional[Coloring] = None,
    greedy: bool = False,
    budget: Optional[Budget] = None,
) -> OrientationCover:
    """Elbow covering pulled back from the squared-base covering of K_c,
    size ceil(log2 log2 c) + 1 for palette c >= 3 (two for c <= 2).

    The pullback stays an elbow covering even though distinct endpoints
    of a 2-edge path may share a color: the two edges then pull from one
    target edge, so their masks at the center coincide and cannot
    partition the index set.
    """
    if coloring is None:
        if greedy:
            coloring = greedy_coloring(g)
        else:
            result = exact_chromatic(g, budget)
            if result.status != "exact":
                raise ValueError(
                    "chromatic search ran out of budget; pass greedy=True "
                    "or supply a coloring"
                )
            coloring = result.witness
    else:
        coloring.require_proper(g)
    dense = coloring.dense()
    c = dense.palette_size
    if c <= 2:
        return bipartite_orientation_cover(g).with_kind("elbow")
    base_g = generate_family("complete", c)
    base = elbow_cover_complete(c)
    pulled = [
        pullback_orientation(g, base_g, dense.colors, o) for o in base.orientations
    ]
    return OrientationCover((g.n, g.m), pulled, kind="elbow")


def _representative_subsets(k: int, min_size: int = 0, max_size: Optional[int] = None) -> List[int]:
    """One representative per complementary pair {X, [k] \\ X}: the subset
    containing orientation index 0, ascending, size-filtered."""
    if max_size is None:
        max_size = k
    return [
        x
        for x in range(1 << k)
        if x & 1 and min_size <= bin(x).count("1") <= max_size
    ]


def coloring_from_elbow_cover(g: Graph, c: OrientationCover) -> Coloring:
    """Proper coloring with at most 2^(2^(k-1)) colors from a valid
    size-k elbow covering.

    For each representative subset X, the edges whose incidence
    signature equals X (or its complement) form a bipartite subgraph
    whose sides are forced locally: a vertex cannot see both X and its
    complement among its incident signatures, or the covering would
    leave a path uncovered.  The color is the tuple of sides over all
    representatives, compacted to a dense palette.
    """
    c.require_match(g)
    violation = verify_elbow_cover(g, c)
    if violation is not None:
        raise InvalidCoverError(violation)
    k = c.k
    if k == 0:
        if g.m == 0:
            return Coloring([0] * g.n)
        raise ValueError("a zero-orientation covering only colors edgeless graphs")
    sig = incidence_signatures(g, c)
    reps = _representative_subsets(k)
    side_tuples = []
    for v in range(g.n):
        masks = [sig.mask(v, e) for e in g.incident(v)]
        sides = []
        for x in reps:
            comp = sig.full ^ x
            on_x = any(m == x for m in masks)
            on_comp = any(m == comp for m in masks)
            assert not (on_x and on_comp), (
                "vertex sees a signature and its complement; "
                "impossible for a verified elbow covering"
            )
            sides.append(1 if on_comp else 0)  # untouched vertices default 0
        side_tuples.append(tuple(sides))
    palette: Dict[Tuple[int, ...], int] = {}
    colors = []
    for t in side_tuples:
        if t not in palette:
            palette[t] = len(palette)
        colors.append(palette[t])
    coloring = Coloring(colors)
    coloring.require_proper(g)
    return coloring


def coloring_from_orientation_cover(g: Graph, c: OrientationCover) -> Coloring:
    """Proper coloring with at most k + 2^(2^(k-1)-k-1) colors from a
    valid orientation covering of size k >= 3.

    Vertices of degree <= 1 are peeled first and greedily recolored
    last.  On the remaining core, vertices seeing a singleton signature
    {i} take the reserved color i (each such set is stable); the rest
    pair off under the representative subsets of middling size, whose
    side-products stay proper exactly as in the elbow extraction.
    """
    if c.k < 3:
        raise ValueError("needs a covering of size at least 3")
    c.require_match(g)
    violation = verify_orientation_cover(g, c)
    if violation is not None:
        raise InvalidCoverError(violation)
    k = c.k

    alive = [True] * g.n
    deg = list(g.degrees())
    peeled: List[int] = []
    while True:
        target = next(
            (v for v in range(g.n) if alive[v] and deg[v] <= 1), None
        )
        if target is None:
            break
        alive[target] = False
        peeled.append(target)
        for u in g.adjacency[target]:
            if alive[u]:
                deg[u] -= 1

    colors: Dict[int, int] = {}
    core_vertices = [v for v in range(g.n) if alive[v]]
    if core_vertices:
        core, core_cover = restrict_cover_to_induced(g, c, core_vertices)
        sig = incidence_signatures(core, core_cover)
        reserved: Dict[int, int] = {}
        for v in range(core.n):
            singles = [
                (sig.mask(v, e)).bit_length() - 1
                for e in core.incident(v)
                if bin(sig.mask(v, e)).count("1") == 1
            ]
            if singles:
                reserved[v] = min(singles)
        for u, v in core.edges:
            assert not (
                u in reserved and v in reserved and reserved[u] == reserved[v]
            ), "reserved-signature sets must be stable for a verified covering"
        reps = _representative_subsets(k, min_size=2, max_size=k - 2)
        palette: Dict[Tuple[int, ...], int] = {}
        for v in range(core.n):
            orig = core_vertices[v]
            if v in reserved:
                colors[orig] = reserved[v]
                continue
            masks = [sig.mask(v, e) for e in core.incident(v)]
            sides = []
            for x in reps:
                comp = sig.full ^ x
                on_x = any(m == x for m in masks)
                on_comp = any(m == comp for m in masks)
                assert not (on_x and on_comp)
                sides.append(1 if on_comp else 0)
            key = tuple(sides)
            if key not in palette:
                palette[key] = len(palette)
            colors[orig] = k + palette[key]

    for v in reversed(peeled):
        taken = {colors[u] for u in g.adjacency[v] if u in colors}
        pick = 0
        while pick in taken:
            pick += 1
        colors[v] = pick

    coloring = Coloring([colors[v] for v in range(g.n)])
    coloring.require_proper(g)
    bound = k + (1 << ((1 << (k - 1)) - k - 1))
    assert coloring.palette_size <= bound
    return coloring
