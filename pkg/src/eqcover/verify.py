"""Certificate verifiers.

Everything here reduces to incidence signatures.  For a cover by k
orientations and an incidence (v, e) of vertex v with edge e, the
signature sig(v, e) is the k-bit mask of orientations directing e out
of v.  By construction sig(u, uv) is the bitwise complement of
sig(v, uv) within the k used bits.  The two covering properties become
pair predicates on signatures at a shared vertex:

  orientation covering:  sig(v, e) AND sig(v, f) != 0
        (some orientation directs both e and f out of v)

  elbow covering:        sig(v, e) and sig(v, f) do not partition [k]
        (some orientation has e, f both out of v or both into v;
         when the masks partition, the 2-edge path through v is
         traversed as a directed path by every orientation)

Pair enumeration is vectorized with numpy per vertex while k fits in a
machine word; wider covers fall back to a plain loop over Python ints.

Verifiers return None for a valid cover and the lexicographically first
Violation otherwise (smallest vertex, then smallest pair of edge
indices; for eyebrow coverings, smallest edge index then third vertex).
They are pure: permuting the cover's orientation list never changes the
result status.
"""

from __future__ import annotations

from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from .covers import (
    ElbowViolation,
    EquivalenceCover,
    EquivalenceViolation,
    EyebrowCover,
    EyebrowViolation,
    OrientationCover,
    OrientationViolation,
)
from .graphs import Graph
from .orientations import ShapeError

_NUMPY_MAX_K = 62  # int64 bit masks; beyond this use Python integers


def _out_of_low_words(g: Graph, cover: OrientationCover) -> List[int]:
    """Per-edge mask of the orientations directing the edge out of its
    low endpoint (direction bit 0)."""
    words = [0] * g.m
    for i, o in enumerate(cover.orientations):
        bit = 1 << i
        direction = o.direction
        for e in range(g.m):
            if direction[e] == 0:
                words[e] |= bit
    return words


class IncidenceSignature:
    """Signature table sig(v, e) for one cover over one graph."""

    __slots__ = ("graph", "k", "full", "_words")

    def __init__(self, graph: Graph, k: int, words: List[int]):
        self.graph = graph
        self.k = k
        self.full = (1 << k) - 1
        self._words = tuple(words)

    def mask(self, v: int, edge_index: int) -> int:
        """Bit i set = orientation i directs the edge out of v."""
        u, w = self.graph.edges[edge_index]
        if v == u:
            return self._words[edge_index]
        if v == w:
            return self.full ^ self._words[edge_index]
        raise ValueError(f"vertex {v} is not an endpoint of edge {edge_index}")

    def indices(self, v: int, edge_index: int) -> Tuple[int, ...]:
        """Orientation indices (0-based) directing the edge out of v."""
        m = self.mask(v, edge_index)
        return tuple(i for i in range(self.k) if (m >> i) & 1)


def incidence_signatures(g: Graph, cover: OrientationCover) -> IncidenceSignature:
    cover.require_match(g)
    return IncidenceSignature(g, cover.k, _out_of_low_words(g, cover))


def _viewed(sig: IncidenceSignature, v: int) -> List[int]:
    g = sig.graph
    return [sig.mask(v, e) for e in g.incident(v)]


def _first_bad_pair(viewed: List[int], full: int, elbow: bool) -> Optional[Tuple[int, int]]:
    """First (i, j), i < j, violating the pair predicate, row-major order."""
    d = len(viewed)
    if d < 2:
        return None
    if full.bit_length() <= _NUMPY_MAX_K:
        s = np.asarray(viewed, dtype=np.int64)
        both_empty = (s[:, None] & s[None, :]) == 0
        if elbow:
            bad = both_empty & ((s[:, None] | s[None, :]) == full)
        else:
            bad = both_empty
        bad = np.triu(bad, k=1)
        flat = bad.ravel()
        pos = int(np.argmax(flat))
        if not flat[pos]:
            return None
        return divmod(pos, d)
    for i in range(d):
        for j in range(i + 1, d):
            if viewed[i] & viewed[j] == 0 and (
                not elbow or (viewed[i] | viewed[j]) == full
            ):
                return (i, j)
    return None


def verify_orientation_cover(
    g: Graph, cover: OrientationCover
) -> Optional[OrientationViolation]:
    """None if every pair of distinct incident edges is jointly
    out-directed somewhere; else the first uncovered (v, e, f)."""
    sig = incidence_signatures(g, cover)
    for v in range(g.n):
        bad = _first_bad_pair(_viewed(sig, v), sig.full, elbow=False)
        if bad is not None:
            inc = g.incident(v)
            return OrientationViolation(v, g.edges[inc[bad[0]]], g.edges[inc[bad[1]]])
    return None


def verify_elbow_cover(g: Graph, cover: OrientationCover) -> Optional[ElbowViolation]:
    """None if every 2-edge path is non-directed in some orientation;
    else the first always-directed path (u, v, w)."""
    sig = incidence_signatures(g, cover)
    for v in range(g.n):
        bad = _first_bad_pair(_viewed(sig, v), sig.full, elbow=True)
        if bad is not None:
            inc = g.incident(v)
            u = g.other_endpoint(inc[bad[0]], v)
            w = g.other_endpoint(inc[bad[1]], v)
            return ElbowViolation((u, v, w))
    return None


def verify_eyebrow_cover(g: Graph, cover: EyebrowCover) -> Optional[EyebrowViolation]:
    """None if for every edge uv and third vertex w some permutation
    ranks w outside the open interval spanned by u and v."""
    if cover.n != g.n:
        raise ShapeError(f"cover n={cover.n} does not match graph n={g.n}")
    if g.n < 3 or g.m == 0:
        return None
    if cover.k == 0:
        u, v = g.edges[0]
        w = min(x for x in range(g.n) if x != u and x != v)
        return EyebrowViolation((u, v), w)
    ranks = np.array([p.values for p in cover.permutations], dtype=np.int64)
    for u, v in g.edges:
        lo = np.minimum(ranks[:, u], ranks[:, v])[:, None]
        hi = np.maximum(ranks[:, u], ranks[:, v])[:, None]
        always_between = ((ranks > lo) & (ranks < hi)).all(axis=0)
        pos = int(np.argmax(always_between))
        if always_between[pos]:
            return EyebrowViolation((u, v), pos)
    return None


def verify_equivalence_cover(
    h: Graph, cover: EquivalenceCover
) -> Optional[EquivalenceViolation]:
    """None iff classes are disjoint cliques and every edge of h lies
    inside some class of some subgraph.

    Scan order (fixes the reported witness): subgraphs in order; within
    one, overlapping classes first (by class index, then vertex), then
    missing clique edges (by class index, then pair); finally uncovered
    host edges by edge index.
    """
    if cover.n != h.n:
        raise ShapeError(f"cover n={cover.n} does not match graph n={h.n}")
    covered = [False] * h.m
    for si, sub in enumerate(cover.subgraphs):
        owner: dict = {}
        for ci, cls in enumerate(sub):
            for v in cls:
                if not (0 <= v < h.n):
                    raise ShapeError(f"vertex {v} out of range in subgraph {si}")
                if v in owner:
                    return EquivalenceViolation(
                        "overlap",
                        subgraph=si,
                        class_pair=(owner[v], ci),
                        vertex=v,
                    )
                owner[v] = ci
        for ci, cls in enumerate(sub):
            for a, b in combinations(cls, 2):
                if not h.has_edge(a, b):
                    return EquivalenceViolation(
                        "not-a-clique",
                        subgraph=si,
                        class_index=ci,
                        edge=(a, b),
                    )
            for a, b in combinations(cls, 2):
                covered[h.index_of(a, b)] = True
    for idx, ok in enumerate(covered):
        if not ok:
            return EquivalenceViolation("uncovered", edge=h.edges[idx])
    return None
