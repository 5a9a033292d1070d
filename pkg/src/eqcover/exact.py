"""Exact decision procedures for the covering invariants and for the
chromatic number, at desk scale.

All searches are deterministic backtracking with budgets measured in
search nodes (one node per candidate value tried), plus an optional
wall-clock cap.  Budget exhaustion is a first-class result status, not
an error.

Orientation and elbow coverings are searched edge-major: each edge gets
a k-bit word whose bit i records its direction in orientation i, and
the covering constraints become pair predicates between the words of
edges sharing a vertex (see the verify module).  This explores exactly
the space of k-tuples of orientations, with one sound symmetry
reduction: orientations are interchangeable, so the orientation blocks
are required to be lexicographically nondecreasing as direction
bit-vectors.  The same lexicographic block reduction (and nothing else,
since label classes are interchangeable too) applies to equivalence
coverings and to eyebrow permutation tuples.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations as iter_permutations
from typing import Callable, List, Optional, Sequence, Tuple

from .covers import EquivalenceCover, EyebrowCover, OrientationCover
from .graphs import Graph
from .orientations import Coloring, Orientation, Permutation


class _OutOfBudget(Exception):
    def __init__(self, reason: str):
        self.reason = reason  # 'nodes' or 'clock'


class Budget:
    """Search budget: node count (deterministic) and optional wall clock."""

    __slots__ = ("max_nodes", "max_seconds", "nodes", "exhausted", "_deadline")

    def __init__(
        self, max_nodes: Optional[int] = None, max_seconds: Optional[float] = None
    ):
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds
        self.nodes = 0
        self.exhausted: Optional[str] = None  # 'nodes' | 'clock' once tripped
        self._deadline = (
            time.monotonic() + max_seconds if max_seconds is not None else None
        )

    def spend(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            self.exhausted = "nodes"
            raise _OutOfBudget("nodes")
        if (
            self._deadline is not None
            and (self.nodes & 1023) == 0
            and time.monotonic() > self._deadline
        ):
            self.exhausted = "clock"
            raise _OutOfBudget("clock")


@dataclass(frozen=True)
class DecideResult:
    """Outcome of a single decision query at covering size k."""

    status: str  # 'sat' | 'unsat' | 'timeout'
    witness: object = None
    nodes: int = 0


@dataclass(frozen=True)
class SolveResult:
    """An exact value or a best-effort interval for one invariant.

    The witness certifies the exact value when status is 'exact' and
    the upper endpoint otherwise (when one was established).
    """

    invariant: str
    lo: int
    hi: Optional[int]
    status: str  # 'exact' | 'bounded' (node budget) | 'timeout' (wall clock)
    witness: object = None
    nodes: int = 0

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.status == "exact" else None


def _timeout_status(reason: str) -> str:
    return "timeout" if reason == "clock" else "bounded"


# ---------------------------------------------------------------------------
# orientation / elbow covering decisions
# ---------------------------------------------------------------------------


def _decide_words(
    g: Graph, k: int, budget: Budget, elbow: bool
) -> Optional[List[int]]:
    """Backtracking over per-edge direction words; None means unsat.

    Word bit i = edge directed out of its LOW endpoint in orientation i.
    Viewed from the low endpoint the mask is the word itself, from the
    high endpoint its complement.  Pair predicate at a shared vertex:
    orientation covering needs intersecting masks, elbow covering
    forbids complementary ones.
    """
    m = g.m
    full = (1 << k) - 1
    degrees = g.degrees()
    edges = g.edges
    words = [0] * m
    assigned_at: List[List[int]] = [[] for _ in range(g.n)]

    def viewed(e: int, v: int) -> int:
        return words[e] if edges[e][0] == v else full ^ words[e]

    def compatible(v: int, mask: int) -> bool:
        if elbow:
            for f in assigned_at[v]:
                if viewed(f, v) == full ^ mask:
                    return False
        else:
            for f in assigned_at[v]:
                if viewed(f, v) & mask == 0:
                    return False
        return True

    def rec(d: int, lexeq: int) -> bool:
        if d == m:
            return True
        u, v = edges[d]
        for w in range(1 << k):
            budget.spend()
            mu, mv = w, full ^ w
            if not elbow:
                # a never-out mask at a vertex with 2+ edges kills a pair
                if (degrees[u] >= 2 and mu == 0) or (degrees[v] >= 2 and mv == 0):
                    continue
            # keep orientation blocks lexicographically nondecreasing as
            # direction bit-vectors (direction bit = 1 - word bit)
            nlex = lexeq
            ok = True
            for p in range(k - 1):
                if nlex & (1 << p):
                    bi, bj = (w >> p) & 1, (w >> (p + 1)) & 1
                    if bi == 0 and bj == 1:
                        ok = False
                        break
                    if bi == 1 and bj == 0:
                        nlex &= ~(1 << p)
            if not ok:
                continue
            if not (compatible(u, mu) and compatible(v, mv)):
                continue
            words[d] = w
            assigned_at[u].append(d)
            assigned_at[v].append(d)
            if rec(d + 1, nlex):
                return True
            assigned_at[u].pop()
            assigned_at[v].pop()
        return False

    return words if rec(0, (1 << max(k - 1, 0)) - 1) else None


def _words_to_cover(g: Graph, k: int, words: Sequence[int], kind: str) -> OrientationCover:
    orientations = []
    for i in range(k):
        bits = tuple(0 if (words[e] >> i) & 1 else 1 for e in range(g.m))
        orientations.append(Orientation((g.n, g.m), bits))
    return OrientationCover((g.n, g.m), orientations, kind)


def decide_sigma(g: Graph, k: int, budget: Optional[Budget] = None) -> DecideResult:
    """Is there an orientation covering of g with k orientations?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    budget = budget or Budget()
    try:
        words = _decide_words(g, k, budget, elbow=False)
    except _OutOfBudget:
        return DecideResult("timeout", None, budget.nodes)
    if words is None:
        return DecideResult("unsat", None, budget.nodes)
    return DecideResult("sat", _words_to_cover(g, k, words, "orientation"), budget.nodes)


def decide_elb(g: Graph, k: int, budget: Optional[Budget] = None) -> DecideResult:
    """Is there an elbow covering of g with k orientations?"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    budget = budget or Budget()
    try:
        words = _decide_words(g, k, budget, elbow=True)
    except _OutOfBudget:
        return DecideResult("timeout", None, budget.nodes)
    if words is None:
        return DecideResult("unsat", None, budget.nodes)
    return DecideResult("sat", _words_to_cover(g, k, words, "elbow"), budget.nodes)


# ---------------------------------------------------------------------------
# equivalence covering decision
# ---------------------------------------------------------------------------


def decide_eq(h: Graph, k: int, budget: Optional[Budget] = None) -> DecideResult:
    """Can the edges of h be covered by k equivalence subgraphs?

    Each edge is assigned a nonempty subset of the k labels.  The label-i
    edges must form a disjoint union of cliques, which holds exactly
    when any two label-i edges sharing a vertex close a triangle whose
    third edge exists in h and also carries label i.  That closure is
    propagated to not-yet-assigned edges as a required label mask.
    Intended for small hosts (roughly m <= 40), typically line graphs.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    budget = budget or Budget()
    m = h.m
    if m == 0:
        cover = EquivalenceCover(h.n, [[] for _ in range(k)])
        return DecideResult("sat", cover, budget.nodes)
    if k == 0:
        return DecideResult("unsat", None, budget.nodes)

    full = (1 << k) - 1
    edges = h.edges
    # earlier adjacent edges, with the index of the triangle-closing edge
    partners: List[List[Tuple[int, Optional[int]]]] = [[] for _ in range(m)]
    for e in range(m):
        u, v = edges[e]
        for x in (u, v):
            for f in h.incident(x):
                if f >= e:
                    continue
                a = h.other_endpoint(e, x)
                b = h.other_endpoint(f, x)
                t = h.index_of(a, b) if h.has_edge(a, b) else None
                partners[e].append((f, t))

    words = [0] * m
    required = [0] * m

    def rec(d: int, lexeq: int) -> bool:
        if d == m:
            return True
        req = required[d]
        for w in range(1, full + 1):
            budget.spend()
            if w & req != req:
                continue
            # label blocks lexicographically nondecreasing as edge
            # indicator vectors
            nlex = lexeq
            ok = True
            for p in range(k - 1):
                if nlex & (1 << p):
                    bi, bj = (w >> p) & 1, (w >> (p + 1)) & 1
                    if bi == 1 and bj == 0:
                        ok = False
                        break
                    if bi == 0 and bj == 1:
                        nlex &= ~(1 << p)
            if not ok:
                continue
            trail: List[Tuple[int, int]] = []
            for f, t in partners[d]:
                common = w & words[f]
                if not common:
                    continue
                if t is None:
                    ok = False
                    break
                if t < d:
                    if common & ~words[t]:
                        ok = False
                        break
                else:
                    old = required[t]
                    if old | common != old:
                        required[t] = old | common
                        trail.append((t, old))
            if ok:
                words[d] = w
                if rec(d + 1, nlex):
                    return True
            for t, old in reversed(trail):
                required[t] = old
        return False

    try:
        sat = rec(0, (1 << max(k - 1, 0)) - 1)
    except _OutOfBudget:
        return DecideResult("timeout", None, budget.nodes)
    if not sat:
        return DecideResult("unsat", None, budget.nodes)

    subgraphs = []
    for i in range(k):
        marked = [e for e in range(m) if (words[e] >> i) & 1]
        adj: dict = {}
        for e in marked:
            u, v = edges[e]
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        seen = set()
        classes = []
        for start in sorted(adj):
            if start in seen:
                continue
            comp = []
            stack = [start]
            seen.add(start)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            classes.append(tuple(sorted(comp)))
        subgraphs.append(classes)
    return DecideResult(
        "sat", EquivalenceCover(h.n, subgraphs), budget.nodes
    )


# ---------------------------------------------------------------------------
# eyebrow covering decision
# ---------------------------------------------------------------------------


def _eyebrow_constraints(g: Graph) -> List[Tuple[int, int, int]]:
    return [
        (u, v, w)
        for u, v in g.edges
        for w in range(g.n)
        if w != u and w != v
    ]


def decide_eyebrow(g: Graph, k: int, budget: Optional[Budget] = None) -> DecideResult:
    """Can k vertex permutations rank, for every edge uv and third
    vertex w, some pi with pi(w) outside the interval of pi(u), pi(v)?

    Brute force over lexicographically nondecreasing k-tuples of
    permutations, pruning on the constraints still uncovered; intended
    for small n.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    budget = budget or Budget()
    constraints = _eyebrow_constraints(g)
    if not constraints:
        perms = [Permutation.identity(g.n)] * k
        return DecideResult("sat", EyebrowCover(g.n, perms), budget.nodes)
    if k == 0:
        return DecideResult("unsat", None, budget.nodes)

    chosen: List[Tuple[int, ...]] = []

    def still_uncovered(uncovered, ranks):
        out = []
        for u, v, w in uncovered:
            lo, hi = ranks[u], ranks[v]
            if lo > hi:
                lo, hi = hi, lo
            if lo < ranks[w] < hi:
                out.append((u, v, w))
        return out

    def rec(slot: int, uncovered, floor: Tuple[int, ...]) -> bool:
        if not uncovered:
            # covered early: pad with repeats to honor the requested size
            while len(chosen) < k:
                chosen.append(chosen[-1])
            return True
        if slot == k:
            return False
        for ranks in iter_permutations(range(g.n)):
            if ranks < floor:
                continue
            budget.spend()
            rest = still_uncovered(uncovered, ranks)
            if len(rest) == len(uncovered):
                # covers nothing new; a minimal covering multiset has no
                # such member, and padding restores the requested size
                continue
            chosen.append(ranks)
            if rec(slot + 1, rest, ranks):
                return True
            chosen.pop()
        return False

    try:
        sat = rec(0, constraints, ())
    except _OutOfBudget:
        return DecideResult("timeout", None, budget.nodes)
    if not sat:
        return DecideResult("unsat", None, budget.nodes)
    cover = EyebrowCover(g.n, [Permutation(r) for r in chosen])
    return DecideResult("sat", cover, budget.nodes)


# ---------------------------------------------------------------------------
# chromatic number
# ---------------------------------------------------------------------------


def greedy_clique(g: Graph) -> Tuple[int, ...]:
    """Deterministic greedy clique (seeded at the max-degree vertex)."""
    if g.n == 0:
        return ()
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique = [order[0]]
    adjsets = [set(a) for a in g.adjacency]
    for v in order[1:]:
        if all(v in adjsets[u] for u in clique):
            clique.append(v)
    return tuple(sorted(clique))


def greedy_coloring(g: Graph) -> Coloring:
    """Saturation-guided greedy coloring; deterministic tie-breaking."""
    colors = [-1] * g.n
    neighbor_colors = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max(
            (x for x in range(g.n) if colors[x] < 0),
            key=lambda x: (len(neighbor_colors[x]), g.degree(x), -x),
        )
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for u in g.adjacency[v]:
            neighbor_colors[u].add(c)
    return Coloring(colors) if g.n else Coloring([])


def _k_colorable(g: Graph, k: int, budget: Budget) -> Optional[Coloring]:
    """Backtracking k-coloring with most-constrained-vertex branching and
    fresh colors introduced in order (color-permutation symmetry)."""
    n = g.n
    adj = g.adjacency
    colors = [-1] * n
    forbid = [0] * n
    full = (1 << k) - 1

    def rec(depth: int, maxused: int) -> bool:
        if depth == n:
            return True
        cap = (1 << min(maxused + 1, k)) - 1
        best, best_count = -1, k + 2
        for v in range(n):
            if colors[v] < 0:
                allowed = full & ~forbid[v] & cap
                cnt = bin(allowed).count("1")
                if cnt == 0:
                    return False
                if cnt < best_count:
                    best, best_count = v, cnt
        v = best
        allowed = full & ~forbid[v] & cap
        c = 0
        while allowed >> c:
            if (allowed >> c) & 1:
                budget.spend()
                colors[v] = c
                touched = []
                for u in adj[v]:
                    if colors[u] < 0 and not (forbid[u] >> c) & 1:
                        forbid[u] |= 1 << c
                        touched.append(u)
                if rec(depth + 1, max(maxused, c + 1)):
                    return True
                colors[v] = -1
                for u in touched:
                    forbid[u] &= ~(1 << c)
            c += 1
        return False

    if k <= 0:
        return Coloring([]) if n == 0 else None
    return Coloring(colors) if rec(0, 0) else None


def exact_chromatic(g: Graph, budget: Optional[Budget] = None) -> SolveResult:
    """Chromatic number by increasing-k decision searches.

    Lower bound from a greedy clique, upper bound (and fallback witness)
    from a greedy coloring; status 'exact' with a proper coloring
    witness unless the budget runs out first.
    """
    budget = budget or Budget()
    if g.n == 0:
        return SolveResult("chi", 0, 0, "exact", Coloring([]), budget.nodes)
    if g.m == 0:
        return SolveResult("chi", 1, 1, "exact", Coloring([0] * g.n), budget.nodes)
    lb = max(2, len(greedy_clique(g)))
    greedy = greedy_coloring(g)
    ub = greedy.palette_size
    if lb >= ub:
        return SolveResult("chi", ub, ub, "exact", greedy, budget.nodes)
    for k in range(lb, ub):
        try:
            witness = _k_colorable(g, k, budget)
        except _OutOfBudget as exc:
            return SolveResult(
                "chi", k, ub, _timeout_status(exc.reason), greedy, budget.nodes
            )
        if witness is not None:
            return SolveResult("chi", k, k, "exact", witness, budget.nodes)
    return SolveResult("chi", ub, ub, "exact", greedy, budget.nodes)


# ---------------------------------------------------------------------------
# minimization loops
# ---------------------------------------------------------------------------


def _greedy_matching_cover(g: Graph) -> EquivalenceCover:
    """Greedy proper edge coloring; matchings are equivalence subgraphs."""
    label_at: List[set] = [set() for _ in range(g.n)]
    labels = []
    for u, v in g.edges:
        c = 0
        while c in label_at[u] or c in label_at[v]:
            c += 1
        label_at[u].add(c)
        label_at[v].add(c)
        labels.append(c)
    k = max(labels) + 1 if labels else 0
    subgraphs: List[List[Tuple[int, int]]] = [[] for _ in range(k)]
    for e, c in enumerate(labels):
        subgraphs[c].append(g.edges[e])
    return EquivalenceCover(g.n, subgraphs)


def _tournament_ranks(g: Graph, o: Orientation) -> Permutation:
    """Topological order of an acyclic orientation of a complete graph
    (unique: out-degrees are pairwise distinct)."""
    out = [0] * g.n
    for e in range(g.m):
        out[o.arrow(g, e)[0]] += 1
    return Permutation([g.n - 1 - d for d in out])


def _upper_witness(g: Graph, invariant: str):
    """Constructive certificate closing the interval from above."""
    from . import construct  # deferred: construct imports this module

    if invariant == "sigma":
        if not g.has_incidence_pairs():
            return OrientationCover((g.n, g.m), [])
        return construct.cover_via_coloring(g, greedy=True)
    if invariant == "elb":
        if not g.has_incidence_pairs():
            return OrientationCover((g.n, g.m), [], kind="elbow")
        return construct.elbow_cover_via_coloring(g, greedy=True)
    if invariant == "eq":
        return _greedy_matching_cover(g)
    if invariant == "eye":
        if not _eyebrow_constraints(g):
            return EyebrowCover(g.n, [])
        complete = Graph(
            g.n, [(a, b) for a in range(g.n) for b in range(a + 1, g.n)]
        )
        base = construct.elbow_cover_complete(g.n)
        perms = [_tournament_ranks(complete, o) for o in base.orientations]
        return EyebrowCover(g.n, perms)
    raise ValueError(f"unknown invariant {invariant!r}")


_DECIDERS: dict = {
    "sigma": decide_sigma,
    "elb": decide_elb,
    "eq": decide_eq,
    "eye": decide_eyebrow,
}


def solve_invariant(
    g: Graph, invariant: str, budget: Optional[Budget] = None
) -> SolveResult:
    """Minimize one invariant by deciding k = 0, 1, 2, ... in turn.

    The values are tiny, so no binary search.  For 'eq' the graph is
    the host itself (pass a line graph to compute eq(L(G))).  When the
    budget runs out, the interval's upper end is certified by a
    constructive cover, returned as the witness.
    """
    if invariant == "chi":
        return exact_chromatic(g, budget)
    if invariant not in _DECIDERS:
        raise ValueError(f"unknown invariant {invariant!r}")
    budget = budget or Budget()
    decide: Callable = _DECIDERS[invariant]
    upper = _upper_witness(g, invariant)
    for k in range(0, upper.k + 1):
        res = decide(g, k, budget)
        if res.status == "sat":
            return SolveResult(invariant, k, k, "exact", res.witness, budget.nodes)
        if res.status == "timeout":
            return SolveResult(
                invariant,
                k,
                upper.k,
                _timeout_status(budget.exhausted or "nodes"),
                upper,
                budget.nodes,
            )
    raise AssertionError(
        f"decision at the certified upper bound {upper.k} should be satisfiable"
    )
