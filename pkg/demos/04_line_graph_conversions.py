"""Orientations of G versus equivalence subgraphs of L(G).

Directing the edges of G splits each vertex's incident edges into an
out-set; the out-sets are disjoint cliques of the line graph (the
"analogue" of the orientation).  A set of orientations covering every
incidence pair therefore becomes an equivalence covering of L(G) of the
same size, which is the cheap direction of

    eq(L(G)) <= sigma(G) <= 3 eq(L(G)).

The expensive direction converts equivalence subgraphs back into
orientations: classes of a line graph are stars or triangles, and each
triangle needs its three rotations, hence the factor three.
"""

from eqcover import (
    analogue,
    decide_eq,
    eq_cover_from_orientation_cover,
    generate_family,
    k4_sigma3_cover,
    line_graph,
    orientation_cover_from_eq_cover,
    orientation_cover_from_eq_cover_trifree,
    verify_equivalence_cover,
    verify_orientation_cover,
)

k4 = generate_family("complete", 4)
lm = line_graph(k4)
print(f"L(K4) has {lm.line.n} vertices and {lm.line.m} edges")

cover = k4_sigma3_cover()
print("\nanalogues of the three covering orientations of K4:")
for o in cover.orientations:
    print(f"  classes (as host edge indices): {analogue(lm, o)}")

eq = eq_cover_from_orientation_cover(lm, cover)
print(f"together: equivalence covering of L(K4) of size {eq.k}, "
      f"valid: {verify_equivalence_cover(lm.line, eq) is None}")

back = orientation_cover_from_eq_cover(lm, eq)
print(f"converted back: {back.k} orientations (three per subgraph), "
      f"valid: {verify_orientation_cover(k4, back) is None}")

# Triangle-free hosts convert size-for-size: every line graph clique is
# a star there, so each subgraph forces a single orientation.
c5 = generate_family("cycle", 5)
lm5 = line_graph(c5)
eq5 = decide_eq(lm5.line, 3).witness
one_per = orientation_cover_from_eq_cover_trifree(lm5, eq5)
print(f"\nC5 (triangle-free): eq cover of size {eq5.k} -> orientation cover "
      f"of size {one_per.k}, valid: {verify_orientation_cover(c5, one_per) is None}")
