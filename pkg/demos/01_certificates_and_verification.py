"""Certificates and their verification.

A covering claim is a list of orientations, permutations, or
clique-partitions over one reference graph.  The verifiers either
confirm the claim or return a self-certifying counterexample, so a
certificate file can be trusted end to end.

The centerpiece here is a hand-built table of five permutations of 16
elements: their induced acyclic orientations cover every incidence pair
of K_16, which pins sigma(K_16) <= 5 (two better than the generic
doubling construction gives).
"""

from eqcover import (
    Orientation,
    OrientationCover,
    generate_family,
    k16_table_cover,
    verify_orientation_cover,
    write_cover_for,
)

g16 = generate_family("complete", 16)
perms, cover = k16_table_cover()

print("The five permutations (ranks of vertices 0..15):")
for i, p in enumerate(perms, start=1):
    print(f"  pi_{i}: {list(p.values)}")

violation = verify_orientation_cover(g16, cover)
print(f"\nverify_orientation_cover(K16, table) -> {violation}  (None = valid)")
print(f"so sigma(K16) <= {cover.k}")

# Drop one orientation and the claim collapses; the verifier names the
# first incidence pair left uncovered.
broken = OrientationCover((16, 120), cover.orientations[:4])
violation = verify_orientation_cover(g16, broken)
print(f"\nwith only four of the five orientations: {violation.line()}")
print(f"witness rechecks in isolation: {violation.recheck(g16, broken)}")

# Certificates serialize to a line-oriented text format.
k3 = generate_family("complete", 3)
tiny = OrientationCover((3, 3), [Orientation((3, 3), (0, 0, 0))])
print("\nA cover file for one orientation of the triangle:")
print(write_cover_for(k3, tiny))
