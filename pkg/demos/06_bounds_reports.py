"""Composed interval reports, ending at a triangle-free graph
whose line graph needs more than three equivalence subgraphs.

The report stitches the windows together: bipartiteness settles
sigma <= 2; chromatic number 3 or 4 settles sigma = 3; 5 through 12
settles sigma = 4; beyond that the loglog formulas and constructive
pullback witnesses take over.  Triangle-freeness converts everything
about sigma into statements about eq(L).

The finale: the fifth triangle-free iterate of the doubling-with-apex
construction has 23 vertices and chromatic number exactly 5, hence
sigma = 4 and, being triangle-free, eq of its line graph is exactly 4.
No constant can bound eq(L) over triangle-free graphs: higher iterates
push the value arbitrarily large.
"""

from eqcover import bounds_report, generate_family

GALLERY = [
    ("C4", generate_family("cycle", 4)),
    ("K4", generate_family("complete", 4)),
    ("K16", generate_family("complete", 16)),
    ("triangle-free iterate 5", generate_family("mycielski-iterate", 5)),
]

for name, g in GALLERY:
    print(f"=== {name} ===")
    for line in bounds_report(g).lines():
        print(f"  {line}")
    print()

rep = bounds_report(generate_family("mycielski-iterate", 5))
assert rep.eq_line.exact and rep.eq_line.lo == 4
print("conclusion: a triangle-free graph whose line graph needs 4")
print("equivalence subgraphs -- and the construction iterates upward.")
