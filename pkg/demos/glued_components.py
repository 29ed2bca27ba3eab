"""Gluing equal components: volume 25/84 per unit of genus.

The plane cubic with three lines, blown up along the scripted ladder,
gives a pair of boundary lines along which copies can be glued.  Volumes
and genera add, so n copies land at (25n/84, n) -- below the bound that
normal components would have to obey, but above the stable floor n/143.
"""
from logsurf import example_25_84, glue_volumes, noether_stable_bound, rational_str, tz_bound
from fractions import Fraction as Q

r = example_25_84()
print("one component: volume =", rational_str(r["volume"]))
print("strict transform of the third line: self-intersection", r["l3_self"],
      "coefficient", rational_str(r["b_l3"]))
print("multiplicity of the relative canonical on the last ladder curve:",
      rational_str(r["g_multiplicity"]))
print()

for n in (1, 2, 5, 12):
    vol, pg, noether_ok, escaped = glue_volumes([(Q(25, 84), 1)] * n)
    line = f"n={n:>2}: vol={rational_str(vol):>7}  pg={pg:>2}  floor(pg/143) ok: {noether_ok}"
    if escaped is not None:
        line += f"  below the normal-region bound {rational_str(escaped)}"
    print(line)

print()
print("normal-region bound at pg=5:", rational_str(tz_bound(5)))
print("stable floor at pg=5:       ", rational_str(noether_stable_bound(5)))
