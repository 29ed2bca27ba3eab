"""Semistable boundary parts and the rational-surface shape.

The semistable part keeps exactly the subcurve whose components all meet
the rest enough; trees of rational curves are discarded one leaf at a
time.  The second half replays the plane cubic-plus-line ladders and
shows the surviving (-2)-boundary forming the chain-of-nine-with-branch
shape.
"""
from logsurf import example_rational_shape, make_config, semistable_part

cfg = make_config(
    [("F", 0, 1), ("T1", -2, 0), ("T2", -2, 0)],
    [("F", "T1", 1), ("T1", "T2", 1)],
)
split = semistable_part(cfg, cfg.names)
print("fiber with a two-curve tail:")
print("  semistable part:", sorted(split.C))
print("  discarded:      ", sorted(split.E))
for comp, pa in split.component_genera:
    print("  component", sorted(comp), "has genus", pa)
print()

r = example_rational_shape()
print("plane cubic + line after the scripted ladders:")
print("  (-1)-curves disjoint from the cubic:", r["contracted"] or "none")
print("  surviving boundary:", ", ".join(r["boundary"]))
print("  self-intersections:", r["boundary_selfs"])
print("  branch arms:", r["arms"], "(same as the reference shape:", r["k3_arms"], ")")
print("  canonical-plus-cubic class pairs to zero everywhere:",
      r["kc_pairings_all_zero"])
