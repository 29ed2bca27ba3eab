"""Two independent routes to the minimal volume 1/143.

Route A blows up one carefully chosen node of the nine-curve chain with
branch and tail, then decomposes.  Route B resolves every node first,
checks that the log contraction loop has nothing to do, and contracts
the volume-neutral (-1)-curves afterwards.  Both land on the same
eleven-curve model: a single (-1)-curve between two (-3)-curves, every
other boundary curve a (-2)-curve.
"""
from logsurf import example_143, rational_str

r = example_143()

print("base configuration volume:", rational_str(r["base_volume"]))
print("route A (single node blow-up):", rational_str(r["volume_route_a"]))
print("route B (full resolution):    ", rational_str(r["volume_route_b_resolved"]))
print("route B (after contractions): ", rational_str(r["volume_route_b"]))
print()
print("positive-part coefficients on the boundary (route A):")
for name, value in sorted(r["coefficients"].items()):
    print(f"  {name}: {rational_str(value)}")
print()
print("curves contracted on route B:", ", ".join(r["neutral_contractions"]))
print("final dual graph on both routes: one (-1)-curve flanked by two")
print("(-3)-curves, arms of lengths", r["shape_route_a"]["arms"])
print("routes agree:", r["routes_agree"])
