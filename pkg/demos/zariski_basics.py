"""Zariski decompositions on small curve configurations.

Walks through three classic shapes: a divisor that sheds one negative
component, the genus-one fiber with a tail, and a cycle whose sum is nef
but not big.
"""
from logsurf import make_config, sum_divisor, zariski_decompose


def show(title, config, divisor):
    r = zariski_decompose(config, divisor)
    print(f"== {title}")
    print("   D        =", divisor)
    print("   positive =", r.positive)
    print("   negative =", r.negative)
    print("   big      =", r.big, "  volume =", r.volume)
    print()


# A smooth big class next to a disjoint (-2)-curve: the (-2) is pure
# negative part and the volume is the square of what remains.
cfg = make_config([("A", 1, 0), ("B", -2, 0)])
show("big class plus disjoint (-2)-curve", cfg, sum_divisor(cfg))

# Genus-one fiber meeting a (-2)-tail once: the tail enters with
# coefficient 1/2 and the volume halves.
cfg = make_config([("F", 0, 1), ("T", -2, 0)], [("F", "T", 1)])
show("fiber with a tail", cfg, sum_divisor(cfg))

# Triangle of (-2)-curves: the sum pairs to zero with every component,
# so it is nef with square zero -- no negative part, no volume.
cfg = make_config(
    [("C1", -2, 0), ("C2", -2, 0), ("C3", -2, 0)],
    [("C1", "C2", 1), ("C2", "C3", 1), ("C1", "C3", 1)],
)
show("cycle of three (-2)-curves", cfg, sum_divisor(cfg))

# Scaling is exactly quadratic.
cfg = make_config([("F", 0, 1), ("T", -2, 0)], [("F", "T", 1)])
d = sum_divisor(cfg)
for a in (1, 2, 3):
    print(f"vol({a}*D) =", zariski_decompose(cfg, a * d).volume)
