"""The volume-decreasing tower over a boundary intersection point.

Blowing up a point where the semistable curve meets its complement, then
walking up the semistable curve, always lands strictly below the base
volume while staying above vol - b^2/n, where b is the complement
coefficient in the positive part.  The tower squeezes back toward the
base volume as n grows.
"""
from fractions import Fraction as Q

from logsurf import QDivisor, make_config, rational_str, tower, volume, zariski_decompose

cfg = make_config([("C", 2, 2), ("E", -2, 0)], [("C", "E", 1)])
w = QDivisor({"C": 1, "E": 1})
base = zariski_decompose(cfg, w)
b = base.positive.get("E")
print("base volume:", rational_str(base.volume), "  tail coefficient b =", rational_str(b))
print()
print(f"{'n':>3} {'vol':>10} {'lower bound':>12}")
for n in (1, 2, 3, 5, 10, 25, 50):
    hist, cls = tower(cfg, "C", "E", w, b, n)
    v = volume(hist.top, cls)
    bound = base.volume - b * b / n
    print(f"{n:>3} {rational_str(v):>10} {rational_str(bound):>12}")
print()
hist, _ = tower(cfg, "C", "E", w, b, 4)
top = hist.top
chain = ["C"] + [f"G{k}" for k in range(4, 0, -1)] + ["E"]
print("exceptional chain at n=4:", " - ".join(chain))
print("self-intersections:", [top.self_int(n) for n in chain])
