"""The bundled reference table of fiber volumes and minimal volumes.

For each degenerate-fiber shape with a (-2)-tail the script computes the
volume of the reduced configuration and then runs the full minimal-volume
pipeline: resolve every singular point of the boundary curve, transport
the log class, contract, and decompose.  One stored reference cell is
known not to match the computed minimum; the report says so rather than
hiding it.
"""
from logsurf import kodaira_config, resolution_script, sum_divisor, volume
from logsurf.catalog import table1, table1_text

print(table1_text(table1()))

# The same machinery works for shapes outside the sampled table rows.
for b in (4, 5):
    cfg = kodaira_config("I", b)
    print(f"I_{b} with tail: vol(fiber sum) =", volume(cfg, sum_divisor(cfg)))

print()
print("resolution script for the cuspidal fiber (type II):")
for step in resolution_script("II"):
    point = " + ".join(f"{m}x{name}" for name, m in step.branches)
    print(f"  blow up {point:22} -> {step.exceptional_name}")
