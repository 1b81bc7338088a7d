"""
Switching regions of the phase-space velocity controller
========================================================

The controller partitions the (gap, relative speed) plane into four regions
with three parabolic safety envelopes.  This script evaluates the envelopes,
classifies a few phase points, and exports the boundary curves as CSV for
plotting.
"""

from pathlib import Path

from wavestopper.analysis import boundaries_export, switching_region_geometry
from wavestopper.controller import PhasePoint, classify_region, envelope

out_dir = Path(__file__).with_name("output")
out_dir.mkdir(exist_ok=True)

# Each envelope d_j(v_rel) sits flat at its offset omega_j while the leader
# is pulling away (v_rel >= 0) and opens quadratically as the gap closes.
print("envelope distances (m)")
print(f"{'v_rel':>6} {'d1':>7} {'d2':>7} {'d3':>7}")
for v_rel in (2.0, 0.0, -1.0, -2.0, -4.0):
    d = [envelope(j, v_rel) for j in (1, 2, 3)]
    print(f"{v_rel:>6.1f} {d[0]:>7.3f} {d[1]:>7.3f} {d[2]:>7.3f}")

# Region 1 commands a full stop, regions 2 and 3 interpolate, region 4 lets
# the vehicle drive at its reference speed.  Boundaries belong to the lower
# region, so a point exactly on d1 still commands zero.
print("\nregion classification")
for x_rel, v_rel in [(3.0, 0.0), (4.5, 0.0), (5.0, 0.0), (8.0, -2.0), (12.0, 0.0)]:
    region = classify_region(PhasePoint(x_rel, v_rel))
    print(f"  gap {x_rel:>5.1f} m at v_rel {v_rel:>5.1f} m/s -> {region.name}")

# The same geometry as dense curves, ready for a phase-plane overlay.
curves = switching_region_geometry()
dest = out_dir / "boundaries.csv"
boundaries_export(dest)
print(f"\nwrote {len(curves.v_rel)} boundary samples to {dest}")
