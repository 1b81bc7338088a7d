"""
Phase portraits of relative motion
==================================

The analysis module generates vector fields over the (gap, relative speed)
plane for three families of leader behavior: constant relative speed,
linearly varying relative speed, and constant relative acceleration.  The
constant-acceleration family traces the parabolas that motivate the shape of
the switching envelopes.
"""

from pathlib import Path

import numpy as np

from wavestopper.analysis import (
    PORTRAIT_CATEGORIES,
    PortraitSpec,
    parabola_curve,
    parabola_curve_export,
    portrait_field,
    portrait_field_export,
)

out_dir = Path(__file__).with_name("output")
out_dir.mkdir(exist_ok=True)

# One vector field per category on the default grid.  dx is always the
# relative speed; dv depends on the category.
for category in PORTRAIT_CATEGORIES:
    spec = PortraitSpec(category=category)
    x, v, dx, dv = portrait_field(spec)
    dest = out_dir / f"field_{category}.csv"
    portrait_field_export(spec, dest)
    print(
        f"{category:>16}: {x.size} arrows, "
        f"|dv| max {np.abs(dv).max():.2f}, wrote {dest.name}"
    )

# Under constant relative acceleration a, trajectories in the plane follow
# x_rel = x0 + v_rel^2 / (2 a) for the closing half -- the same algebra that
# sizes the safety envelopes.  Export one curve per envelope parameter pair.
print("\nconstant-acceleration parabolas (clipped to the closing half)")
for omega, alpha in [(4.5, 1.5), (5.25, 1.0), (6.0, 0.5)]:
    v_rel = np.linspace(-5.0, 5.0, 11)
    x_rel = parabola_curve(omega, alpha, v_rel)
    dest = out_dir / f"parabola_w{omega}_a{alpha}.csv"
    parabola_curve_export(dest, omega, alpha)
    print(f"  omega={omega}, alpha={alpha}: x(-2) = {x_rel[v_rel == -2.0][0]:.2f} m")
