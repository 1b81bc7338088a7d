"""
Controller response across the switching regions
================================================

Sweeping the gap at fixed speeds shows the piecewise command profile: zero in
the collision-risk region, a ramp up to the leader's speed, a blend up to the
reference, then the reference itself.  The second half traces the reference
governor as an operator drops the target speed, showing the rate-limited
descent and the hysteresis snap.
"""

import numpy as np

from wavestopper.controller import FsInputs, NominalState, PhasePoint, fs_command, nominal_step

# Command profile over the gap at a closing speed of 1 m/s.  The leader
# drives at 4 m/s and the operator requests 7.5 m/s.
v_lead, v_rel, r = 4.0, -1.0, 7.5
print(f"command profile (v_lead={v_lead}, v_rel={v_rel}, r={r})")
print(f"{'gap (m)':>8} {'v_cmd (m/s)':>12}")
for gap in np.arange(3.0, 12.1, 0.75):
    cmd = fs_command(FsInputs(PhasePoint(float(gap), v_rel), v_lead, r))
    bar = "#" * int(round(cmd * 4))
    print(f"{gap:>8.2f} {cmd:>12.4f}  {bar}")

# The governor smooths operator setpoint changes.  Start settled at 9 m/s,
# then command 6.5 m/s: the internal target walks down at max_decel * dt per
# tick until it enters the +/-1 m/s band and snaps.
state = NominalState(y=9.0)
vel = 9.0
print("\ngovernor descent after a setpoint change 9.0 -> 6.5 m/s")
print(f"{'tick':>4} {'r (m/s)':>8}")
for tick in range(24):
    r_out, state = nominal_step(state, 6.5, vel)
    vel = max(6.5, vel - 0.12)  # vehicle gently follows the reference down
    if tick % 3 == 0 or r_out == 6.5:
        print(f"{tick:>4} {r_out:>8.3f}")
    if r_out == 6.5:
        print("  snapped into the hysteresis band")
        break
