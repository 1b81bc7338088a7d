"""
Driving a live simulation session with operator commands
========================================================

The service module wraps the simulator in a command mailbox: operators
submit commands with a client id and a strictly increasing sequence number,
commands take effect exactly at step boundaries, and every frame of the
resulting stream is a JSON-serializable snapshot.  This script exercises the
session synchronously; `wavestopper serve` exposes the same object over
HTTP and WebSocket.
"""

import json

from wavestopper.config_io import bundled_config
from wavestopper.service import SimSession

session = SimSession(bundled_config(), frame_rate=20.0)
replies = []

# Queue two commands; they are acknowledged when the next frame block runs,
# and the acknowledgement carries the simulation time at which they applied.
session.submit({"client_id": "demo", "seq": 1, "kind": "engage"}, replies.append)
session.submit(
    {"client_id": "demo", "seq": 2, "kind": "set_max_speed", "value": 6.5},
    replies.append,
)

frame = session.step_block()
for reply in replies:
    print(f"{reply['kind']:>14}: {reply['status']} at t={reply['t']}")
print(f"mode after engagement: {frame['av']['mode']}, reference {frame['av']['r']}")

# Retransmitting the last acknowledged sequence number returns the stored
# acknowledgement and never applies the command twice -- even with a
# different payload.
duplicate = session.submit(
    {"client_id": "demo", "seq": 2, "kind": "set_max_speed", "value": 9.9}
)
print(f"duplicate seq 2 -> stored ack from t={duplicate['t']}, "
      f"max speed still {session.sim.max_speed}")

# Malformed commands are rejected with a reason instead of raising.
bad = session.submit({"client_id": "demo", "seq": 3, "kind": "set_max_speed",
                      "value": -1.0})
print(f"negative setpoint -> {bad['status']}: {bad['reason']}")

# Pause freezes the clock; frames stop until resume.
session.submit({"client_id": "demo", "seq": 4, "kind": "pause"})
assert session.step_block() is None
print(f"paused at t={session.t}; frames stop, commands still answer")

session.submit({"client_id": "demo", "seq": 5, "kind": "resume"})
frame = session.step_block()
print(f"resumed; next frame at t={frame['t']}")

print("\nfirst frame as a client would receive it:")
print(json.dumps(frame, indent=1)[:400], "...")
print("\nrun `wavestopper serve` to expose this session on HTTP/WebSocket")
