"""The one-click-fix loop: global estimate, then iterative local corrections.

Needs a trained desk checkpoint (runs/desk_flagship/model.ckpt, produced
by the acceptance suite or `layoutfix train`); falls back to a quickly
trained small model otherwise, whose corrections will be rough.
"""
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from layoutfix import loop, metrics, net, synth

ckpt = Path("runs/desk_flagship/model.ckpt")
if ckpt.exists():
    model, _ = net.load_checkpoint(ckpt)
    print(f"using desk checkpoint {ckpt}")
else:
    print("no desk checkpoint; training a small stand-in (~2 min)")
    scenes = [synth.generate_scene(s) for s in range(32)]
    model, _ = net.train(
        scenes, net.ModelConfig(d_model=64, layers=2, heads=4),
        net.TrainConfig(steps=600, batch_size=8, warmup=60, save_every=0),
    )

scene = synth.generate_scene(seed=31007)
session = loop.new_session(scene.points, model)
print(f"initial estimate: {len(session.layout)} entities, "
      f"PlaneDistance {metrics.plane_distance(session.layout, scene.layout):.3f}")

# one simulated 'click': the worst entity is selected and infilled
action = loop.simulated_user_step(session, scene)
if action is not None:
    diff = loop.apply_action(session, action, model)
    print(f"applied {action.type}: removed {list(diff.removed)}, "
          f"added {[e.id for e in diff.added]}")
    print(f"PlaneDistance now {metrics.plane_distance(session.layout, scene.layout):.3f}")
    session.undo()
    print("undo restores the previous layout exactly")

# the full refinement experiment on this scene
traces = loop.run_refinement_loop(scene, model, "user", trials=3, iterations=10)
curves = np.array([t.distances for t in traces])
plt.figure(figsize=(5, 3))
plt.plot(curves.T, alpha=0.4, color="tab:blue")
plt.plot(curves.mean(axis=0), color="tab:blue", lw=2, label="simulated user")
plt.xlabel("iteration"); plt.ylabel("PlaneDistance (m)")
plt.legend(); plt.tight_layout()
plt.savefig("demos/output_refinement.png", dpi=120)
print(f"refinement: {curves[:, 0].mean():.3f} -> {curves[:, -1].mean():.3f}; "
      "wrote demos/output_refinement.png")
