"""Synthetic Manhattan-world scenes: floorplan, walkthrough, point cloud.

Scenes are unions of abutting rectangular rooms with connecting doors,
walked by a smoothed random trajectory; a simulated scanner samples
surface points that are visible from the walk, with noise and dropout.
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from layoutfix import geom, synth

scene = synth.generate_scene(seed=20003)
print(
    f"scene 20003: {len(scene.layout.walls)} walls, "
    f"{len(scene.layout.openings)} openings, "
    f"{len(scene.trajectory)} poses, {len(scene.points)} points"
)

fig, ax = plt.subplots(figsize=(7, 7))
pts = scene.points.xyz
ax.scatter(pts[:, 0], pts[:, 1], s=1.5, c=pts[:, 2], cmap="viridis", alpha=0.5)
for w in scene.layout.walls:
    ax.plot([w.a[0], w.b[0]], [w.a[1], w.b[1]], "k-", lw=3)
for o in scene.layout.openings:
    (a, b), _ = geom.opening_segment(o, scene.layout)
    color = "tab:orange" if o.cls == "door" else "tab:blue"
    ax.plot([a[0], b[0]], [a[1], b[1]], color=color, lw=5)
traj = np.array([[p.x, p.y] for p in scene.trajectory])
ax.plot(traj[:, 0], traj[:, 1], "r.-", ms=4, lw=0.8, label="trajectory")
ax.set_aspect("equal")
ax.legend()
ax.set_title("synthetic scene: walls, openings, walkthrough, points")
fig.savefig("demos/output_scene.png", dpi=120, bbox_inches="tight")
print("wrote demos/output_scene.png")

# determinism: the same seed always produces byte-identical scenes
again = synth.generate_scene(seed=20003)
from layoutfix import slang

assert slang.serialize_layout(again.layout) == slang.serialize_layout(scene.layout)
assert np.array_equal(again.points.xyz, scene.points.xyz)
print("generation is a pure function of the seed")

# datasets persist as plain text files per scene
synth.write_dataset("demos/output_dataset", [scene])
print("wrote demos/output_dataset/scene_20003/{layout,points,trajectory}.txt")
