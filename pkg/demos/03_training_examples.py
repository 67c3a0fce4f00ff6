"""Both training tasks from one scene: global prediction and local correction.

Global prediction frames the whole scene in the positive quadrant and
supervises every token. Local correction picks visible entities, removes
them from the input, anchors the scene at the user's (jittered) pose, and
moves the removed entities to the end as a START..STOP target: the
fill-in-the-middle rearrangement (prefix, suffix, target).
"""
import numpy as np

from layoutfix import fim, slang, synth
from layoutfix.fim import FimConfig
from layoutfix.slang import LEXICOGRAPHIC

scene = synth.generate_scene(seed=17)
rng = np.random.default_rng(0)

ex_global = fim.make_global_example(scene, LEXICOGRAPHIC, rng)
print(f"global example: {len(ex_global)} tokens, "
      f"{int(ex_global.loss_mask.sum())} supervised predictions")

# a local example needs a pose and a selection of visible entities; poses
# whose selection cannot be framed are simply resampled, as in training
cfg = FimConfig()
for pose in scene.trajectory:
    try:
        selection = fim.select_correction_target(scene, pose, rng, cfg)
        ex_local = fim.make_local_example(scene, selection, LEXICOGRAPHIC, rng, cfg)
        break
    except (fim.SelectionError, slang.FramingError):
        continue
print(f"\nselected {selection.kind}: ids {sorted(selection.ids)} "
      f"(of {len(scene.layout)} entities)")
names = np.array(["G", "P", "S", "T"])
print("roles:    ", "".join(names[ex_local.roles]))
print("positions:", " ".join(str(p) for p in ex_local.positions.tolist()))
print("loss on:  ", "".join("^" if m else "." for m in ex_local.loss_mask))

# the supervised span is exactly the target entities plus STOP; the given
# START token and the whole context are never trained
n_target = int((ex_local.roles == fim.TARGET).sum())
assert int(ex_local.loss_mask.sum()) == n_target - 1

# over many draws, the two tasks are sampled in equal proportion
modes = [
    fim.sample_training_example(scene, cfg, rng).mode for _ in range(400)
]
print(f"\nglobal fraction over 400 draws: {modes.count('global') / 400:.2f}")
