"""The HTTP session API, driven in-process.

The same app serves the browser UI; here we exercise it with a test
client: generate a scene, open a session (which runs the global
prediction), apply a delete, inspect metrics, and undo.
"""
from fastapi.testclient import TestClient

from layoutfix import net, synth
from layoutfix.serve import create_app

model = net.LayoutModel(net.ModelConfig(d_model=32, layers=1, heads=2), seed=0)
app = create_app(model, "demos/output_scenes", synth.GenParams(points_per_m2=15.0))
client = TestClient(app)

scene_id = client.post("/api/scenes/generate", json={"seed": 5}).json()["scene_id"]
print("scene id (content hash):", scene_id)

created = client.post("/api/sessions", json={"scene_id": scene_id}).json()
sid = created["session_id"]
print(f"session {sid}: initial layout has {len(created['layout'])} entities")

state = client.get(f"/api/sessions/{sid}").json()
print(f"points returned: {len(state['points'])}, poses: {len(state['poses'])}")

print("metrics:", client.get(f"/api/sessions/{sid}/metrics").json())

if created["layout"]:
    eid = created["layout"][0]["id"]
    diff = client.post(
        f"/api/sessions/{sid}/actions",
        json={"type": "delete", "entity_ids": [eid], "pose": {"x": 1, "y": 1}},
    ).json()
    print(f"deleted {diff['removed']}; PlaneDistance {diff['plane_distance']:.3f}")
    restored = client.post(f"/api/sessions/{sid}/undo").json()["layout"]
    print(f"undo restored {len(restored)} entities")

# a second action while one is in flight would get HTTP 409; actions are
# strictly serialized per session, and replaying a recorded action history
# against the same checkpoint reproduces the layout bit-exactly
print("done; run `layoutfix serve --ckpt <ckpt>` for the real server + UI")
