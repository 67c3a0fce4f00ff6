// Browser bootstrap: canvas, buttons, mouse wiring.

import { FixApp } from "./app.js";
import { HttpApi } from "./api.js";
import { renderScene } from "./render.js";
import { fitView, screenToWorld, worldToScreen, zoomAt } from "./view.js";

const canvas = document.getElementById("scene") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const toastEl = document.getElementById("toast")!;
const metricsEl = document.getElementById("metrics")!;

const app = new FixApp(new HttpApi(""), {
  onRender: () => {
    renderScene(ctx, app.view, app.session, canvas.width, canvas.height);
    const m = app.view.metrics;
    metricsEl.textContent = m
      ? `AvgF1 wall ${m.avg_f1.wall?.toFixed(3)} door ${m.avg_f1.door?.toFixed(3)} ` +
        `window ${m.avg_f1.window?.toFixed(3)} | PlaneDistance ${m.plane_distance.toFixed(3)} m`
      : "";
    for (const id of ["infill", "delete", "add-door", "add-window", "undo"]) {
      (document.getElementById(id) as HTMLButtonElement).disabled = app.view.inFlight;
    }
  },
  onToast: (message) => {
    toastEl.textContent = message;
    toastEl.classList.add("show");
    setTimeout(() => toastEl.classList.remove("show"), 2500);
  },
});

// avatar dragging: body moves it, the heading handle re-aims it
let dragging: "none" | "avatar" | "heading" | "pan" = "none";
let panStart = { x: 0, y: 0, ox: 0, oy: 0 };

function avatarHit(sx: number, sy: number): "avatar" | "heading" | null {
  const a = app.view.avatar;
  const [ax, ay] = worldToScreen(app.view, a.x, a.y);
  const [hx, hy] = worldToScreen(
    app.view, a.x + 0.7 * Math.cos(a.yaw), a.y + 0.7 * Math.sin(a.yaw),
  );
  if (Math.hypot(sx - hx, sy - hy) <= 9) return "heading";
  if (Math.hypot(sx - ax, sy - ay) <= 10) return "avatar";
  return null;
}

canvas.addEventListener("mousedown", (ev) => {
  const hit = avatarHit(ev.offsetX, ev.offsetY);
  if (hit) {
    dragging = hit;
  } else if (ev.button === 1 || ev.altKey) {
    dragging = "pan";
    panStart = {
      x: ev.offsetX, y: ev.offsetY, ox: app.view.offsetX, oy: app.view.offsetY,
    };
  }
});
canvas.addEventListener("mousemove", (ev) => {
  if (dragging === "avatar") app.moveAvatar(ev.offsetX, ev.offsetY);
  else if (dragging === "heading") app.aimAvatar(ev.offsetX, ev.offsetY);
  else if (dragging === "pan") {
    app.view.offsetX = panStart.ox + ev.offsetX - panStart.x;
    app.view.offsetY = panStart.oy + ev.offsetY - panStart.y;
    appRender();
  }
});
canvas.addEventListener("mouseup", (ev) => {
  if (dragging === "none") app.handleClick(ev.offsetX, ev.offsetY, ev.shiftKey);
  dragging = "none";
});
canvas.addEventListener("wheel", (ev) => {
  ev.preventDefault();
  zoomAt(app.view, ev.offsetX, ev.offsetY, ev.deltaY < 0 ? 1.15 : 1 / 1.15);
  appRender();
});

function appRender() {
  renderScene(ctx, app.view, app.session, canvas.width, canvas.height);
}

document.getElementById("infill")!.addEventListener("click", () => app.submitAction("infill"));
document.getElementById("delete")!.addEventListener("click", () => app.submitAction("delete"));
document.getElementById("add-door")!.addEventListener("click", () => app.submitAction("add", "door"));
document.getElementById("add-window")!.addEventListener("click", () => app.submitAction("add", "window"));
document.getElementById("undo")!.addEventListener("click", () => app.undo());
document.getElementById("new-scene")!.addEventListener("click", async () => {
  const seed = parseInt((document.getElementById("seed") as HTMLInputElement).value, 10);
  await app.start(Number.isFinite(seed) ? seed : 0);
  fitView(app.view, app.session.layout, canvas.width, canvas.height);
  appRender();
});

app.start(7).then(() => {
  fitView(app.view, app.session.layout, canvas.width, canvas.height);
  appRender();
});
