// View state: camera pan/zoom, selection, avatar pose, last diff.

import { EntityJson, MetricsReport, PoseJson } from "./types.js";

export interface ViewState {
  scale: number;        // screen px per meter
  offsetX: number;      // world origin in screen px
  offsetY: number;
  selected: Set<number>;
  avatar: PoseJson;
  lastRemoved: number[];
  lastAdded: number[];
  metrics: MetricsReport | null;
  inFlight: boolean;
}

export function initialView(): ViewState {
  return {
    scale: 60,
    offsetX: 60,
    offsetY: 540,
    selected: new Set(),
    avatar: { x: 2, y: 2, eye_z: 1.5, yaw: 0 },
    lastRemoved: [],
    lastAdded: [],
    metrics: null,
    inFlight: false,
  };
}

export function worldToScreen(view: ViewState, x: number, y: number): [number, number] {
  return [view.offsetX + x * view.scale, view.offsetY - y * view.scale];
}

export function screenToWorld(view: ViewState, sx: number, sy: number): [number, number] {
  return [(sx - view.offsetX) / view.scale, (view.offsetY - sy) / view.scale];
}

export function fitView(
  view: ViewState, layout: EntityJson[], width: number, height: number,
): void {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const e of layout) {
    if (e.class === "wall") {
      xs.push(e.a_x, e.b_x);
      ys.push(e.a_y, e.b_y);
    } else {
      xs.push(e.center_x);
      ys.push(e.center_y);
    }
  }
  if (!xs.length) return;
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const margin = 1.0;
  const spanX = maxX - minX + 2 * margin;
  const spanY = maxY - minY + 2 * margin;
  view.scale = Math.min(width / spanX, height / spanY);
  view.offsetX = -(minX - margin) * view.scale;
  view.offsetY = height + (minY - margin) * view.scale;
}

export function zoomAt(view: ViewState, sx: number, sy: number, factor: number): void {
  const [wx, wy] = screenToWorld(view, sx, sy);
  view.scale *= factor;
  view.offsetX = sx - wx * view.scale;
  view.offsetY = sy + wy * view.scale;
}
