// Canvas rendering: top-down layout, points, avatar, highlights.
// Selected entities draw in the error accent; entities added by the last
// action draw in the fixed accent for one interaction cycle.

import { entitySegment } from "./geometry.js";
import { EntityJson, SessionInfo } from "./types.js";
import { ViewState, worldToScreen } from "./view.js";

export const COLORS = {
  background: "#fafafa",
  grid: "#e4e4e4",
  wall: "#2b2b2b",
  door: "#e08a00",
  window: "#2a7fd4",
  point: "rgba(90, 90, 110, 0.45)",
  selected: "#e0356b", // error accent
  added: "#27a643",    // fixed accent
  avatar: "#7b3fe4",
};

// the subset of CanvasRenderingContext2D the renderer needs; tests pass a
// recording stub
export interface Ctx2D {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  lineCap: string;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  stroke(): void;
  fill(): void;
  fillRect(x: number, y: number, w: number, h: number): void;
}

function strokeSegment(
  ctx: Ctx2D, view: ViewState, ax: number, ay: number, bx: number, by: number,
  color: string, widthPx: number,
): void {
  const [sx, sy] = worldToScreen(view, ax, ay);
  const [ex, ey] = worldToScreen(view, bx, by);
  ctx.strokeStyle = color;
  ctx.lineWidth = widthPx;
  ctx.lineCap = "round";
  ctx.beginPath();
  ctx.moveTo(sx, sy);
  ctx.lineTo(ex, ey);
  ctx.stroke();
}

export function renderScene(
  ctx: Ctx2D,
  view: ViewState,
  session: SessionInfo,
  width: number,
  height: number,
): void {
  ctx.fillStyle = COLORS.background;
  ctx.fillRect(0, 0, width, height);

  // 1 m grid
  ctx.strokeStyle = COLORS.grid;
  ctx.lineWidth = 1;
  const step = view.scale;
  for (let x = view.offsetX % step; x < width; x += step) {
    ctx.beginPath();
    ctx.moveTo(x, 0);
    ctx.lineTo(x, height);
    ctx.stroke();
  }
  for (let y = view.offsetY % step; y < height; y += step) {
    ctx.beginPath();
    ctx.moveTo(0, y);
    ctx.lineTo(width, y);
    ctx.stroke();
  }

  ctx.fillStyle = COLORS.point;
  for (const p of session.points) {
    const [sx, sy] = worldToScreen(view, p[0], p[1]);
    ctx.fillRect(sx - 1, sy - 1, 2, 2);
  }

  const layout = session.layout;
  const color_of = (e: EntityJson): string => {
    if (view.selected.has(e.id)) return COLORS.selected;
    if (view.lastAdded.includes(e.id)) return COLORS.added;
    return e.class === "wall"
      ? COLORS.wall
      : e.class === "door"
        ? COLORS.door
        : COLORS.window;
  };
  // walls below, openings on top
  for (const e of layout.filter((e) => e.class === "wall")) {
    const s = entitySegment(e, layout);
    strokeSegment(ctx, view, s.ax, s.ay, s.bx, s.by, color_of(e), 5);
  }
  for (const e of layout.filter((e) => e.class !== "wall")) {
    const s = entitySegment(e, layout);
    strokeSegment(ctx, view, s.ax, s.ay, s.bx, s.by, color_of(e), 9);
  }

  // avatar: position disc plus heading handle
  const a = view.avatar;
  const [ax, ay] = worldToScreen(view, a.x, a.y);
  ctx.fillStyle = COLORS.avatar;
  ctx.beginPath();
  ctx.arc(ax, ay, 7, 0, 2 * Math.PI);
  ctx.fill();
  const hx = a.x + 0.7 * Math.cos(a.yaw);
  const hy = a.y + 0.7 * Math.sin(a.yaw);
  strokeSegment(ctx, view, a.x, a.y, hx, hy, COLORS.avatar, 3);
  const [hsx, hsy] = worldToScreen(view, hx, hy);
  ctx.beginPath();
  ctx.arc(hsx, hsy, 5, 0, 2 * Math.PI);
  ctx.fill();
}
