// Client-side mirrors of the server's selection rules: the top-down
// segment of each entity, wall connectivity, and pose visibility. These
// only gate what the UI lets you select; the server re-validates.

import { EntityJson, PoseJson, isWall } from "./types.js";

export type Segment = { ax: number; ay: number; bx: number; by: number };

const CONNECT_EPS = 0.1;
const VIS_RANGE = 8.0;
const VIS_FOV = (210 * Math.PI) / 180;
const VIS_SAMPLES = 9;

export function entitySegment(e: EntityJson, layout: EntityJson[]): Segment {
  if (isWall(e)) {
    return { ax: e.a_x, ay: e.a_y, bx: e.b_x, by: e.b_y };
  }
  let dx = 1.0;
  let dy = 0.0;
  const host = layout.find((w) => isWall(w) && w.id === e.wall_id);
  if (host && isWall(host)) {
    const wx = host.b_x - host.a_x;
    const wy = host.b_y - host.a_y;
    const n = Math.hypot(wx, wy);
    if (n > 0) {
      dx = wx / n;
      dy = wy / n;
    }
  }
  const h = e.width / 2;
  return {
    ax: e.center_x - h * dx,
    ay: e.center_y - h * dy,
    bx: e.center_x + h * dx,
    by: e.center_y + h * dy,
  };
}

export function wallsConnected(a: Segment, b: Segment): boolean {
  const pts = (s: Segment) => [
    [s.ax, s.ay],
    [s.bx, s.by],
  ];
  for (const [x1, y1] of pts(a)) {
    for (const [x2, y2] of pts(b)) {
      if (Math.hypot(x1 - x2, y1 - y2) <= CONNECT_EPS) return true;
    }
  }
  return false;
}

function crosses(
  px: number, py: number, qx: number, qy: number, s: Segment,
): boolean {
  // proper crossing of the open segment p->q with s (endpoint grazing ok)
  const dx = qx - px;
  const dy = qy - py;
  const ex = s.bx - s.ax;
  const ey = s.by - s.ay;
  const denom = dx * ey - dy * ex;
  if (Math.abs(denom) < 1e-15) return false;
  const fx = s.ax - px;
  const fy = s.ay - py;
  const t = (fx * ey - fy * ex) / denom;
  const u = (fx * dy - fy * dx) / denom;
  const eps = 1e-9;
  return t > eps && t < 1 - eps && u > eps && u < 1 - eps;
}

function normalizeAngle(t: number): number {
  return Math.atan2(Math.sin(t), Math.cos(t));
}

export function entityVisible(
  e: EntityJson,
  layout: EntityJson[],
  pose: PoseJson,
): boolean {
  const seg = entitySegment(e, layout);
  const ownWall = isWall(e) ? e.id : e.wall_id;
  const occluders = layout
    .filter((w) => isWall(w) && w.id !== ownWall)
    .map((w) => entitySegment(w, layout));
  for (let i = 0; i < VIS_SAMPLES; i++) {
    const t = i / (VIS_SAMPLES - 1);
    const sx = seg.ax + t * (seg.bx - seg.ax);
    const sy = seg.ay + t * (seg.by - seg.ay);
    const dist = Math.hypot(sx - pose.x, sy - pose.y);
    if (dist > VIS_RANGE) continue;
    const bearing = normalizeAngle(Math.atan2(sy - pose.y, sx - pose.x) - pose.yaw);
    if (Math.abs(bearing) > VIS_FOV / 2) continue;
    if (!occluders.some((o) => crosses(pose.x, pose.y, sx, sy, o))) return true;
  }
  return false;
}

export function canExtendWallSelection(
  selected: Set<number>,
  candidate: EntityJson,
  layout: EntityJson[],
  pose: PoseJson,
): boolean {
  if (!isWall(candidate) || selected.has(candidate.id)) return false;
  if (!entityVisible(candidate, layout, pose)) return false;
  const selWalls = layout.filter((e) => isWall(e) && selected.has(e.id));
  if (selWalls.some((e) => !isWall(e))) return false;
  const candSeg = entitySegment(candidate, layout);
  return selWalls.some((w) => wallsConnected(entitySegment(w, layout), candSeg));
}
