// Entity picking: nearest entity within a screen-space tolerance.

import { entitySegment } from "./geometry.js";
import { EntityJson } from "./types.js";
import { ViewState, worldToScreen } from "./view.js";

export const PICK_TOLERANCE_PX = 12;

function pointSegmentDistance(
  px: number, py: number, ax: number, ay: number, bx: number, by: number,
): number {
  const dx = bx - ax;
  const dy = by - ay;
  const len2 = dx * dx + dy * dy;
  const t = len2 === 0 ? 0 : Math.max(0, Math.min(1, ((px - ax) * dx + (py - ay) * dy) / len2));
  return Math.hypot(ax + t * dx - px, ay + t * dy - py);
}

export function pickEntity(
  view: ViewState,
  layout: EntityJson[],
  sx: number,
  sy: number,
  tolerancePx: number = PICK_TOLERANCE_PX,
): number | null {
  let bestId: number | null = null;
  let bestDist = tolerancePx;
  // openings drawn on top of walls pick first at equal distance
  const order = [...layout].sort((a, b) =>
    (a.class === "wall" ? 0 : 1) - (b.class === "wall" ? 0 : 1),
  );
  for (const e of order) {
    const seg = entitySegment(e, layout);
    const [ax, ay] = worldToScreen(view, seg.ax, seg.ay);
    const [bx, by] = worldToScreen(view, seg.bx, seg.by);
    const d = pointSegmentDistance(sx, sy, ax, ay, bx, by);
    if (d <= bestDist) {
      bestDist = d;
      bestId = e.id;
    }
  }
  return bestId;
}
