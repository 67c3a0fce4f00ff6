import { describe, expect, it } from "vitest";

import { EntityJson } from "../src/types.js";
import {
  fitView,
  initialView,
  screenToWorld,
  worldToScreen,
  zoomAt,
} from "../src/view.js";

describe("view transforms", () => {
  it("world/screen round trip", () => {
    const view = initialView();
    const [sx, sy] = worldToScreen(view, 3.25, 1.5);
    const [wx, wy] = screenToWorld(view, sx, sy);
    expect(wx).toBeCloseTo(3.25);
    expect(wy).toBeCloseTo(1.5);
  });

  it("y axis points up on screen", () => {
    const view = initialView();
    const [, lowY] = worldToScreen(view, 0, 0);
    const [, highY] = worldToScreen(view, 0, 2);
    expect(highY).toBeLessThan(lowY);
  });

  it("zoomAt keeps the anchor fixed", () => {
    const view = initialView();
    const [ax, ay] = worldToScreen(view, 2, 2);
    zoomAt(view, ax, ay, 1.5);
    const [bx, by] = worldToScreen(view, 2, 2);
    expect(bx).toBeCloseTo(ax);
    expect(by).toBeCloseTo(ay);
    expect(view.scale).toBeCloseTo(90);
  });

  it("fitView contains the layout", () => {
    const view = initialView();
    const layout: EntityJson[] = [
      { id: 0, class: "wall", a_x: 0, a_y: 0, b_x: 6, b_y: 0, height: 2.7 },
      { id: 1, class: "wall", a_x: 0, a_y: 0, b_x: 0, b_y: 4, height: 2.7 },
    ];
    fitView(view, layout, 800, 600);
    for (const [wx, wy] of [[0, 0], [6, 0], [0, 4]] as const) {
      const [sx, sy] = worldToScreen(view, wx, wy);
      expect(sx).toBeGreaterThanOrEqual(0);
      expect(sx).toBeLessThanOrEqual(800);
      expect(sy).toBeGreaterThanOrEqual(0);
      expect(sy).toBeLessThanOrEqual(600);
    }
  });
});
