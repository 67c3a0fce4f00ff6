import { describe, expect, it } from "vitest";

import { pickEntity } from "../src/pick.js";
import { EntityJson } from "../src/types.js";
import { initialView, worldToScreen } from "../src/view.js";

// golden layout: a 4 m square room with a door on the east wall
const golden: EntityJson[] = [
  { id: 0, class: "wall", a_x: 4, a_y: 0, b_x: 4, b_y: 4, height: 2.7 },
  { id: 1, class: "wall", a_x: 0, a_y: 4, b_x: 4, b_y: 4, height: 2.7 },
  { id: 2, class: "wall", a_x: 0, a_y: 0, b_x: 0, b_y: 4, height: 2.7 },
  { id: 3, class: "wall", a_x: 0, a_y: 0, b_x: 4, b_y: 0, height: 2.7 },
  {
    id: 4, class: "door", center_x: 4, center_y: 2, sill_z: 0,
    width: 0.9, height: 2.0, wall_id: 0,
  },
];

describe("pickEntity", () => {
  const view = initialView(); // 60 px per meter

  it("resolves a wall under the cursor", () => {
    const [sx, sy] = worldToScreen(view, 2.0, 4.0); // midpoint of wall 1
    expect(pickEntity(view, golden, sx, sy)).toBe(1);
  });

  it("resolves ids within the 12 px tolerance", () => {
    const [sx, sy] = worldToScreen(view, 0.0, 2.0); // on wall 2
    expect(pickEntity(view, golden, sx + 11, sy)).toBe(2);
    expect(pickEntity(view, golden, sx - 11, sy)).toBe(2);
  });

  it("returns null beyond the tolerance", () => {
    const [sx, sy] = worldToScreen(view, 2.0, 2.0); // room center
    expect(pickEntity(view, golden, sx, sy)).toBeNull();
    const [ex, ey] = worldToScreen(view, 0.0, 2.0);
    expect(pickEntity(view, golden, ex - 13, ey)).toBeNull();
  });

  it("prefers the door over its host wall", () => {
    const [sx, sy] = worldToScreen(view, 4.0, 2.0); // door center on wall 0
    expect(pickEntity(view, golden, sx, sy)).toBe(4);
  });

  it("picks the nearest of two candidates", () => {
    const [sx, sy] = worldToScreen(view, 4.0, 3.2); // on wall 0, above door
    expect(pickEntity(view, golden, sx, sy)).toBe(0);
  });
});
