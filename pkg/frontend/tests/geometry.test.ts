import { describe, expect, it } from "vitest";

import {
  canExtendWallSelection,
  entitySegment,
  entityVisible,
  wallsConnected,
} from "../src/geometry.js";
import { EntityJson, PoseJson } from "../src/types.js";

const room: EntityJson[] = [
  { id: 0, class: "wall", a_x: 4, a_y: 0, b_x: 4, b_y: 4, height: 2.7 },
  { id: 1, class: "wall", a_x: 0, a_y: 4, b_x: 4, b_y: 4, height: 2.7 },
  { id: 2, class: "wall", a_x: 0, a_y: 0, b_x: 0, b_y: 4, height: 2.7 },
  { id: 3, class: "wall", a_x: 0, a_y: 0, b_x: 4, b_y: 0, height: 2.7 },
];
const center: PoseJson = { x: 2, y: 2, eye_z: 1.5, yaw: 0 };

describe("entitySegment", () => {
  it("orients openings along their host wall", () => {
    const door: EntityJson = {
      id: 9, class: "door", center_x: 4, center_y: 2, sill_z: 0,
      width: 1.0, height: 2.0, wall_id: 0,
    };
    const seg = entitySegment(door, room);
    expect(seg.ax).toBeCloseTo(4);
    expect(seg.bx).toBeCloseTo(4);
    expect(Math.abs(seg.by - seg.ay)).toBeCloseTo(1.0);
  });
});

describe("wallsConnected", () => {
  it("shares a corner", () => {
    expect(
      wallsConnected(entitySegment(room[0], room), entitySegment(room[1], room)),
    ).toBe(true);
  });
  it("opposite walls are not adjacent", () => {
    expect(
      wallsConnected(entitySegment(room[0], room), entitySegment(room[2], room)),
    ).toBe(false);
  });
});

describe("entityVisible", () => {
  it("sees the facing wall", () => {
    expect(entityVisible(room[0], room, center)).toBe(true);
  });
  it("wall behind the 210-degree fov is invisible", () => {
    expect(entityVisible(room[2], room, center)).toBe(false);
  });
  it("occluded wall is invisible", () => {
    const scene: EntityJson[] = [
      { id: 0, class: "wall", a_x: 2, a_y: -3, b_x: 2, b_y: 3, height: 2.7 },
      { id: 1, class: "wall", a_x: 4, a_y: -1, b_x: 4, b_y: 1, height: 2.7 },
    ];
    const pose: PoseJson = { x: 0, y: 0, eye_z: 1.5, yaw: 0 };
    expect(entityVisible(scene[1], scene, pose)).toBe(false);
    expect(entityVisible(scene[0], scene, pose)).toBe(true);
  });
});

describe("canExtendWallSelection", () => {
  it("allows a connected visible wall", () => {
    expect(canExtendWallSelection(new Set([0]), room[1], room, center)).toBe(true);
  });
  it("rejects a disconnected-but-visible candidate", () => {
    const scene: EntityJson[] = [
      ...room,
      { id: 8, class: "wall", a_x: 1.5, a_y: 1.5, b_x: 2.5, b_y: 1.5, height: 2.7 },
    ];
    expect(canExtendWallSelection(new Set([0]), scene[4], scene, center)).toBe(false);
  });
  it("rejects an invisible candidate", () => {
    expect(canExtendWallSelection(new Set([1]), room[2], room, center)).toBe(false);
  });
});
