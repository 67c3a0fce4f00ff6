// JSON shapes of the session API (all lengths meters, angles radians).

export interface WallJson {
  id: number;
  class: "wall";
  a_x: number;
  a_y: number;
  b_x: number;
  b_y: number;
  height: number;
}

export interface OpeningJson {
  id: number;
  class: "door" | "window";
  center_x: number;
  center_y: number;
  sill_z: number;
  width: number;
  height: number;
  wall_id: number | null;
}

export type EntityJson = WallJson | OpeningJson;

export function isWall(e: EntityJson): e is WallJson {
  return e.class === "wall";
}

export interface PoseJson {
  x: number;
  y: number;
  eye_z: number;
  yaw: number;
}

export interface SessionInfo {
  layout: EntityJson[];
  points: number[][];
  poses: PoseJson[];
  history: { type: string; removed: number[]; added: number[] }[];
}

export interface ActionDiff {
  removed: number[];
  added: EntityJson[];
  plane_distance?: number;
}

export interface MetricsReport {
  avg_f1: Record<string, number>;
  plane_distance: number;
}

export type ActionType = "infill" | "add" | "delete";

export interface ActionRequest {
  type: ActionType;
  pose: PoseJson;
  entity_ids?: number[];
  class?: "door" | "window";
}
