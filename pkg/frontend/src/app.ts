// The one-click-fix controller. UI state is a pure function of server
// session state plus the view; every layout change round-trips through
// the API, and the diff is applied only from the server response.

import { Api, ApiError } from "./api.js";
import { canExtendWallSelection, entityVisible } from "./geometry.js";
import { pickEntity } from "./pick.js";
import { ActionRequest, EntityJson, SessionInfo } from "./types.js";
import { ViewState, initialView, screenToWorld } from "./view.js";

export interface AppEvents {
  onRender(): void;
  onToast(message: string): void;
}

export class FixApp {
  view: ViewState = initialView();
  sessionId: string | null = null;
  session: SessionInfo = { layout: [], points: [], poses: [], history: [] };

  constructor(private api: Api, private events: AppEvents) {}

  async start(seed: number): Promise<void> {
    const sceneId = await this.api.generateScene(seed);
    const created = await this.api.createSession(sceneId);
    this.sessionId = created.sessionId;
    await this.refresh();
    if (this.session.poses.length) {
      this.view.avatar = { ...this.session.poses[0] };
    }
    await this.refreshMetrics();
    this.events.onRender();
  }

  async refresh(): Promise<void> {
    if (!this.sessionId) return;
    this.session = await this.api.getSession(this.sessionId);
    // selection may reference entities that no longer exist
    const ids = new Set(this.session.layout.map((e) => e.id));
    this.view.selected = new Set([...this.view.selected].filter((i) => ids.has(i)));
    this.events.onRender();
  }

  async refreshMetrics(): Promise<void> {
    if (!this.sessionId) return;
    this.view.metrics = await this.api.getMetrics(this.sessionId);
    this.events.onRender();
  }

  entity(id: number): EntityJson | undefined {
    return this.session.layout.find((e) => e.id === id);
  }

  // click -> selection; shift grows a connected visible wall selection
  handleClick(sx: number, sy: number, shift: boolean): void {
    const id = pickEntity(this.view, this.session.layout, sx, sy);
    this.view.lastAdded = [];
    this.view.lastRemoved = [];
    if (id === null) {
      if (!shift) this.view.selected.clear();
      this.events.onRender();
      return;
    }
    const entity = this.entity(id)!;
    if (!shift || this.view.selected.size === 0) {
      this.view.selected = new Set([id]);
      this.events.onRender();
      return;
    }
    const selectedEntities = [...this.view.selected].map((i) => this.entity(i)!);
    const allWalls = selectedEntities.every((e) => e.class === "wall");
    if (!allWalls || entity.class !== "wall") {
      this.events.onToast("multi-select is limited to walls");
      return;
    }
    if (
      !canExtendWallSelection(
        this.view.selected, entity, this.session.layout, this.view.avatar,
      )
    ) {
      this.events.onToast("walls must be connected and visible from the avatar");
      return;
    }
    this.view.selected.add(id);
    this.events.onRender();
  }

  moveAvatar(sx: number, sy: number): void {
    const [wx, wy] = screenToWorld(this.view, sx, sy);
    this.view.avatar = { ...this.view.avatar, x: wx, y: wy };
    this.events.onRender();
  }

  aimAvatar(sx: number, sy: number): void {
    const [wx, wy] = screenToWorld(this.view, sx, sy);
    this.view.avatar = {
      ...this.view.avatar,
      yaw: Math.atan2(wy - this.view.avatar.y, wx - this.view.avatar.x),
    };
    this.events.onRender();
  }

  canInfill(): boolean {
    if (this.view.selected.size === 0) return false;
    const ents = [...this.view.selected].map((i) => this.entity(i)).filter(Boolean);
    const classes = new Set(ents.map((e) => e!.class));
    if (classes.size !== 1) return false;
    if (!classes.has("wall") && ents.length !== 1) return false;
    return ents.every((e) => entityVisible(e!, this.session.layout, this.view.avatar));
  }

  async submitAction(type: "infill" | "delete" | "add", cls?: "door" | "window"):
    Promise<void> {
    if (!this.sessionId || this.view.inFlight) return;
    const body: ActionRequest = { type, pose: { ...this.view.avatar } };
    if (type === "add") {
      body.class = cls;
    } else {
      body.entity_ids = [...this.view.selected].sort((a, b) => a - b);
      if (!body.entity_ids.length) {
        this.events.onToast("select an entity first");
        return;
      }
    }
    this.view.inFlight = true;
    this.events.onRender();
    try {
      const diff = await this.api.postAction(this.sessionId, body);
      this.view.lastRemoved = diff.removed;
      this.view.lastAdded = diff.added.map((e) => e.id);
      this.view.selected.clear();
      await this.refresh();
      await this.refreshMetrics();
    } catch (err) {
      if (err instanceof ApiError) {
        this.events.onToast(`${err.status}: ${err.message}`);
      } else {
        this.events.onToast(String(err));
      }
    } finally {
      this.view.inFlight = false;
      this.events.onRender();
    }
  }

  async undo(): Promise<void> {
    if (!this.sessionId || this.view.inFlight) return;
    this.view.inFlight = true;
    try {
      await this.api.undo(this.sessionId);
      this.view.lastAdded = [];
      this.view.lastRemoved = [];
      await this.refresh();
      await this.refreshMetrics();
    } catch (err) {
      if (err instanceof ApiError) this.events.onToast(`${err.status}: ${err.message}`);
    } finally {
      this.view.inFlight = false;
      this.events.onRender();
    }
  }
}
