// Node placement: fixed presets for the shipped scenarios, circle fallback.

import { Topology } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export type Layout = Map<number, Point>;

const W = 760;
const H = 430;
const CX = W / 2;
const CY = H / 2;

export const VIEW = { width: W, height: H };

function circle(ids: number[], cx: number, cy: number, r: number, startAngle = -Math.PI / 2): Layout {
  const layout: Layout = new Map();
  ids.forEach((id, i) => {
    const angle = startAngle + (2 * Math.PI * i) / ids.length;
    layout.set(id, { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  });
  return layout;
}

function star(ids: number[]): Layout {
  const layout = circle(ids.slice(1), CX, CY, Math.min(CX, CY) - 70);
  layout.set(ids[0], { x: CX, y: CY });
  return layout;
}

export function layoutFor(scenario: string, topology: Topology): Layout {
  const ids = topology.nodes.map((n) => n.id);
  if (scenario === "teleportation" || ids.length === 2) {
    return new Map([
      [ids[0], { x: CX - 220, y: CY }],
      [ids[1], { x: CX + 220, y: CY }],
    ]);
  }
  if (scenario === "bell_all_to_all" || ids.length === 3) {
    return circle(ids, CX, CY + 20, 160);
  }
  if (scenario === "ghz4" || scenario === "cluster5" || scenario === "cluster_chain") {
    return star(ids);
  }
  // Fallback: hub-and-spoke if some node touches everything, else a circle.
  return ids.length > 1 ? circle(ids, CX, CY, Math.min(CX, CY) - 60) : star(ids);
}
