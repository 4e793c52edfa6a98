/** Layered layout for server-computed Hasse diagrams.
 *
 * Arcs point from better classes to worse ones, so a node's layer is the
 * longest arc-path from any source; better nodes render higher.
 */

import type { HasseResponse } from "./types.js";

export interface NodePosition {
  index: number;
  label: string;
  x: number;
  y: number;
  layer: number;
}

export interface ArcPosition {
  from: number;
  to: number;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface Layout {
  width: number;
  height: number;
  nodes: NodePosition[];
  arcs: ArcPosition[];
}

export function layerAssignment(count: number, arcs: Array<[number, number]>): number[] {
  const incoming: number[][] = Array.from({ length: count }, () => []);
  const outgoing: number[][] = Array.from({ length: count }, () => []);
  for (const [from, to] of arcs) {
    outgoing[from].push(to);
    incoming[to].push(from);
  }
  const layer = new Array<number>(count).fill(0);
  const indegree = incoming.map((list) => list.length);
  const queue: number[] = [];
  for (let v = 0; v < count; v += 1) if (indegree[v] === 0) queue.push(v);
  let seen = 0;
  while (queue.length > 0) {
    const v = queue.shift() as number;
    seen += 1;
    for (const w of outgoing[v]) {
      layer[w] = Math.max(layer[w], layer[v] + 1);
      indegree[w] -= 1;
      if (indegree[w] === 0) queue.push(w);
    }
  }
  if (seen !== count) throw new Error("hasse arcs contain a cycle");
  return layer;
}

export function layout(diagram: HasseResponse, width = 640, rowHeight = 90, margin = 50): Layout {
  const count = diagram.nodes.length;
  const layers = layerAssignment(count, diagram.arcs);
  const depth = count === 0 ? 0 : Math.max(...layers);
  const byLayer = new Map<number, number[]>();
  for (let v = 0; v < count; v += 1) {
    const bucket = byLayer.get(layers[v]) ?? [];
    bucket.push(v);
    byLayer.set(layers[v], bucket);
  }
  const nodes: NodePosition[] = new Array(count);
  for (const [level, members] of byLayer) {
    members.forEach((v, position) => {
      nodes[v] = {
        index: v,
        label: diagram.nodes[v].join(" = "),
        x: margin + ((position + 1) * (width - 2 * margin)) / (members.length + 1),
        y: margin + level * rowHeight,
        layer: level,
      };
    });
  }
  const arcs: ArcPosition[] = diagram.arcs.map(([from, to]) => ({
    from,
    to,
    x1: nodes[from].x,
    y1: nodes[from].y,
    x2: nodes[to].x,
    y2: nodes[to].y,
  }));
  return { width, height: 2 * margin + depth * rowHeight, nodes, arcs };
}
