// Small deterministic force-directed layout: seeded initial positions
// (hash of the node id), spring forces along edges, pairwise repulsion,
// and a centering pull. Deterministic so the same view state always
// lands in the same picture.

export interface LayoutNode {
  id: string;
  x: number;
  y: number;
  vx: number;
  vy: number;
  pinned?: boolean;
}

export interface LayoutEdge {
  source: string;
  target: string;
}

function hash(text: string): number {
  let h = 2166136261;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 16777619);
  }
  return h >>> 0;
}

export function seededPosition(id: string, width: number, height: number): { x: number; y: number } {
  const h = hash(id);
  const angle = ((h % 3600) / 3600) * 2 * Math.PI;
  const radius = (((h >>> 12) % 1000) / 1000) * 0.35 + 0.08;
  return {
    x: width / 2 + Math.cos(angle) * radius * width,
    y: height / 2 + Math.sin(angle) * radius * height,
  };
}

export interface LayoutOptions {
  width: number;
  height: number;
  springLength: number;
  springStrength: number;
  repulsion: number;
  damping: number;
}

export const DEFAULT_LAYOUT: LayoutOptions = {
  width: 900,
  height: 560,
  springLength: 110,
  springStrength: 0.03,
  repulsion: 5200,
  damping: 0.82,
};

export function layoutStep(
  nodes: LayoutNode[],
  edges: LayoutEdge[],
  opts: LayoutOptions = DEFAULT_LAYOUT,
): void {
  const byId = new Map(nodes.map((n) => [n.id, n]));
  for (let i = 0; i < nodes.length; i++) {
    const a = nodes[i];
    for (let j = i + 1; j < nodes.length; j++) {
      const b = nodes[j];
      let dx = a.x - b.x;
      let dy = a.y - b.y;
      const distSq = dx * dx + dy * dy || 0.01;
      const dist = Math.sqrt(distSq);
      const force = opts.repulsion / distSq;
      dx = (dx / dist) * force;
      dy = (dy / dist) * force;
      a.vx += dx;
      a.vy += dy;
      b.vx -= dx;
      b.vy -= dy;
    }
  }
  for (const edge of edges) {
    const a = byId.get(edge.source);
    const b = byId.get(edge.target);
    if (!a || !b) continue;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const dist = Math.sqrt(dx * dx + dy * dy) || 0.01;
    const stretch = (dist - opts.springLength) * opts.springStrength;
    a.vx += (dx / dist) * stretch;
    a.vy += (dy / dist) * stretch;
    b.vx -= (dx / dist) * stretch;
    b.vy -= (dy / dist) * stretch;
  }
  for (const node of nodes) {
    if (node.pinned) {
      node.vx = 0;
      node.vy = 0;
      continue;
    }
    node.vx += (opts.width / 2 - node.x) * 0.002;
    node.vy += (opts.height / 2 - node.y) * 0.002;
    node.vx *= opts.damping;
    node.vy *= opts.damping;
    node.x += node.vx;
    node.y += node.vy;
    node.x = Math.min(Math.max(node.x, 24), opts.width - 24);
    node.y = Math.min(Math.max(node.y, 24), opts.height - 24);
  }
}

export function runLayout(
  nodes: LayoutNode[],
  edges: LayoutEdge[],
  steps = 140,
  opts: LayoutOptions = DEFAULT_LAYOUT,
): void {
  for (let i = 0; i < steps; i++) {
    layoutStep(nodes, edges, opts);
  }
}
