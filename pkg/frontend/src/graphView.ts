// SVG rendering of the graph pane. Clicking a node selects it; the
// expand button (or double click) asks the app to fetch its depth-1
// neighborhood and merge it into the view.

import { DEFAULT_LAYOUT, LayoutNode, runLayout, seededPosition } from "./force.js";
import { GraphViewState, visibleView } from "./state.js";
import { badgeColor, localName } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface GraphViewCallbacks {
  onSelect: (id: string) => void;
  onExpand: (id: string) => void;
}

export class GraphView {
  private readonly container: HTMLElement;
  private readonly callbacks: GraphViewCallbacks;
  private positions = new Map<string, { x: number; y: number }>();

  constructor(container: HTMLElement, callbacks: GraphViewCallbacks) {
    this.container = container;
    this.callbacks = callbacks;
  }

  render(state: GraphViewState): void {
    const { nodes, edges } = visibleView(state);
    this.container.textContent = "";
    if (nodes.length === 0) {
      const empty = document.createElement("p");
      empty.className = "empty-state";
      empty.textContent = "No nodes yet. Enter a node id above and press Center.";
      this.container.appendChild(empty);
      return;
    }

    const layoutNodes: LayoutNode[] = nodes.map((n) => {
      const kept = this.positions.get(n.id) ?? seededPosition(n.id, DEFAULT_LAYOUT.width, DEFAULT_LAYOUT.height);
      return { id: n.id, x: kept.x, y: kept.y, vx: 0, vy: 0 };
    });
    runLayout(
      layoutNodes,
      edges.map((e) => ({ source: e.source, target: e.target })),
    );
    this.positions = new Map(layoutNodes.map((n) => [n.id, { x: n.x, y: n.y }]));

    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${DEFAULT_LAYOUT.width} ${DEFAULT_LAYOUT.height}`);
    svg.classList.add("graph-canvas");

    for (const edge of edges) {
      const a = this.positions.get(edge.source);
      const b = this.positions.get(edge.target);
      if (!a || !b) continue;
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(a.x));
      line.setAttribute("y1", String(a.y));
      line.setAttribute("x2", String(b.x));
      line.setAttribute("y2", String(b.y));
      line.classList.add("graph-edge");
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = localName(edge.predicate);
      line.appendChild(title);
      svg.appendChild(line);
    }

    for (const node of nodes) {
      const pos = this.positions.get(node.id);
      if (!pos) continue;
      const group = document.createElementNS(SVG_NS, "g");
      group.classList.add("graph-node");
      if (state.selected === node.id) group.classList.add("selected");
      group.setAttribute("transform", `translate(${pos.x} ${pos.y})`);

      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("r", node.id === state.history[0] ? "14" : "10");
      circle.setAttribute("fill", badgeColor(node.badge));
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = `${node.id}\ntype: ${node.type}` + (node.badge ? `\nrisk: ${node.badge}` : "");
      circle.appendChild(title);
      group.appendChild(circle);

      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("y", "24");
      label.setAttribute("text-anchor", "middle");
      label.classList.add("graph-label");
      label.textContent = localName(node.id);
      group.appendChild(label);

      group.addEventListener("click", () => this.callbacks.onSelect(node.id));
      group.addEventListener("dblclick", () => this.callbacks.onExpand(node.id));
      svg.appendChild(group);
    }
    this.container.appendChild(svg);
  }
}
