// Graph view state and its pure transitions. The state is the single
// client-side source of truth for the graph pane; every transition
// returns a fresh value so replaying a history reproduces states
// exactly.

import type { EdgeInfo, NeighborhoodResponse, NodeInfo, RiskLevel } from "./types.js";

export interface GraphViewState {
  nodes: ReadonlyMap<string, NodeInfo>;
  edges: ReadonlyMap<string, EdgeInfo>;
  history: readonly string[]; // node ids in expansion order
  selected: string | null;
  riskFilter: RiskLevel | null;
}

export function emptyState(): GraphViewState {
  return { nodes: new Map(), edges: new Map(), history: [], selected: null, riskFilter: null };
}

export function edgeKey(edge: EdgeInfo): string {
  return `${edge.source}|${edge.predicate}|${edge.target}`;
}

/** Merge a depth-1 neighborhood into the view and record the expansion. */
export function mergeNeighborhood(
  state: GraphViewState,
  response: NeighborhoodResponse,
): GraphViewState {
  const nodes = new Map(state.nodes);
  for (const node of response.nodes) {
    nodes.set(node.id, node); // fresh server copy wins (badges may change)
  }
  const edges = new Map(state.edges);
  for (const edge of response.edges) {
    edges.set(edgeKey(edge), edge);
  }
  return {
    nodes,
    edges,
    history: [...state.history, response.center],
    selected: state.selected,
    riskFilter: state.riskFilter,
  };
}

export function selectNode(state: GraphViewState, id: string | null): GraphViewState {
  return { ...state, selected: id };
}

export function setRiskFilter(state: GraphViewState, filter: RiskLevel | null): GraphViewState {
  return { ...state, riskFilter: filter };
}

/** A node is expandable when it is visible and an IRI (literals are leaves). */
export function canExpand(state: GraphViewState, id: string): boolean {
  const node = state.nodes.get(id);
  return node !== undefined && node.kind === "iri";
}

/**
 * Nodes and edges to draw under the active risk filter. Badged nodes
 * that miss the filter are hidden; unbadged nodes stay. Every surviving
 * edge keeps both endpoints visible (the view invariant).
 */
export function visibleView(state: GraphViewState): { nodes: NodeInfo[]; edges: EdgeInfo[] } {
  const nodes: NodeInfo[] = [];
  for (const node of state.nodes.values()) {
    if (state.riskFilter && node.badge && node.badge !== state.riskFilter) {
      continue;
    }
    nodes.push(node);
  }
  const visible = new Set(nodes.map((n) => n.id));
  const edges = [...state.edges.values()].filter(
    (e) => visible.has(e.source) && visible.has(e.target),
  );
  return { nodes, edges };
}

export type NeighborhoodFetcher = (center: string) => Promise<NeighborhoodResponse>;

/**
 * Rebuild a view by replaying an expansion history in order against an
 * unchanged store; the result equals the state the history was recorded
 * from (selection and filter are presentation state and reset).
 */
export async function replayHistory(
  history: readonly string[],
  fetcher: NeighborhoodFetcher,
): Promise<GraphViewState> {
  let state = emptyState();
  for (const center of history) {
    state = mergeNeighborhood(state, await fetcher(center));
  }
  return state;
}
