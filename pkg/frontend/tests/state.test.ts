// Graph view state transitions and the replay invariant.

import { describe, expect, it } from "vitest";

import {
  canExpand,
  edgeKey,
  emptyState,
  mergeNeighborhood,
  replayHistory,
  selectNode,
  setRiskFilter,
  visibleView,
} from "../src/state.js";
import type { NeighborhoodResponse } from "../src/types.js";
import { dinnerNeighborhood } from "./fixtures.js";

const DINNER = "http://plod.info/rdf/id/event_dinner";

function byId(response: NeighborhoodResponse, suffix: string): string {
  const node = response.nodes.find((n) => n.id.endsWith(suffix));
  if (!node) throw new Error(`fixture is missing ${suffix}`);
  return node.id;
}

describe("mergeNeighborhood", () => {
  it("shows persons A, B, C and the restaurant after expanding the dinner event", () => {
    const state = mergeNeighborhood(emptyState(), dinnerNeighborhood);
    const ids = new Set(state.nodes.keys());
    expect(ids.has(byId(dinnerNeighborhood, "person_a_A"))).toBe(true);
    expect(ids.has(byId(dinnerNeighborhood, "person_a_B"))).toBe(true);
    expect(ids.has(byId(dinnerNeighborhood, "person_a_C"))).toBe(true);
    expect(ids.has(byId(dinnerNeighborhood, "restaurant_1"))).toBe(true);
  });

  it("keeps the high badge delivered by the service on the dinner event", () => {
    const state = mergeNeighborhood(emptyState(), dinnerNeighborhood);
    expect(state.nodes.get(DINNER)?.badge).toBe("high");
  });

  it("is idempotent for a repeated expansion, apart from the history entry", () => {
    const once = mergeNeighborhood(emptyState(), dinnerNeighborhood);
    const twice = mergeNeighborhood(once, dinnerNeighborhood);
    expect(twice.nodes).toEqual(once.nodes);
    expect(twice.edges).toEqual(once.edges);
    expect(twice.history).toEqual([DINNER, DINNER]);
  });

  it("records the expansion history in order", () => {
    const other: NeighborhoodResponse = {
      center: "urn:x",
      nodes: [{ id: "urn:x", kind: "iri", type: "resource", badge: null }],
      edges: [],
    };
    const state = mergeNeighborhood(mergeNeighborhood(emptyState(), dinnerNeighborhood), other);
    expect(state.history).toEqual([DINNER, "urn:x"]);
  });

  it("never holds an edge without both endpoints", () => {
    const state = mergeNeighborhood(emptyState(), dinnerNeighborhood);
    const { nodes, edges } = visibleView(state);
    const visible = new Set(nodes.map((n) => n.id));
    for (const edge of edges) {
      expect(visible.has(edge.source)).toBe(true);
      expect(visible.has(edge.target)).toBe(true);
    }
  });
});

describe("expansion rules", () => {
  it("treats literals as leaves", () => {
    const withLiteral = mergeNeighborhood(emptyState(), {
      center: "urn:a",
      nodes: [
        { id: "urn:a", kind: "iri", type: "resource", badge: null },
        { id: '"minato-ku"', kind: "literal", type: "literal", badge: null },
      ],
      edges: [{ source: "urn:a", predicate: "urn:p", target: '"minato-ku"' }],
    });
    expect(canExpand(withLiteral, "urn:a")).toBe(true);
    expect(canExpand(withLiteral, '"minato-ku"')).toBe(false);
    expect(canExpand(withLiteral, "urn:unknown")).toBe(false);
  });
});

describe("risk filter", () => {
  it("hides badged nodes outside the filter and drops dangling edges", () => {
    const state = setRiskFilter(mergeNeighborhood(emptyState(), dinnerNeighborhood), "medium");
    const { nodes, edges } = visibleView(state);
    const visible = new Set(nodes.map((n) => n.id));
    expect(visible.has(DINNER)).toBe(false); // badge high, filter medium
    expect(visible.has(byId(dinnerNeighborhood, "person_a_A"))).toBe(true); // unbadged
    for (const edge of edges) {
      expect(visible.has(edge.source)).toBe(true);
      expect(visible.has(edge.target)).toBe(true);
    }
  });
});

describe("replayHistory", () => {
  it("reproduces the identical view state against an unchanged store", async () => {
    const responses = new Map<string, NeighborhoodResponse>([
      [DINNER, dinnerNeighborhood],
    ]);
    const fetcher = async (center: string) => {
      const found = responses.get(center);
      if (!found) throw new Error(`no response for ${center}`);
      return found;
    };
    const live = mergeNeighborhood(
      mergeNeighborhood(emptyState(), dinnerNeighborhood),
      dinnerNeighborhood,
    );
    const replayed = await replayHistory(live.history, fetcher);
    expect(replayed.history).toEqual(live.history);
    expect(replayed.nodes).toEqual(live.nodes);
    expect(replayed.edges).toEqual(live.edges);
  });
});

describe("selection", () => {
  it("is presentation state only", () => {
    const state = mergeNeighborhood(emptyState(), dinnerNeighborhood);
    const selected = selectNode(state, DINNER);
    expect(selected.selected).toBe(DINNER);
    expect(selected.nodes).toEqual(state.nodes);
    expect(edgeKey({ source: "a", predicate: "p", target: "b" })).toBe("a|p|b");
  });
});
