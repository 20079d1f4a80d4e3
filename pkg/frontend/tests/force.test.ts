// Layout determinism: identical inputs land in identical positions.

import { expect, it } from "vitest";

import { layoutStep, runLayout, seededPosition, DEFAULT_LAYOUT } from "../src/force.js";

it("seeds positions deterministically from node ids", () => {
  const a = seededPosition("urn:x", 900, 560);
  const b = seededPosition("urn:x", 900, 560);
  expect(a).toEqual(b);
  expect(seededPosition("urn:y", 900, 560)).not.toEqual(a);
});

it("runs a deterministic simulation", () => {
  const make = () => [
    { id: "a", ...seededPosition("a", 900, 560), vx: 0, vy: 0 },
    { id: "b", ...seededPosition("b", 900, 560), vx: 0, vy: 0 },
    { id: "c", ...seededPosition("c", 900, 560), vx: 0, vy: 0 },
  ];
  const edges = [
    { source: "a", target: "b" },
    { source: "b", target: "c" },
  ];
  const first = make();
  const second = make();
  runLayout(first, edges, 80);
  runLayout(second, edges, 80);
  expect(first).toEqual(second);
});

it("keeps nodes inside the canvas", () => {
  const nodes = [
    { id: "a", x: 1, y: 1, vx: -50, vy: -50 },
    { id: "b", x: 899, y: 559, vx: 50, vy: 50 },
  ];
  for (let i = 0; i < 30; i++) layoutStep(nodes, [], DEFAULT_LAYOUT);
  for (const node of nodes) {
    expect(node.x).toBeGreaterThanOrEqual(24);
    expect(node.x).toBeLessThanOrEqual(DEFAULT_LAYOUT.width - 24);
    expect(node.y).toBeGreaterThanOrEqual(24);
    expect(node.y).toBeLessThanOrEqual(DEFAULT_LAYOUT.height - 24);
  }
});

it("pins fixed nodes in place", () => {
  const nodes = [
    { id: "a", x: 100, y: 100, vx: 0, vy: 0, pinned: true },
    { id: "b", x: 130, y: 100, vx: 0, vy: 0 },
  ];
  runLayout(nodes, [{ source: "a", target: "b" }], 40);
  expect(nodes[0]!.x).toBe(100);
  expect(nodes[0]!.y).toBe(100);
});
