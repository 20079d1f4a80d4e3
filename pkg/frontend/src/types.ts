// Wire types of the tracekg HTTP API. The client renders these values
// verbatim: every number and level shown in the UI is fetched, never
// recomputed here.

export type RiskLevel = "high" | "medium" | "low";

export interface NodeInfo {
  id: string;
  kind: "iri" | "literal";
  type: string;
  badge: RiskLevel | null;
}

export interface EdgeInfo {
  source: string;
  predicate: string;
  target: string;
}

export interface NeighborhoodResponse {
  center: string;
  nodes: NodeInfo[];
  edges: EdgeInfo[];
}

export interface CoAttendeeRow {
  agent: string;
  cnt: number;
}

export interface IntersectionRow {
  event1: string;
  place1: string;
  city1: string;
  event2: string;
  place2: string;
  city2: string;
}

export interface RiskAssignment {
  entity: string;
  kind: "event" | "situation";
  closeness: RiskLevel;
  crowdedness: RiskLevel;
  enclosedness: RiskLevel;
  derived_classes: string[];
  potential_actions: string[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail?: unknown;
}

// Fixed badge palette; documented in the legend component.
export const RISK_COLORS: Record<RiskLevel | "none", string> = {
  high: "#d64545",
  medium: "#e8a33d",
  low: "#4caf72",
  none: "#8b94a3",
};

export function badgeColor(badge: RiskLevel | null): string {
  return badge ? RISK_COLORS[badge] : RISK_COLORS.none;
}

/** Compact display form of an IRI (trailing path segment). */
export function localName(iri: string): string {
  const cut = Math.max(iri.lastIndexOf("/"), iri.lastIndexOf("#"));
  return cut >= 0 ? iri.slice(cut + 1) : iri;
}
