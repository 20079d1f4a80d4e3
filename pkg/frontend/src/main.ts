// Application wiring: tabs, the graph explorer, the co-attendee chart,
// and the intersection browser, all fed by the HTTP API.

import { ApiClient, ApiFailure } from "./api.js";
import { renderChartSvg } from "./chart.js";
import { GraphView } from "./graphView.js";
import {
  GraphViewState,
  canExpand,
  emptyState,
  mergeNeighborhood,
  selectNode,
  setRiskFilter,
} from "./state.js";
import { paginate } from "./table.js";
import type { IntersectionRow, RiskLevel } from "./types.js";
import { RISK_COLORS, localName } from "./types.js";

const api = new ApiClient("");
const $ = <T extends HTMLElement>(selector: string): T => {
  const el = document.querySelector(selector);
  if (!el) throw new Error(`missing element ${selector}`);
  return el as T;
};

// ---------------------------------------------------------------- notices

function notify(message: string): void {
  const area = $("#notices");
  const note = document.createElement("div");
  note.className = "notice";
  const text = document.createElement("span");
  text.textContent = message;
  const close = document.createElement("button");
  close.textContent = "dismiss";
  close.addEventListener("click", () => note.remove());
  note.append(text, close);
  area.appendChild(note);
}

function describe(error: unknown): string {
  if (error instanceof ApiFailure) return `${error.code}: ${error.message}`;
  return String(error);
}

// ---------------------------------------------------------------- tabs

function activateTab(name: string): void {
  document.querySelectorAll<HTMLElement>(".tab").forEach((tab) => {
    tab.classList.toggle("active", tab.dataset.tab === name);
  });
  document.querySelectorAll<HTMLElement>(".pane").forEach((pane) => {
    pane.classList.toggle("active", pane.id === `pane-${name}`);
  });
}

document.querySelectorAll<HTMLElement>(".tab").forEach((tab) => {
  tab.addEventListener("click", () => activateTab(tab.dataset.tab ?? "graph"));
});

// ---------------------------------------------------------------- graph pane

let graphState: GraphViewState = emptyState();

const graphView = new GraphView($("#graph-container"), {
  onSelect: (id) => {
    graphState = selectNode(graphState, id);
    renderGraph();
    void showDetails(id);
  },
  onExpand: (id) => void expand(id),
});

function renderGraph(): void {
  graphView.render(graphState);
  $("#history").textContent = graphState.history.map(localName).join(" → ") || "(empty)";
  const expandButton = $<HTMLButtonElement>("#expand-selected");
  expandButton.disabled =
    graphState.selected === null || !canExpand(graphState, graphState.selected);
}

async function expand(id: string): Promise<void> {
  if (graphState.nodes.size > 0 && !canExpand(graphState, id)) {
    return; // literals and unknown nodes are leaves
  }
  try {
    const response = await api.neighborhood(id, 1, 60);
    graphState = mergeNeighborhood(graphState, response);
    renderGraph();
  } catch (error) {
    notify(`expand failed — ${describe(error)}`); // view stays unchanged
  }
}

async function showDetails(id: string): Promise<void> {
  const details = $("#node-details");
  try {
    const risk = await api.risk(id);
    details.textContent = [
      id,
      `closeness: ${risk.closeness}`,
      `crowdedness: ${risk.crowdedness}`,
      `enclosedness: ${risk.enclosedness}`,
      risk.potential_actions.length
        ? `potential actions: ${risk.potential_actions.map(localName).join(", ")}`
        : "",
    ]
      .filter(Boolean)
      .join("\n");
  } catch {
    details.textContent = id; // not a classified entity; identity only
  }
}

$("#center-form").addEventListener("submit", (event) => {
  event.preventDefault();
  const id = $<HTMLInputElement>("#center-input").value.trim();
  if (!id) return;
  graphState = emptyState();
  void expand(id);
});

$("#expand-selected").addEventListener("click", () => {
  if (graphState.selected) void expand(graphState.selected);
});

$("#risk-filter").addEventListener("change", () => {
  const value = $<HTMLSelectElement>("#risk-filter").value;
  graphState = setRiskFilter(graphState, (value || null) as RiskLevel | null);
  renderGraph();
});

function renderLegend(): void {
  const legend = $("#legend");
  legend.textContent = "";
  for (const [level, color] of Object.entries(RISK_COLORS)) {
    const item = document.createElement("span");
    item.className = "legend-item";
    const dot = document.createElement("span");
    dot.className = "legend-dot";
    dot.style.backgroundColor = color;
    item.append(dot, document.createTextNode(level));
    legend.appendChild(item);
  }
}

// ---------------------------------------------------------------- chart pane

$("#chart-form").addEventListener("submit", (event) => {
  event.preventDefault();
  void loadChart();
});

async function loadChart(): Promise<void> {
  const person = $<HTMLInputElement>("#chart-person").value.trim();
  const risk = $<HTMLInputElement>("#chart-risk").value.trim() || "ClosedSpace";
  const host = $("#chart-container");
  if (!person) return;
  try {
    const rows = await api.coAttendees(person, risk);
    if (rows === null) return; // superseded by a newer request
    if (rows.length === 0) {
      host.innerHTML = '<p class="empty-state">No co-attendees for this person and risk class.</p>';
      return;
    }
    host.innerHTML = renderChartSvg(rows);
  } catch (error) {
    notify(`co-attendee query failed — ${describe(error)}`);
  }
}

// ---------------------------------------------------------------- table pane

let intersectionRows: IntersectionRow[] = [];
let tablePage = 0;
const PER_PAGE = 15;

$("#table-form").addEventListener("submit", (event) => {
  event.preventDefault();
  tablePage = 0;
  void loadIntersections();
});

$("#table-prev").addEventListener("click", () => {
  tablePage -= 1;
  renderTable();
});
$("#table-next").addEventListener("click", () => {
  tablePage += 1;
  renderTable();
});

async function loadIntersections(): Promise<void> {
  try {
    const rows = await api.intersections({
      city: $<HTMLInputElement>("#table-city").value.trim() || undefined,
      place: $<HTMLInputElement>("#table-place").value.trim() || undefined,
    });
    if (rows === null) return;
    intersectionRows = rows;
    renderTable();
  } catch (error) {
    notify(`intersection query failed — ${describe(error)}`);
  }
}

function renderTable(): void {
  const host = $("#table-container");
  const page = paginate(intersectionRows, tablePage, PER_PAGE);
  tablePage = page.page;
  $("#table-page").textContent = `${page.page + 1} / ${page.pages} (${page.total} rows)`;
  if (page.total === 0) {
    host.innerHTML = '<p class="empty-state">No intersecting event pairs.</p>';
    return;
  }
  const table = document.createElement("table");
  const head = table.createTHead().insertRow();
  for (const column of ["event1", "place1", "city1", "event2", "place2", "city2"]) {
    const cell = document.createElement("th");
    cell.textContent = column;
    head.appendChild(cell);
  }
  const body = table.createTBody();
  for (const row of page.rows) {
    const tr = body.insertRow();
    for (const value of [row.event1, row.place1, row.city1, row.event2, row.place2, row.city2]) {
      tr.insertCell().textContent = localName(value) || "—";
    }
    tr.addEventListener("click", () => {
      activateTab("graph");
      graphState = emptyState();
      void expand(row.event1); // click-through centers the graph on event1
    });
  }
  host.textContent = "";
  host.appendChild(table);
}

// ---------------------------------------------------------------- boot

async function boot(): Promise<void> {
  renderLegend();
  renderGraph();
  try {
    const health = await api.health();
    $("#status").textContent = health.reasoned
      ? `${health.triples} triples, reasoned`
      : `${health.triples} triples, not yet reasoned`;
  } catch (error) {
    notify(`service unreachable — ${describe(error)}`);
  }
}

void boot();
