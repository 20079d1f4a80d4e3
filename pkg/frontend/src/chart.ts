// Co-attendee bar chart, rendered as an SVG string. Bar values and
// order come from the API rows untouched.

import type { CoAttendeeRow } from "./types.js";
import { localName } from "./types.js";

export interface Bar {
  agent: string;
  label: string;
  cnt: number;
  height: number;
}

const BAR_WIDTH = 38;
const BAR_GAP = 14;
const PLOT_HEIGHT = 180;
const LABEL_SPACE = 86;

/** Scale rows to bar heights, preserving the API's row order. */
export function chartBars(rows: CoAttendeeRow[], plotHeight = PLOT_HEIGHT): Bar[] {
  const max = rows.reduce((m, r) => Math.max(m, r.cnt), 0);
  return rows.map((row) => ({
    agent: row.agent,
    label: localName(row.agent),
    cnt: row.cnt,
    height: max > 0 ? (row.cnt / max) * plotHeight : 0,
  }));
}

function escapeXml(value: string): string {
  return value
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderChartSvg(rows: CoAttendeeRow[]): string {
  const bars = chartBars(rows);
  if (bars.length === 0) {
    return "";
  }
  const width = bars.length * (BAR_WIDTH + BAR_GAP) + BAR_GAP;
  const height = PLOT_HEIGHT + LABEL_SPACE;
  const parts: string[] = [
    `<svg class="chart" viewBox="0 0 ${width} ${height}" width="${width}" height="${height}" role="img">`,
  ];
  bars.forEach((bar, index) => {
    const x = BAR_GAP + index * (BAR_WIDTH + BAR_GAP);
    const y = PLOT_HEIGHT - bar.height;
    const cx = x + BAR_WIDTH / 2;
    parts.push(
      `<rect x="${x}" y="${y.toFixed(1)}" width="${BAR_WIDTH}" height="${bar.height.toFixed(1)}" rx="3" fill="#4a7dbd"><title>${escapeXml(bar.agent)}: ${bar.cnt}</title></rect>`,
      `<text x="${cx}" y="${PLOT_HEIGHT - bar.height - 6}" text-anchor="middle" class="chart-count">${bar.cnt}</text>`,
      `<text x="${cx}" y="${PLOT_HEIGHT + 14}" text-anchor="end" class="chart-label" transform="rotate(-45 ${cx} ${PLOT_HEIGHT + 14})">${escapeXml(bar.label)}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}
