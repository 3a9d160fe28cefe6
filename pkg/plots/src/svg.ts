/**
 * Minimal deterministic SVG scaffolding: linear scales, axes, paths,
 * points, and a legend block.  No DOM, no randomness; the same data
 * always renders to the same bytes.
 */

export interface Size {
  width: number;
  height: number;
}

export interface Margin {
  top: number;
  right: number;
  bottom: number;
  left: number;
}

export const DEFAULT_SIZE: Size = { width: 800, height: 500 };
export const DEFAULT_MARGIN: Margin = { top: 40, right: 30, bottom: 45, left: 60 };

export interface LinearScale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as LinearScale;
  scale.domain = domain;
  scale.range = range;
  return scale;
}

export function extent(values: number[], fallback: [number, number]): [number, number] {
  if (values.length === 0) {
    return fallback;
  }
  let lo = values[0];
  let hi = values[0];
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }
  return [lo, hi];
}

const fmt = (v: number): string => {
  const rounded = Math.round(v * 100) / 100;
  return Object.is(rounded, -0) ? "0" : String(rounded);
};

export function pathFrom(points: Array<[number, number]>): string {
  return points.map(([px, py], i) => `${i === 0 ? "M" : "L"}${fmt(px)},${fmt(py)}`).join(" ");
}

export function lineElement(points: Array<[number, number]>, stroke: string, cls: string, dashed = false): string {
  if (points.length === 0) {
    return "";
  }
  const dash = dashed ? ' stroke-dasharray="6,4"' : "";
  return `<path class="${cls}" d="${pathFrom(points)}" fill="none" stroke="${stroke}" stroke-width="1.5"${dash}/>`;
}

export function circleElement(cx: number, cy: number, fill: string, cls: string): string {
  return `<circle class="${cls}" cx="${fmt(cx)}" cy="${fmt(cy)}" r="4" fill="${fill}" stroke="#ffffff" stroke-width="0.8"/>`;
}

export function textElement(x: number, y: number, content: string, anchor = "start", cls = "label"): string {
  return `<text class="${cls}" x="${fmt(x)}" y="${fmt(y)}" text-anchor="${anchor}" font-family="monospace" font-size="12">${escapeXml(content)}</text>`;
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export interface LegendEntry {
  label: string;
  color: string;
}

export function legendBlock(entries: LegendEntry[], x: number, y: number): string {
  const parts = [`<g class="legend">`];
  entries.forEach((entry, i) => {
    const cy = y + i * 18;
    parts.push(`<circle cx="${fmt(x)}" cy="${fmt(cy)}" r="5" fill="${entry.color}"/>`);
    parts.push(textElement(x + 12, cy + 4, entry.label, "start", "legend-label"));
  });
  parts.push("</g>");
  return parts.join("\n");
}

export function axes(
  xScale: LinearScale,
  yScale: LinearScale,
  size: Size,
  margin: Margin,
  xLabel: string,
  yLabel: string,
): string {
  const [x0, x1] = xScale.range;
  const [y0, y1] = yScale.range;
  const parts = [
    `<g class="axes" stroke="#444444" stroke-width="1">`,
    `<line x1="${fmt(x0)}" y1="${fmt(y0)}" x2="${fmt(x1)}" y2="${fmt(y0)}"/>`,
    `<line x1="${fmt(x0)}" y1="${fmt(y0)}" x2="${fmt(x0)}" y2="${fmt(y1)}"/>`,
    `</g>`,
    textElement(size.width / 2, size.height - 8, xLabel, "middle", "axis-label"),
    textElement(14, margin.top - 14, yLabel, "start", "axis-label"),
  ];
  // domain end ticks
  parts.push(textElement(x0, y0 + 16, fmt(xScale.domain[0]), "middle", "tick"));
  parts.push(textElement(x1, y0 + 16, fmt(xScale.domain[1]), "middle", "tick"));
  parts.push(textElement(x0 - 6, y0 + 4, fmt(yScale.domain[0]), "end", "tick"));
  parts.push(textElement(x0 - 6, y1 + 4, fmt(yScale.domain[1]), "end", "tick"));
  return parts.join("\n");
}

export function svgDocument(size: Size, title: string, body: string[]): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${size.width}" height="${size.height}" viewBox="0 0 ${size.width} ${size.height}">`,
    `<title>${escapeXml(title)}</title>`,
    `<rect width="${size.width}" height="${size.height}" fill="#ffffff"/>`,
    ...body.filter((part) => part.length > 0),
    `</svg>`,
    ``,
  ].join("\n");
}
