/**
 * Strategy scan figure: correction magnitudes from `strategy` scan rows
 * as a scatter over x, against the sqrt(x) reference curve.  Marker
 * color encodes the exact correction^2 <= x flag from the pass column;
 * the legend carries one entry per (interpretation_tag, flag) pair
 * present in the data.
 */

import { parseScanCsv, rationalToNumber, xOf, type ScanRow } from "./csv.js";
import {
  DEFAULT_MARGIN,
  DEFAULT_SIZE,
  axes,
  circleElement,
  extent,
  legendBlock,
  lineElement,
  linearScale,
  svgDocument,
  type LegendEntry,
} from "./svg.js";

export interface StrategyScanResult {
  svg: string;
  pointCount: number;
  legend: string[];
}

const WITHIN_COLOR = "#1e8449";
const EXCEEDS_COLOR = "#c0392b";
const REFERENCE_COLOR = "#7d6608";

export function buildStrategyScan(csvText: string): StrategyScanResult {
  const rows: ScanRow[] = parseScanCsv(csvText).filter((row) => row.claim === "strategy");
  const data = rows
    .map((row) => ({
      x: xOf(row),
      correction: rationalToNumber(row.lhs),
      within: row.pass === "true",
      tag: row.interpretation_tag,
    }))
    .sort((a, b) => a.x - b.x);

  const size = DEFAULT_SIZE;
  const margin = DEFAULT_MARGIN;
  const xDomain = extent(data.map((d) => d.x), [0, 1]);
  const yDomain = extent(
    data.map((d) => d.correction).concat([0, Math.sqrt(Math.max(0, xDomain[1]))]),
    [0, 1],
  );
  const xScale = linearScale(xDomain, [margin.left, size.width - margin.right]);
  const yScale = linearScale(yDomain, [size.height - margin.bottom, margin.top]);

  const samples = 128;
  const reference: Array<[number, number]> = [];
  for (let i = 0; i <= samples; i++) {
    const x = xDomain[0] + ((xDomain[1] - xDomain[0]) * i) / samples;
    if (x < 0) continue;
    reference.push([xScale(x), yScale(Math.sqrt(x))]);
  }

  const points = data.map((d) =>
    circleElement(
      xScale(d.x),
      yScale(d.correction),
      d.within ? WITHIN_COLOR : EXCEEDS_COLOR,
      `point ${d.within ? "point-within" : "point-exceeds"}`,
    ),
  );

  const combos = new Map<string, LegendEntry>();
  for (const d of data) {
    const key = `${d.tag} (${d.within ? "within sqrt(x)" : "exceeds sqrt(x)"})`;
    if (!combos.has(key)) {
      combos.set(key, { label: key, color: d.within ? WITHIN_COLOR : EXCEEDS_COLOR });
    }
  }
  const legendEntries = [...combos.values()].sort((a, b) => a.label.localeCompare(b.label));
  legendEntries.push({ label: "sqrt(x)", color: REFERENCE_COLOR });

  const svg = svgDocument(size, "Correction magnitude against the sqrt(x) reference", [
    axes(xScale, yScale, size, margin, "x", "|gaps + leftovers| / (p - q)"),
    lineElement(reference, REFERENCE_COLOR, "reference-curve", true),
    ...points,
    legendBlock(legendEntries, margin.left + 16, margin.top + 6),
  ]);

  return { svg, pointCount: data.length, legend: legendEntries.map((e) => e.label) };
}
