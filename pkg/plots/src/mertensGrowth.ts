/**
 * Mertens growth figure: M(x) from `mertens` scan rows as a line with
 * point markers, framed by the +sqrt(x) and -sqrt(x) envelopes.
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
} from "./svg.js";

export interface MertensGrowthResult {
  svg: string;
  pointCount: number;
  legend: string[];
}

const CURVE_COLOR = "#1f5fbf";
const ENVELOPE_COLOR = "#b03a2e";

export function buildMertensGrowth(csvText: string): MertensGrowthResult {
  const rows: ScanRow[] = parseScanCsv(csvText).filter((row) => row.claim === "mertens");
  const data = rows
    .map((row) => ({ x: xOf(row), m: rationalToNumber(row.lhs) }))
    .sort((a, b) => a.x - b.x);

  const size = DEFAULT_SIZE;
  const margin = DEFAULT_MARGIN;
  const xDomain = extent(data.map((d) => d.x), [0, 1]);
  const envelope = Math.sqrt(Math.max(Math.abs(xDomain[0]), Math.abs(xDomain[1])));
  const yDomain = extent(
    data.map((d) => d.m).concat([envelope, -envelope]),
    [-1, 1],
  );
  const xScale = linearScale(xDomain, [margin.left, size.width - margin.right]);
  const yScale = linearScale(yDomain, [size.height - margin.bottom, margin.top]);

  // envelopes sampled densely enough to read as curves
  const samples = 128;
  const upper: Array<[number, number]> = [];
  const lower: Array<[number, number]> = [];
  for (let i = 0; i <= samples; i++) {
    const x = xDomain[0] + ((xDomain[1] - xDomain[0]) * i) / samples;
    if (x < 0) continue;
    upper.push([xScale(x), yScale(Math.sqrt(x))]);
    lower.push([xScale(x), yScale(-Math.sqrt(x))]);
  }

  const curve = data.map((d) => [xScale(d.x), yScale(d.m)] as [number, number]);
  const points = data.map((d) => circleElement(xScale(d.x), yScale(d.m), CURVE_COLOR, "point"));

  const legendEntries = [
    { label: "M(x)", color: CURVE_COLOR },
    { label: "+sqrt(x)", color: ENVELOPE_COLOR },
    { label: "-sqrt(x)", color: ENVELOPE_COLOR },
  ];

  const svg = svgDocument(size, "Mertens growth against the square-root envelopes", [
    axes(xScale, yScale, size, margin, "x", "M(x)"),
    lineElement(upper, ENVELOPE_COLOR, "envelope envelope-upper", true),
    lineElement(lower, ENVELOPE_COLOR, "envelope envelope-lower", true),
    lineElement(curve, CURVE_COLOR, "mertens-curve"),
    ...points,
    legendBlock(legendEntries, size.width - margin.right - 120, margin.top + 6),
  ]);

  return { svg, pointCount: data.length, legend: legendEntries.map((e) => e.label) };
}
