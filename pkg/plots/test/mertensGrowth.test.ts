import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { SCAN_COLUMNS, parseScanCsv, rationalToNumber, xOf } from "../src/csv.js";
import { buildMertensGrowth } from "../src/mertensGrowth.js";

const golden = readFileSync(new URL("../golden/mertens20.csv", import.meta.url), "utf8");

describe("buildMertensGrowth", () => {
  it("renders one point per mertens row of the golden file", () => {
    const result = buildMertensGrowth(golden);
    expect(result.pointCount).toBe(20);
    const circles = result.svg.match(/<circle class="point"/g) ?? [];
    expect(circles).toHaveLength(20);
  });

  it("draws the curve and both envelopes with a legend", () => {
    const { svg, legend } = buildMertensGrowth(golden);
    expect(svg).toContain('class="mertens-curve"');
    expect(svg).toContain('class="envelope envelope-upper"');
    expect(svg).toContain('class="envelope envelope-lower"');
    expect(legend).toEqual(["M(x)", "+sqrt(x)", "-sqrt(x)"]);
    for (const label of legend) {
      expect(svg).toContain(label.replace("<", "&lt;"));
    }
  });

  it("keeps M(x) within the envelopes on this range (checked from the data)", () => {
    for (const row of parseScanCsv(golden)) {
      const x = xOf(row);
      const m = rationalToNumber(row.lhs);
      expect(Math.abs(m)).toBeLessThanOrEqual(Math.sqrt(x));
    }
  });

  it("renders an empty-axes figure for a header-only CSV", () => {
    const result = buildMertensGrowth(SCAN_COLUMNS.join(",") + "\n");
    expect(result.pointCount).toBe(0);
    expect(result.svg).toContain("<svg");
    expect(result.svg).toContain('class="axes"');
    expect(result.svg).not.toContain('<circle class="point"');
  });

  it("is deterministic", () => {
    expect(buildMertensGrowth(golden).svg).toBe(buildMertensGrowth(golden).svg);
  });

  it("throws on malformed input", () => {
    expect(() => buildMertensGrowth("not,a,scan\n1,2,3\n")).toThrowError(/columns/);
  });
});
