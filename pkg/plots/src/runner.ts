/** Shared entry-point logic for the two plot scripts. */

import { readFileSync, writeFileSync } from "node:fs";

export interface BuildResult {
  svg: string;
  pointCount: number;
}

export function runPlotScript(
  name: string,
  argv: string[],
  build: (csvText: string) => BuildResult,
): number {
  if (argv.length !== 2) {
    process.stderr.write(`usage: ${name} <scan.csv> <out.svg>\n`);
    return 1;
  }
  const [csvPath, outPath] = argv;
  let text: string;
  try {
    text = readFileSync(csvPath, "utf8");
  } catch (err) {
    process.stderr.write(`${name}: cannot read ${csvPath}: ${String(err)}\n`);
    return 1;
  }
  let result: BuildResult;
  try {
    result = build(text);
  } catch (err) {
    process.stderr.write(`${name}: ${err instanceof Error ? err.message : String(err)}\n`);
    return 1;
  }
  try {
    writeFileSync(outPath, result.svg, "utf8");
  } catch (err) {
    process.stderr.write(`${name}: cannot write ${outPath}: ${String(err)}\n`);
    return 1;
  }
  process.stdout.write(`${name}: ${result.pointCount} points -> ${outPath}\n`);
  return 0;
}
