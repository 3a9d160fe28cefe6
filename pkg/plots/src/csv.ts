/**
 * Scan-CSV parsing: a tabular mirror of the workbench CLI's contract.
 *
 * Values stay exact strings at the parse layer; conversion to floating
 * point happens only where a pixel coordinate is needed.
 */

export const SCAN_COLUMNS = [
  "claim",
  "x_num",
  "x_den",
  "p",
  "q",
  "k",
  "a",
  "lhs",
  "rhs",
  "pass",
  "elapsed_ms",
  "interpretation_tag",
] as const;

export type ScanColumn = (typeof SCAN_COLUMNS)[number];

export type ScanRow = Record<ScanColumn, string>;

/** Split one CSV line, honoring double-quoted fields. */
function splitLine(line: string): string[] {
  const fields: string[] = [];
  let current = "";
  let quoted = false;
  for (let i = 0; i < line.length; i++) {
    const ch = line[i];
    if (quoted) {
      if (ch === '"' && line[i + 1] === '"') {
        current += '"';
        i++;
      } else if (ch === '"') {
        quoted = false;
      } else {
        current += ch;
      }
    } else if (ch === '"') {
      quoted = true;
    } else if (ch === ",") {
      fields.push(current);
      current = "";
    } else {
      current += ch;
    }
  }
  fields.push(current);
  return fields;
}

/**
 * Parse a scan CSV.  The header must carry exactly the contract columns,
 * in order; anything else is a malformed input.
 */
export function parseScanCsv(text: string): ScanRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error("empty input: expected a scan CSV with a header row");
  }
  const header = splitLine(lines[0]);
  if (header.join(",") !== SCAN_COLUMNS.join(",")) {
    throw new Error(
      `missing or misordered columns: expected "${SCAN_COLUMNS.join(",")}", got "${header.join(",")}"`,
    );
  }
  return lines.slice(1).map((line, index) => {
    const fields = splitLine(line);
    if (fields.length !== SCAN_COLUMNS.length) {
      throw new Error(`row ${index + 1} has ${fields.length} fields, expected ${SCAN_COLUMNS.length}`);
    }
    const row = {} as ScanRow;
    SCAN_COLUMNS.forEach((column, j) => {
      row[column] = fields[j];
    });
    return row;
  });
}

/** Exact "num/den" or integer string, converted for display only. */
export function rationalToNumber(text: string): number {
  if (text === "") {
    return NaN;
  }
  const slash = text.indexOf("/");
  if (slash < 0) {
    return Number(text);
  }
  return Number(text.slice(0, slash)) / Number(text.slice(slash + 1));
}

export function xOf(row: ScanRow): number {
  return Number(row.x_num) / Number(row.x_den);
}
