import { readFileSync } from "fs";

export interface Table {
  header: string[];
  rows: string[][];
}

export function parseCsv(text: string): Table {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length < 2) {
    throw new Error("CSV has no data rows");
  }
  const header = lines[0].split(",");
  const rows = lines.slice(1).map((line) => line.split(","));
  for (const row of rows) {
    if (row.length !== header.length) {
      throw new Error(`CSV row has ${row.length} fields, expected ${header.length}`);
    }
  }
  return { header, rows };
}

export function readCsv(path: string): Table {
  return parseCsv(readFileSync(path, "utf8"));
}

/** Numeric column by name; throws if the column is missing. */
export function column(table: Table, name: string): number[] {
  const idx = table.header.indexOf(name);
  if (idx < 0) {
    throw new Error(`missing CSV column '${name}' (found: ${table.header.join(", ")})`);
  }
  return table.rows.map((row) => {
    const value = Number(row[idx]);
    if (Number.isNaN(value)) {
      throw new Error(`non-numeric value '${row[idx]}' in column '${name}'`);
    }
    return value;
  });
}

/** Names of all columns matching a prefix, in header order. */
export function columnsWithPrefix(table: Table, prefix: string): string[] {
  const names = table.header.filter((name) => name.startsWith(prefix));
  if (names.length === 0) {
    throw new Error(`no CSV columns start with '${prefix}'`);
  }
  return names;
}
