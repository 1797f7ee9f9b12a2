import { existsSync, mkdtempSync, readFileSync, writeFileSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";
import { describe, expect, it } from "vitest";

import { FIGURES } from "../src/figures";
import { parseCsv, column } from "../src/csv";
import { renderFigure, renderTable } from "../src/render";
import { parseArgs, runCli } from "../src/cli";

const FIXTURES = join(__dirname, "..", "fixtures");

describe("figure registry", () => {
  it("covers the full catalog", () => {
    expect(Object.keys(FIGURES).sort()).toEqual([
      "fig11a", "fig11b", "fig2a", "fig2b", "fig3a", "fig3b", "fig3c", "fig3d",
      "fig4a", "fig4b", "fig5a", "fig5b", "fig5c", "fig5d", "fig6a", "fig6b",
      "fig6c", "fig6d", "fig8", "fig9a", "fig9b", "fig9c",
    ]);
  });
});

describe.each(Object.keys(FIGURES))("figure %s", (id) => {
  const dir = join(FIXTURES, id);

  it("renders with the documented axes", () => {
    expect(existsSync(dir)).toBe(true);
    const svg = renderFigure(id, dir);
    expect(svg.startsWith("<svg ")).toBe(true);
    expect(svg.endsWith("</svg>\n")).toBe(true);
    const spec = FIGURES[id];
    expect(svg).toContain(`>${spec.xLabel}</text>`);
    expect(svg).toContain(`>${spec.yLabel}</text>`);
    expect(svg).toContain(spec.title);
  });

  it("re-renders byte-identically", () => {
    expect(renderFigure(id, dir)).toEqual(renderFigure(id, dir));
  });
});

describe("cli", () => {
  it("writes <figure-id>.svg into --out", () => {
    const out = mkdtempSync(join(tmpdir(), "figs-"));
    const path = runCli(["fig2a", "--in", join(FIXTURES, "fig2a"), "--out", out]);
    expect(path).toBe(join(out, "fig2a.svg"));
    const first = readFileSync(path);
    runCli(["fig2a", "--in", join(FIXTURES, "fig2a"), "--out", out]);
    expect(readFileSync(path).equals(first)).toBe(true);
  });

  it("rejects bad invocations", () => {
    expect(() => parseArgs(["fig2a"])).toThrow(/usage/);
    expect(() => parseArgs(["fig2a", "--in", "x", "--fast"])).toThrow(/unknown flag/);
    expect(() => runCli(["nope", "--in", FIXTURES, "--out", FIXTURES]))
      .toThrow(/unknown figure id/);
  });
});

describe("input validation", () => {
  it("fails fast on empty data", () => {
    expect(() => parseCsv("theta,site,p\n")).toThrow(/no data rows/);
  });

  it("fails fast on a missing column", () => {
    const table = parseCsv("theta,site,q\n0,1,0.5\n");
    expect(() => column(table, "p")).toThrow(/missing CSV column 'p'/);
    expect(() => renderTable(FIGURES.fig2b, table)).toThrow(/missing CSV column/);
  });

  it("refuses ambiguous or absent inputs", () => {
    const dir = mkdtempSync(join(tmpdir(), "amb-"));
    expect(() => renderFigure("fig2a", dir)).toThrow(/no spectrum_\*\.csv/);
    writeFileSync(join(dir, "spectrum_a.csv"), "theta,E_1\n0,1\n");
    writeFileSync(join(dir, "spectrum_b.csv"), "theta,E_1\n0,1\n");
    expect(() => renderFigure("fig2a", dir)).toThrow(/ambiguous/);
  });
});
