import { readdirSync } from "fs";
import { join } from "path";

import { Table, column, columnsWithPrefix, readCsv } from "./csv";
import { FIGURES, FigureSpec } from "./figures";
import {
  HEIGHT, MARGIN, WIDTH, circles, extent, finalize, fmt, heatColor, newFrame,
  polyline,
} from "./svg";

const PI = Math.PI;

function renderSpectrum(spec: FigureSpec, table: Table): string {
  const thetas = column(table, "theta").map((t) => t / Math.PI);
  const names = columnsWithPrefix(table, "E_");
  const frame = newFrame(extent(thetas), extent(names.flatMap((n) => column(table, n))));
  const xs = thetas.map(frame.x);
  const mid = names.length / 2;
  names.forEach((name, i) => {
    const ys = column(table, name).map(frame.y);
    const color = i === mid - 1 ? "#1f77b4" : i === mid ? "#d62728" : "#999999";
    frame.body.push(polyline(xs, ys, color, i === mid - 1 || i === mid ? 1.8 : 1.0));
  });
  return finalize(frame, spec.title, spec.xLabel, spec.yLabel);
}

interface LongGrid {
  xs: number[];
  sites: number[];
  values: number[][]; // [ix][isite]
}

function longGrid(table: Table, xName: string, valueName: string): LongGrid {
  const xcol = column(table, xName);
  const sites = column(table, "site");
  const values = column(table, valueName);
  const xs: number[] = [];
  for (const x of xcol) {
    if (xs.length === 0 || xs[xs.length - 1] !== x) xs.push(x);
  }
  const nSites = Math.max(...sites);
  const grid = xs.map(() => new Array<number>(nSites).fill(0));
  let ix = -1;
  let last = NaN;
  for (let k = 0; k < xcol.length; k += 1) {
    if (xcol[k] !== last) {
      ix += 1;
      last = xcol[k];
    }
    grid[ix][sites[k] - 1] = values[k];
  }
  return { xs, sites: Array.from({ length: nSites }, (_, i) => i + 1), values: grid };
}

function renderHeatmap(spec: FigureSpec, grid: LongGrid, xTransform: (x: number) => number,
                       normalize: boolean): string {
  const xs = grid.xs.map(xTransform);
  const frame = newFrame(extent(xs), [0.5, grid.sites.length + 0.5]);
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const cellW = plotW / xs.length;
  const cellH = plotH / grid.sites.length;
  let peak = 1.0;
  if (normalize) {
    peak = Math.max(...grid.values.map((row) => Math.max(...row)));
    if (peak <= 0) throw new Error("heatmap has no positive values");
  }
  grid.values.forEach((row, i) => {
    row.forEach((value, j) => {
      const x = MARGIN.left + i * cellW;
      const y = HEIGHT - MARGIN.bottom - (j + 1) * cellH;
      frame.body.push(
        `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(cellW + 0.5)}" height="${fmt(cellH + 0.5)}" fill="${heatColor(value / peak)}"/>`,
      );
    });
  });
  return finalize(frame, spec.title, spec.xLabel, spec.yLabel);
}

function renderSweep(spec: FigureSpec, table: Table): string {
  const xs = column(table, "omega").map(Math.log10);
  const overlap = column(table, "fidelity_overlap");
  const dist = column(table, "fidelity_distribution");
  const frame = newFrame(extent(xs), [0, 1]);
  const px = xs.map(frame.x);
  frame.body.push(polyline(px, overlap.map(frame.y), "#1f77b4", 1.6));
  frame.body.push(circles(px, overlap.map(frame.y), "#1f77b4"));
  frame.body.push(polyline(px, dist.map(frame.y), "#d62728", 1.6));
  frame.body.push(circles(px, dist.map(frame.y), "#d62728"));
  return finalize(frame, spec.title, spec.xLabel, spec.yLabel);
}

const CHANNEL_COLORS: Record<string, string> = {
  onsite: "#333333",
  nn: "#d62728",
  nnn: "#1f77b4",
};

function renderDisorder(spec: FigureSpec, table: Table): string {
  const channelIdx = table.header.indexOf("channel");
  if (channelIdx < 0) throw new Error("missing CSV column 'channel'");
  const logW = column(table, "log10W");
  const mean = column(table, "mean_fidelity");
  const frame = newFrame(extent(logW), [0, 1]);
  const channels = [...new Set(table.rows.map((row) => row[channelIdx]))];
  for (const channel of channels) {
    const idx = table.rows
      .map((row, k) => (row[channelIdx] === channel ? k : -1))
      .filter((k) => k >= 0);
    const px = idx.map((k) => frame.x(logW[k]));
    const py = idx.map((k) => frame.y(mean[k]));
    const color = CHANNEL_COLORS[channel] ?? "#555555";
    frame.body.push(polyline(px, py, color, 1.6));
    frame.body.push(circles(px, py, color));
  }
  return finalize(frame, spec.title, spec.xLabel, spec.yLabel);
}

export function renderTable(spec: FigureSpec, table: Table): string {
  switch (spec.kind) {
    case "spectrum":
      return renderSpectrum(spec, table);
    case "distribution":
      return renderHeatmap(spec, longGrid(table, "theta", "p"), (t) => t / PI, false);
    case "trajectory":
      return renderHeatmap(spec, longGrid(table, "t", "population"), (t) => t, false);
    case "detection":
      return renderHeatmap(spec, longGrid(table, "omega_d", "population"), (w) => w, true);
    case "sweep":
      return renderSweep(spec, table);
    case "disorder":
      return renderDisorder(spec, table);
  }
}

export function locateInput(spec: FigureSpec, inDir: string): string {
  const matches = readdirSync(inDir)
    .filter((name) => name.startsWith(spec.inputPrefix) && name.endsWith(".csv"))
    .sort();
  if (matches.length === 0) {
    throw new Error(`no ${spec.inputPrefix}*.csv in ${inDir}`);
  }
  if (matches.length > 1) {
    throw new Error(`ambiguous inputs for ${spec.id} in ${inDir}: ${matches.join(", ")}`);
  }
  return join(inDir, matches[0]);
}

export function renderFigure(figureId: string, inDir: string): string {
  const spec = FIGURES[figureId];
  if (!spec) {
    throw new Error(`unknown figure id '${figureId}' (known: ${Object.keys(FIGURES).join(", ")})`);
  }
  return renderTable(spec, readCsv(locateInput(spec, inDir)));
}
