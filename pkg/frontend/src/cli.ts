#!/usr/bin/env node
/** Usage: render <figure-id> --in DIR --out DIR */

import { mkdirSync, writeFileSync } from "fs";
import { join } from "path";

import { renderFigure } from "./render";

export function parseArgs(argv: string[]): { figureId: string; inDir: string; outDir: string } {
  const positional: string[] = [];
  const flags: Record<string, string> = {};
  for (let i = 0; i < argv.length; i += 1) {
    const arg = argv[i];
    if (arg === "--in" || arg === "--out") {
      const value = argv[i + 1];
      if (value === undefined) throw new Error(`${arg} needs a value`);
      flags[arg] = value;
      i += 1;
    } else if (arg.startsWith("--")) {
      throw new Error(`unknown flag ${arg}`);
    } else {
      positional.push(arg);
    }
  }
  if (positional.length !== 1 || !flags["--in"] || !flags["--out"]) {
    throw new Error("usage: render <figure-id> --in DIR --out DIR");
  }
  return { figureId: positional[0], inDir: flags["--in"], outDir: flags["--out"] };
}

export function runCli(argv: string[]): string {
  const { figureId, inDir, outDir } = parseArgs(argv);
  const svg = renderFigure(figureId, inDir);
  mkdirSync(outDir, { recursive: true });
  const outPath = join(outDir, `${figureId}.svg`);
  writeFileSync(outPath, svg);
  return outPath;
}

if (require.main === module) {
  try {
    console.log(runCli(process.argv.slice(2)));
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    process.exit(1);
  }
}
