/** Minimal deterministic SVG plotting primitives (fixed styles, fixed
 * number formatting, no timestamps, so identical inputs give identical
 * bytes). */

export const WIDTH = 640;
export const HEIGHT = 440;
export const MARGIN = { left: 64, right: 24, top: 36, bottom: 52 };

export function fmt(x: number): string {
  if (!Number.isFinite(x)) throw new Error(`non-finite coordinate ${x}`);
  return Number(x.toPrecision(6)).toString();
}

export interface Scale {
  (value: number): number;
  domain: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  return scale;
}

export function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!Number.isFinite(lo) || !Number.isFinite(hi)) {
    throw new Error("cannot scale empty or non-finite data");
  }
  return lo === hi ? [lo - 1, hi + 1] : [lo, hi];
}

export function ticks(domain: [number, number], count = 5): number[] {
  const [lo, hi] = domain;
  const step = (hi - lo) / (count - 1);
  return Array.from({ length: count }, (_, i) => lo + i * step);
}

export function polyline(xs: number[], ys: number[], stroke: string, width = 1.2): string {
  const points = xs.map((x, i) => `${fmt(x)},${fmt(ys[i])}`).join(" ");
  return `<polyline fill="none" stroke="${stroke}" stroke-width="${width}" points="${points}"/>`;
}

export function circles(xs: number[], ys: number[], fill: string, r = 2.6): string {
  return xs
    .map((x, i) => `<circle cx="${fmt(x)}" cy="${fmt(ys[i])}" r="${r}" fill="${fill}"/>`)
    .join("");
}

/** Dark-blue to yellow heat colormap on [0, 1]. */
export function heatColor(value: number): string {
  const t = Math.min(1, Math.max(0, value));
  const r = Math.round(255 * Math.min(1, 2 * t));
  const g = Math.round(255 * Math.min(1, Math.max(0, 1.6 * t - 0.1)));
  const b = Math.round(96 + (255 - 96) * Math.max(0, 1 - 2.2 * t));
  return `rgb(${r},${g},${b})`;
}

export interface Frame {
  x: Scale;
  y: Scale;
  body: string[];
}

export function newFrame(xDomain: [number, number], yDomain: [number, number]): Frame {
  return {
    x: linearScale(xDomain, [MARGIN.left, WIDTH - MARGIN.right]),
    y: linearScale(yDomain, [HEIGHT - MARGIN.bottom, MARGIN.top]),
    body: [],
  };
}

export function finalize(frame: Frame, title: string, xLabel: string, yLabel: string): string {
  const axes: string[] = [];
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right;
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  axes.push(`<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" fill="none" stroke="#333" stroke-width="1"/>`);
  for (const t of ticks(frame.x.domain)) {
    const px = frame.x(t);
    axes.push(`<line x1="${fmt(px)}" y1="${y0}" x2="${fmt(px)}" y2="${y0 + 5}" stroke="#333"/>`);
    axes.push(`<text x="${fmt(px)}" y="${y0 + 18}" text-anchor="middle" font-size="11">${fmt(t)}</text>`);
  }
  for (const t of ticks(frame.y.domain)) {
    const py = frame.y(t);
    axes.push(`<line x1="${x0 - 5}" y1="${fmt(py)}" x2="${x0}" y2="${fmt(py)}" stroke="#333"/>`);
    axes.push(`<text x="${x0 - 8}" y="${fmt(py + 3.5)}" text-anchor="end" font-size="11">${fmt(t)}</text>`);
  }
  axes.push(`<text x="${(x0 + x1) / 2}" y="${HEIGHT - 14}" text-anchor="middle" font-size="13">${xLabel}</text>`);
  axes.push(`<text x="18" y="${(y0 + y1) / 2}" text-anchor="middle" font-size="13" transform="rotate(-90 18 ${(y0 + y1) / 2})">${yLabel}</text>`);
  axes.push(`<text x="${(x0 + x1) / 2}" y="20" text-anchor="middle" font-size="14">${title}</text>`);
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
    ...frame.body,
    ...axes,
    `</svg>`,
    ``,
  ].join("\n");
}
