/**
 * Minimal deterministic SVG plotting: linear/log scales, polylines, bands,
 * axes with ticks. No timestamps, no randomness; numbers are formatted with
 * a fixed precision so identical inputs give identical bytes.
 */

export function fmt(x: number): string {
  if (!Number.isFinite(x)) {
    throw new Error(`cannot format non-finite coordinate ${x}`);
  }
  const s = x.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

export function fmtTick(x: number): string {
  if (x === 0) return "0";
  const a = Math.abs(x);
  if (a >= 0.01 && a < 10000) {
    return String(Number(x.toPrecision(4)));
  }
  return x.toExponential(0);
}

export interface Scale {
  (value: number): number;
  ticks(count: number): number[];
}

export function linearScale(
  d0: number,
  d1: number,
  r0: number,
  r1: number,
): Scale {
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.ticks = (count: number) => {
    const step = niceStep(span / Math.max(1, count));
    const start = Math.ceil(d0 / step) * step;
    const out: number[] = [];
    for (let v = start; v <= d1 + 1e-12 * Math.abs(span); v += step) {
      out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
    }
    return out;
  };
  return scale;
}

export function log10Scale(
  d0: number,
  d1: number,
  r0: number,
  r1: number,
): Scale {
  const l0 = Math.log10(d0);
  const l1 = Math.log10(d1);
  const span = l1 - l0 || 1;
  const scale = ((value: number) =>
    r0 + ((Math.log10(value) - l0) / span) * (r1 - r0)) as Scale;
  scale.ticks = () => {
    const out: number[] = [];
    for (let e = Math.ceil(l0); e <= Math.floor(l1); e += 1) {
      out.push(10 ** e);
    }
    return out;
  };
  return scale;
}

function niceStep(raw: number): number {
  const mag = 10 ** Math.floor(Math.log10(raw));
  const unit = raw / mag;
  if (unit <= 1) return mag;
  if (unit <= 2) return 2 * mag;
  if (unit <= 5) return 5 * mag;
  return 10 * mag;
}

export const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

export function polyline(
  xs: number[],
  ys: number[],
  stroke: string,
  width: number,
  opacity = 1,
): string {
  const pts = xs.map((x, i) => `${fmt(x)},${fmt(ys[i])}`).join(" ");
  const op = opacity === 1 ? "" : ` stroke-opacity="${opacity}"`;
  return `<polyline fill="none" stroke="${stroke}" stroke-width="${width}"${op} points="${pts}"/>`;
}

export function band(
  xs: number[],
  yLow: number[],
  yHigh: number[],
  fill: string,
): string {
  const upper = xs.map((x, i) => `${fmt(x)},${fmt(yHigh[i])}`);
  const lower = xs
    .map((x, i) => `${fmt(x)},${fmt(yLow[i])}`)
    .reverse();
  return `<polygon fill="${fill}" fill-opacity="0.25" stroke="none" points="${upper
    .concat(lower)
    .join(" ")}"/>`;
}

export function text(
  x: number,
  y: number,
  content: string,
  anchor = "middle",
  size = 11,
): string {
  return `<text x="${fmt(x)}" y="${fmt(y)}" text-anchor="${anchor}" font-size="${size}" font-family="sans-serif">${escapeXml(content)}</text>`;
}

export function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export interface PanelBox {
  x0: number;
  y0: number;
  width: number;
  height: number;
}

/** Frame, ticks and labels for one panel; returns SVG fragments. */
export function frame(
  box: PanelBox,
  xScale: Scale,
  yScale: Scale,
  xLabel: string,
  yLabel: string,
  title = "",
): string {
  const parts: string[] = [];
  const { x0, y0, width, height } = box;
  parts.push(
    `<rect x="${fmt(x0)}" y="${fmt(y0)}" width="${fmt(width)}" height="${fmt(height)}" fill="none" stroke="#333" stroke-width="1"/>`,
  );
  for (const tick of xScale.ticks(6)) {
    const px = xScale(tick);
    if (px < x0 - 0.5 || px > x0 + width + 0.5) continue;
    parts.push(
      `<line x1="${fmt(px)}" y1="${fmt(y0 + height)}" x2="${fmt(px)}" y2="${fmt(y0 + height + 4)}" stroke="#333" stroke-width="1"/>`,
    );
    parts.push(text(px, y0 + height + 16, fmtTick(tick)));
  }
  for (const tick of yScale.ticks(6)) {
    const py = yScale(tick);
    if (py < y0 - 0.5 || py > y0 + height + 0.5) continue;
    parts.push(
      `<line x1="${fmt(x0 - 4)}" y1="${fmt(py)}" x2="${fmt(x0)}" y2="${fmt(py)}" stroke="#333" stroke-width="1"/>`,
    );
    parts.push(text(x0 - 6, py + 4, fmtTick(tick), "end", 10));
  }
  parts.push(text(x0 + width / 2, y0 + height + 32, xLabel));
  parts.push(
    `<text x="${fmt(x0 - 40)}" y="${fmt(y0 + height / 2)}" text-anchor="middle" font-size="11" font-family="sans-serif" transform="rotate(-90 ${fmt(x0 - 40)} ${fmt(y0 + height / 2)})">${escapeXml(yLabel)}</text>`,
  );
  if (title) {
    parts.push(text(x0 + width / 2, y0 - 8, title, "middle", 12));
  }
  return parts.join("\n");
}

export function svgDocument(
  width: number,
  height: number,
  metadata: string,
  body: string,
): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    `<metadata>${escapeXml(metadata)}</metadata>`,
    `<rect width="${width}" height="${height}" fill="white"/>`,
    body,
    "</svg>",
    "",
  ].join("\n");
}
