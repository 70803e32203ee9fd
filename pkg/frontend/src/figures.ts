/**
 * The five figure renderers. Each consumes files written by the supralap
 * CLI, validates them strictly, and emits a deterministic SVG whose
 * metadata records the SHA-256 of every input. Only axis transforms and
 * presentational scaling happen here; no numerical results are recomputed.
 */

import { metadataJson } from "./checksum.js";
import {
  ReducedRow,
  SchemaError,
  SpectrumRow,
  SweepRow,
  VectorTable,
  parseReducedCsv,
  parseSpectrumCsv,
  parseSweepCsv,
  parseVectorsCsv,
} from "./schema.js";
import {
  PALETTE,
  PanelBox,
  band,
  fmt,
  frame,
  linearScale,
  log10Scale,
  polyline,
  svgDocument,
  text,
} from "./svg.js";

export interface RenderOptions {
  /** layers per network; needed where the input carries no frequency column */
  layers?: number;
  title?: string;
}

// ---------------------------------------------------------------------------
// fig1 / fig5: fan of per-frequency eigenvalue curves with cosine overlay

function renderReducedFan(
  file: string,
  figureId: string,
  title: string,
): string {
  const rows = parseReducedCsv(file);
  const t = Math.max(...rows.map((r) => r.k)) + 1;
  const byJ = new Map<number, ReducedRow[]>();
  for (const row of rows) {
    const list = byJ.get(row.j) ?? [];
    list.push(row);
    byJ.set(row.j, list);
  }
  const lamMax = Math.max(...rows.map((r) => r.eigenvalue));
  const box: PanelBox = { x0: 70, y0: 40, width: 520, height: 360 };
  const xs = linearScale(0, t - 1, box.x0, box.x0 + box.width);
  const ys = linearScale(0, Math.max(lamMax, 1e-12), box.y0 + box.height, box.y0);
  const parts: string[] = [];
  parts.push(frame(box, xs, ys, "frequency index k", "eigenvalue", title));
  for (const j of [...byJ.keys()].sort((a, b) => a - b)) {
    const curve = byJ.get(j)!.sort((a, b) => a.k - b.k);
    parts.push(
      polyline(
        curve.map((r) => xs(r.k)),
        curve.map((r) => ys(r.eigenvalue)),
        PALETTE[0],
        0.8,
        0.55,
      ),
    );
  }
  // cosine overlay on its own right-hand scale (-1..1)
  const cosScale = linearScale(-1, 1, box.y0 + box.height, box.y0);
  const cosRows = rows.filter((r) => r.j === Math.min(...byJ.keys()));
  cosRows.sort((a, b) => a.k - b.k);
  parts.push(
    polyline(
      cosRows.map((r) => xs(r.k)),
      cosRows.map((r) => cosScale(r.cos)),
      PALETTE[1],
      1.6,
    ),
  );
  parts.push(
    text(box.x0 + box.width - 4, box.y0 + 14, "cos(2pik/T), right scale -1..1", "end"),
  );
  return svgDocument(660, 450, metadataJson(figureId, [file]), parts.join("\n"));
}

export function renderFig1(reducedCsv: string, opts: RenderOptions = {}): string {
  return renderReducedFan(
    reducedCsv,
    "fig1",
    opts.title ?? "Smallest eigenvalues of the frequency blocks",
  );
}

export function renderFig5(reducedCsv: string, opts: RenderOptions = {}): string {
  return renderReducedFan(
    reducedCsv,
    "fig5",
    opts.title ?? "Frequency-block spectra of nested-block layers",
  );
}

// ---------------------------------------------------------------------------
// component-series panels shared by fig2 and fig3

function componentPanel(
  box: PanelBox,
  values: number[],
  nPerLayer: number,
  title: string,
): string {
  const n = values.length;
  const amp = Math.max(...values.map(Math.abs), 1e-12);
  const xs = linearScale(1, n, box.x0, box.x0 + box.width);
  const ys = linearScale(-amp * 1.1, amp * 1.1, box.y0 + box.height, box.y0);
  const parts: string[] = [];
  parts.push(frame(box, xs, ys, "component", "", title));
  // block boundaries every nPerLayer components
  for (let c = nPerLayer; c < n; c += nPerLayer) {
    const px = xs(c + 0.5);
    parts.push(
      `<line x1="${fmt(px)}" y1="${fmt(box.y0)}" x2="${fmt(px)}" y2="${fmt(
        box.y0 + box.height,
      )}" stroke="#ccc" stroke-width="0.5"/>`,
    );
  }
  parts.push(
    `<line x1="${fmt(box.x0)}" y1="${fmt(ys(0))}" x2="${fmt(box.x0 + box.width)}" y2="${fmt(
      ys(0),
    )}" stroke="#999" stroke-width="0.5" stroke-dasharray="3,3"/>`,
  );
  // per-layer coloring, consistent across panels
  const blocks = Math.ceil(n / nPerLayer);
  for (let b = 0; b < blocks; b += 1) {
    const start = b * nPerLayer;
    const stop = Math.min(n, start + nPerLayer);
    const idx = Array.from({ length: stop - start }, (_, i) => start + i);
    parts.push(
      polyline(
        idx.map((c) => xs(c + 1)),
        idx.map((c) => ys(values[c])),
        PALETTE[b % PALETTE.length],
        1.0,
      ),
    );
  }
  return parts.join("\n");
}

function trigPanel(
  box: PanelBox,
  t: number,
  kHat: number,
  kind: "cos" | "sin",
): string {
  const xs = linearScale(0, t - 1, box.x0, box.x0 + box.width);
  const ys = linearScale(-1.1, 1.1, box.y0 + box.height, box.y0);
  const js = Array.from({ length: t }, (_, j) => j);
  const f = kind === "cos" ? Math.cos : Math.sin;
  const values = js.map((j) => f((2 * Math.PI * j * kHat) / t));
  const parts: string[] = [];
  parts.push(
    frame(box, xs, ys, "layer j", "", `${kind}(2pi j ${kHat}/T)`),
  );
  parts.push(polyline(js.map(xs), values.map(ys), PALETTE[1], 1.4));
  return parts.join("\n");
}

// ---------------------------------------------------------------------------
// fig2: lifted eigenvectors for the lowest few frequencies + trig profiles

export function renderFig2(
  spectrumCsv: string,
  vectorsCsv: string,
  opts: RenderOptions = {},
): string {
  const rows = parseSpectrumCsv(spectrumCsv);
  if (rows.some((r) => r.method !== "block-dft")) {
    throw new SchemaError(spectrumCsv, "fig2 needs a block-dft spectrum");
  }
  const table = parseVectorsCsv(vectorsCsv);
  const t =
    opts.layers ?? Math.max(...rows.map((r) => (r.k === null ? 0 : r.k))) + 1;
  if (table.components % t !== 0) {
    throw new SchemaError(
      vectorsCsv,
      `${table.components} components do not split into ${t} layers`,
    );
  }
  const n = table.components / t;

  const smallestAt = (k: number): SpectrumRow => {
    const candidates = rows.filter((r) => r.k === k);
    if (candidates.length === 0) {
      throw new SchemaError(spectrumCsv, `no rows with k=${k}`);
    }
    return candidates.reduce((a, b) => (a.eigenvalue <= b.eigenvalue ? a : b));
  };
  const column = (index: number): number[] => {
    if (index > table.vectors) {
      throw new SchemaError(
        vectorsCsv,
        `needs vector v${index} but sidecar holds only ${table.vectors}`,
      );
    }
    return table.columns[index - 1];
  };

  const parts: string[] = [];
  const panelW = 380;
  const panelH = 150;
  const trigW = 180;
  let y = 42;
  for (const kHat of [1, 2, 3]) {
    const cosEntry = smallestAt(kHat);
    parts.push(
      componentPanel(
        { x0: 64, y0: y, width: panelW, height: panelH },
        column(cosEntry.index),
        n,
        `cosine-type, k=${kHat}, eigenvalue=${cosEntry.eigenvalue.toPrecision(3)}`,
      ),
    );
    parts.push(
      trigPanel({ x0: 64 + panelW + 60, y0: y, width: trigW, height: panelH }, t, kHat, "cos"),
    );
    y += panelH + 52;
    // the sine lift of frequency kHat sits at entry T-kHat and only exists
    // for kHat strictly below T/2
    if (2 * kHat < t) {
      const sinEntry = smallestAt(t - kHat);
      parts.push(
        componentPanel(
          { x0: 64, y0: y, width: panelW, height: panelH },
          column(sinEntry.index),
          n,
          `sine-type, k=${t - kHat}, eigenvalue=${sinEntry.eigenvalue.toPrecision(3)}`,
        ),
      );
      parts.push(
        trigPanel({ x0: 64 + panelW + 60, y0: y, width: trigW, height: panelH }, t, kHat, "sin"),
      );
      y += panelH + 52;
    }
  }
  return svgDocument(
    64 + panelW + 60 + trigW + 40,
    y,
    metadataJson("fig2", [spectrumCsv, vectorsCsv]),
    parts.join("\n"),
  );
}

// ---------------------------------------------------------------------------
// fig3: eigenvalue curve plus selected eigenvectors, colored per layer

export function renderFig3(
  spectrumCsv: string,
  vectorsCsv: string,
  opts: RenderOptions = {},
): string {
  const rows = parseSpectrumCsv(spectrumCsv);
  const table = parseVectorsCsv(vectorsCsv);
  const t = opts.layers;
  if (t === undefined || t < 1) {
    throw new SchemaError(spectrumCsv, "fig3 needs --layers (dense input has no k)");
  }
  if (table.components % t !== 0) {
    throw new SchemaError(
      vectorsCsv,
      `${table.components} components do not split into ${t} layers`,
    );
  }
  const n = table.components / t;

  const parts: string[] = [];
  const top: PanelBox = { x0: 64, y0: 40, width: 560, height: 200 };
  const lamMax = Math.max(...rows.map((r) => r.eigenvalue));
  const xs = linearScale(1, rows.length, top.x0, top.x0 + top.width);
  const ys = linearScale(0, Math.max(lamMax, 1e-12), top.y0 + top.height, top.y0);
  parts.push(
    frame(top, xs, ys, "eigenvalue index", "eigenvalue",
      opts.title ?? "Supra-Laplacian spectrum and eigenvectors"),
  );
  parts.push(
    polyline(rows.map((r) => xs(r.index)), rows.map((r) => ys(r.eigenvalue)),
      PALETTE[0], 1.2),
  );

  const wanted = [1, 2, 3, 4, 5, 6, 35].filter((i) => i <= table.vectors);
  const panelW = 253;
  const panelH = 110;
  let x = 64;
  let y = top.y0 + top.height + 70;
  for (const index of wanted) {
    parts.push(
      componentPanel(
        { x0: x, y0: y, width: panelW, height: panelH },
        table.columns[index - 1],
        n,
        `eigenvector ${index}`,
      ),
    );
    if (x > 64) {
      x = 64;
      y += panelH + 52;
    } else {
      x = 64 + panelW + 54;
    }
  }
  const height = x === 64 ? y + 20 : y + panelH + 60;
  return svgDocument(
    700,
    height,
    metadataJson("fig3", [spectrumCsv, vectorsCsv]),
    parts.join("\n"),
  );
}

// ---------------------------------------------------------------------------
// fig4: mean residual curves with 1-sd bands, one panel per coupling weight

const EPS_FLOOR = 1e-16;

export function renderFig4(sweepCsv: string, opts: RenderOptions = {}): string {
  const rows = parseSweepCsv(sweepCsv);
  const omegas = [...new Set(rows.map((r) => r.omega))].sort((a, b) => a - b);
  const ps = [...new Set(rows.map((r) => r.p))].sort((a, b) => a - b);

  const panelW = 300;
  const panelH = 230;
  const cols = 2;
  const rowsOfPanels = Math.ceil(omegas.length / cols);
  const parts: string[] = [];

  omegas.forEach((omega, pi) => {
    const px = 64 + (pi % cols) * (panelW + 80);
    const py = 46 + Math.floor(pi / cols) * (panelH + 70);
    const box: PanelBox = { x0: px, y0: py, width: panelW, height: panelH };
    const cell = rows.filter((r) => r.omega === omega);
    const maxIndex = Math.max(...cell.map((r) => r.index));
    const hi = Math.max(...cell.map((r) => r.meanEpsilon + r.sdEpsilon), 1e-12);
    const lo = Math.max(
      EPS_FLOOR,
      Math.min(...cell.map((r) => Math.max(r.meanEpsilon, EPS_FLOOR))),
    );
    const xsc = linearScale(1, maxIndex, box.x0, box.x0 + box.width);
    const ysc = log10Scale(lo, hi * 1.5, box.y0 + box.height, box.y0);
    parts.push(
      frame(box, xsc, ysc, "eigenvalue index", "mean residual", `omega = ${omega}`),
    );
    ps.forEach((p, ci) => {
      const series = cell
        .filter((r) => r.p === p)
        .sort((a, b) => a.index - b.index);
      if (series.length === 0) return;
      const clamp = (v: number) => Math.min(Math.max(v, lo), hi * 1.5);
      parts.push(
        band(
          series.map((r) => xsc(r.index)),
          series.map((r) => ysc(clamp(r.meanEpsilon - r.sdEpsilon))),
          series.map((r) => ysc(clamp(r.meanEpsilon + r.sdEpsilon))),
          PALETTE[ci % PALETTE.length],
        ),
      );
      parts.push(
        polyline(
          series.map((r) => xsc(r.index)),
          series.map((r) => ysc(clamp(r.meanEpsilon))),
          PALETTE[ci % PALETTE.length],
          1.3,
        ),
      );
      parts.push(
        `<text x="${fmt(box.x0 + box.width + 8)}" y="${fmt(
          box.y0 + 14 + 14 * ci,
        )}" font-size="10" font-family="sans-serif" fill="${PALETTE[ci % PALETTE.length]}">p=${p}</text>`,
      );
    });
  });
  return svgDocument(
    64 + cols * (panelW + 80),
    46 + rowsOfPanels * (panelH + 70),
    metadataJson("fig4", [sweepCsv]),
    parts.join("\n"),
  );
}

export { parseSpectrumCsv, parseReducedCsv, parseSweepCsv, parseVectorsCsv };
export type { VectorTable, SpectrumRow, ReducedRow, SweepRow };
