import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import {
  MissingInputError,
  SchemaError,
  parseReducedCsv,
  parseSpectrumCsv,
  parseSweepCsv,
  parseVectorsCsv,
} from "../src/schema.js";

const SAMPLES = join(__dirname, "..", "sample-data");

function tempFile(content: string): string {
  const dir = mkdtempSync(join(tmpdir(), "figtest-"));
  const file = join(dir, "input.csv");
  writeFileSync(file, content);
  return file;
}

describe("spectrum csv", () => {
  it("parses the committed block-dft sample", () => {
    const rows = parseSpectrumCsv(join(SAMPLES, "spectrum_block.csv"));
    expect(rows.length).toBe(96);
    expect(rows[0].method).toBe("block-dft");
    expect(rows[0].k).toBe(0);
    expect(rows[0].eigenvalue).toBeCloseTo(0, 9);
  });

  it("parses the committed dense sample with empty k", () => {
    const rows = parseSpectrumCsv(join(SAMPLES, "spectrum_dense.csv"));
    expect(rows[0].k).toBeNull();
    expect(rows[0].method).toBe("dense");
  });

  it("rejects a mutated header", () => {
    const file = tempFile("index,eigenvalue,method\n1,0.5,dense\n");
    expect(() => parseSpectrumCsv(file)).toThrow(SchemaError);
    expect(() => parseSpectrumCsv(file)).toThrow(/bad header/);
  });

  it("rejects a header-only file", () => {
    const file = tempFile("index,eigenvalue,k,method\n");
    expect(() => parseSpectrumCsv(file)).toThrow(/no data rows/);
  });

  it("rejects an unknown method naming the row", () => {
    const file = tempFile("index,eigenvalue,k,method\n1,0.5,,magic\n");
    expect(() => parseSpectrumCsv(file)).toThrow(/row 2/);
  });

  it("rejects a block-dft row without k", () => {
    const file = tempFile("index,eigenvalue,k,method\n1,0.5,,block-dft\n");
    expect(() => parseSpectrumCsv(file)).toThrow(/without k/);
  });

  it("reports missing files distinctly", () => {
    expect(() => parseSpectrumCsv("/nonexistent/spectrum.csv")).toThrow(
      MissingInputError,
    );
  });
});

describe("reduced csv", () => {
  it("parses the committed sample", () => {
    const rows = parseReducedCsv(join(SAMPLES, "reduced.csv"));
    expect(rows.length).toBe(8 * 12);
    const ks = new Set(rows.map((r) => r.k));
    expect(ks.size).toBe(8);
  });

  it("rejects short rows", () => {
    const file = tempFile("k,j,eigenvalue,cos\n0,1,0.5\n");
    expect(() => parseReducedCsv(file)).toThrow(/row 2/);
  });

  it("rejects non-numeric cells", () => {
    const file = tempFile("k,j,eigenvalue,cos\n0,1,abc,1\n");
    expect(() => parseReducedCsv(file)).toThrow(/bad eigenvalue/);
  });
});

describe("sweep csv", () => {
  it("parses the committed sample", () => {
    const rows = parseSweepCsv(join(SAMPLES, "sweep.csv"));
    expect(rows.length).toBe(2 * 2 * 20);
    expect(new Set(rows.map((r) => r.omega)).size).toBe(2);
  });

  it("rejects wrong header order", () => {
    const file = tempFile("omega,p,index,mean_epsilon,sd_epsilon\n1,0.3,1,0,0\n");
    expect(() => parseSweepCsv(file)).toThrow(/bad header/);
  });
});

describe("vectors sidecar", () => {
  it("parses the committed sidecar column-major", () => {
    const table = parseVectorsCsv(join(SAMPLES, "vectors_block.csv"));
    expect(table.components).toBe(96);
    expect(table.vectors).toBe(96);
    // unit columns
    const norm = Math.hypot(...table.columns[0]);
    expect(norm).toBeCloseTo(1.0, 9);
  });

  it("rejects renamed vector columns", () => {
    const file = tempFile("component,w1\n1,0.5\n");
    expect(() => parseVectorsCsv(file)).toThrow(/bad header/);
  });

  it("rejects out-of-order components", () => {
    const file = tempFile("component,v1\n2,0.5\n");
    expect(() => parseVectorsCsv(file)).toThrow(/out of order/);
  });
});
