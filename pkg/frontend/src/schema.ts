/**
 * Parsing and strict validation of the CSV/JSON files produced by the
 * supralap CLI. Renderers never recompute mathematics; everything they plot
 * must come verbatim from these files, so the parsers are deliberately
 * unforgiving: an unexpected header or a malformed row is a hard error that
 * names the offender.
 */

import { readFileSync } from "node:fs";

export class SchemaError extends Error {
  constructor(file: string, message: string) {
    super(`${file}: ${message}`);
    this.name = "SchemaError";
  }
}

export class MissingInputError extends Error {
  constructor(file: string) {
    super(`missing input file: ${file}`);
    this.name = "MissingInputError";
  }
}

export interface SpectrumRow {
  index: number;
  eigenvalue: number;
  k: number | null;
  method: "dense" | "block-dft";
}

export interface ReducedRow {
  k: number;
  j: number;
  eigenvalue: number;
  cos: number;
}

export interface SweepRow {
  p: number;
  omega: number;
  index: number;
  meanEpsilon: number;
  sdEpsilon: number;
}

export interface ApproxRow {
  index: number;
  eigenvalue: number;
  epsilon: number;
}

/** Eigenvector sidecar: component-major matrix, one column per vector. */
export interface VectorTable {
  components: number;
  vectors: number;
  /** column-major: columns[v][c] is component c of vector v+1 */
  columns: number[][];
}

export function readInput(file: string): string {
  try {
    return readFileSync(file, "utf8");
  } catch (err: unknown) {
    if ((err as NodeJS.ErrnoException).code === "ENOENT") {
      throw new MissingInputError(file);
    }
    throw err;
  }
}

function splitRows(file: string, text: string, header: string): string[][] {
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new SchemaError(file, "empty file");
  }
  if (lines[0] !== header) {
    throw new SchemaError(
      file,
      `bad header: expected "${header}", got "${lines[0]}"`,
    );
  }
  if (lines.length === 1) {
    throw new SchemaError(file, "no data rows");
  }
  const width = header.split(",").length;
  return lines.slice(1).map((line, i) => {
    const cells = line.split(",");
    if (cells.length !== width) {
      throw new SchemaError(file, `row ${i + 2}: expected ${width} cells in "${line}"`);
    }
    return cells;
  });
}

function num(file: string, row: number, cell: string, what: string): number {
  const value = Number(cell);
  if (cell.trim() === "" || !Number.isFinite(value)) {
    throw new SchemaError(file, `row ${row}: bad ${what} "${cell}"`);
  }
  return value;
}

export function parseSpectrumCsv(file: string): SpectrumRow[] {
  const rows = splitRows(file, readInput(file), "index,eigenvalue,k,method");
  return rows.map((cells, i) => {
    const method = cells[3];
    if (method !== "dense" && method !== "block-dft") {
      throw new SchemaError(file, `row ${i + 2}: unknown method "${method}"`);
    }
    const k = cells[2] === "" ? null : num(file, i + 2, cells[2], "k");
    if (method === "block-dft" && k === null) {
      throw new SchemaError(file, `row ${i + 2}: block-dft row without k`);
    }
    return {
      index: num(file, i + 2, cells[0], "index"),
      eigenvalue: num(file, i + 2, cells[1], "eigenvalue"),
      k,
      method,
    };
  });
}

export function parseReducedCsv(file: string): ReducedRow[] {
  const rows = splitRows(file, readInput(file), "k,j,eigenvalue,cos");
  return rows.map((cells, i) => ({
    k: num(file, i + 2, cells[0], "k"),
    j: num(file, i + 2, cells[1], "j"),
    eigenvalue: num(file, i + 2, cells[2], "eigenvalue"),
    cos: num(file, i + 2, cells[3], "cos"),
  }));
}

export function parseSweepCsv(file: string): SweepRow[] {
  const rows = splitRows(
    file,
    readInput(file),
    "p,omega,index,mean_epsilon,sd_epsilon",
  );
  return rows.map((cells, i) => ({
    p: num(file, i + 2, cells[0], "p"),
    omega: num(file, i + 2, cells[1], "omega"),
    index: num(file, i + 2, cells[2], "index"),
    meanEpsilon: num(file, i + 2, cells[3], "mean_epsilon"),
    sdEpsilon: num(file, i + 2, cells[4], "sd_epsilon"),
  }));
}

export function parseApproxCsv(file: string): ApproxRow[] {
  const rows = splitRows(file, readInput(file), "index,eigenvalue,epsilon");
  return rows.map((cells, i) => ({
    index: num(file, i + 2, cells[0], "index"),
    eigenvalue: num(file, i + 2, cells[1], "eigenvalue"),
    epsilon: num(file, i + 2, cells[2], "epsilon"),
  }));
}

export function parseVectorsCsv(file: string): VectorTable {
  const text = readInput(file);
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new SchemaError(file, "empty file");
  }
  const header = lines[0].split(",");
  if (header[0] !== "component") {
    throw new SchemaError(file, `bad header: expected leading "component" column`);
  }
  const vectors = header.length - 1;
  for (let v = 0; v < vectors; v += 1) {
    if (header[v + 1] !== `v${v + 1}`) {
      throw new SchemaError(file, `bad header: column ${v + 2} is "${header[v + 1]}"`);
    }
  }
  if (lines.length === 1) {
    throw new SchemaError(file, "no data rows");
  }
  const components = lines.length - 1;
  const columns: number[][] = Array.from({ length: vectors }, () =>
    new Array<number>(components),
  );
  for (let c = 0; c < components; c += 1) {
    const cells = lines[c + 1].split(",");
    if (cells.length !== vectors + 1) {
      throw new SchemaError(file, `row ${c + 2}: expected ${vectors + 1} cells`);
    }
    if (Number(cells[0]) !== c + 1) {
      throw new SchemaError(file, `row ${c + 2}: components out of order`);
    }
    for (let v = 0; v < vectors; v += 1) {
      columns[v][c] = num(file, c + 2, cells[v + 1], `v${v + 1}`);
    }
  }
  return { components, vectors, columns };
}
