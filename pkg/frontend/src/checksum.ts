/**
 * Provenance metadata: every rendered figure embeds the SHA-256 of each
 * input file, so an image can be tied to the exact data it was drawn from.
 */

import { createHash } from "node:crypto";
import { readFileSync } from "node:fs";
import { basename } from "node:path";

export function sha256Hex(buffer: Buffer): string {
  return createHash("sha256").update(buffer).digest("hex");
}

export function inputChecksums(files: string[]): Record<string, string> {
  const out: Record<string, string> = {};
  for (const file of files) {
    out[basename(file)] = `sha256:${sha256Hex(readFileSync(file))}`;
  }
  return out;
}

export function metadataJson(
  figureId: string,
  files: string[],
): string {
  // stable key order: figure first, then inputs sorted by name
  const sums = inputChecksums(files);
  const inputs = Object.fromEntries(
    Object.keys(sums)
      .sort()
      .map((k) => [k, sums[k]]),
  );
  return JSON.stringify({ figure: figureId, inputs });
}

/** Extract the metadata JSON back out of a rendered SVG. */
export function readMetadata(svg: string): { figure: string; inputs: Record<string, string> } {
  const match = svg.match(/<metadata>([\s\S]*?)<\/metadata>/);
  if (!match) {
    throw new Error("no metadata element in SVG");
  }
  const decoded = match[1]
    .replace(/&lt;/g, "<")
    .replace(/&gt;/g, ">")
    .replace(/&quot;/g, '"')
    .replace(/&amp;/g, "&");
  return JSON.parse(decoded);
}
