/**
 * Figure CLI: `node dist/cli.js <fig1|fig2|fig3|fig4|fig5> --in FILE
 * [--vectors FILE] [--layers T] [--title TEXT] --out FILE.svg`.
 *
 * Exit codes: 0 rendered, 1 schema/validation error, 2 usage.
 */

import { writeFileSync } from "node:fs";

import { MissingInputError, SchemaError } from "./schema.js";
import {
  renderFig1,
  renderFig2,
  renderFig3,
  renderFig4,
  renderFig5,
} from "./figures.js";

interface Args {
  figure: string;
  infile?: string;
  vectors?: string;
  out?: string;
  layers?: number;
  title?: string;
}

function parseArgs(argv: string[]): Args {
  if (argv.length === 0) {
    throw new UsageError("missing figure id");
  }
  const args: Args = { figure: argv[0] };
  for (let i = 1; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (value === undefined) {
      throw new UsageError(`flag ${flag} needs a value`);
    }
    switch (flag) {
      case "--in":
        args.infile = value;
        break;
      case "--vectors":
        args.vectors = value;
        break;
      case "--out":
        args.out = value;
        break;
      case "--layers":
        args.layers = Number(value);
        break;
      case "--title":
        args.title = value;
        break;
      default:
        throw new UsageError(`unknown flag ${flag}`);
    }
  }
  if (!args.infile || !args.out) {
    throw new UsageError("--in and --out are required");
  }
  return args;
}

class UsageError extends Error {}

export function render(args: Args): string {
  const opts = { layers: args.layers, title: args.title };
  switch (args.figure) {
    case "fig1":
      return renderFig1(args.infile!, opts);
    case "fig5":
      return renderFig5(args.infile!, opts);
    case "fig2":
      if (!args.vectors) throw new UsageError("fig2 needs --vectors");
      return renderFig2(args.infile!, args.vectors, opts);
    case "fig3":
      if (!args.vectors) throw new UsageError("fig3 needs --vectors");
      return renderFig3(args.infile!, args.vectors, opts);
    case "fig4":
      return renderFig4(args.infile!, opts);
    default:
      throw new UsageError(`unknown figure id ${args.figure}`);
  }
}

export function main(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`usage error: ${(err as Error).message}`);
    return 2;
  }
  try {
    writeFileSync(args.out!, render(args));
    return 0;
  } catch (err) {
    if (err instanceof SchemaError || err instanceof MissingInputError) {
      console.error(err.message);
      return 1;
    }
    if (err instanceof UsageError) {
      console.error(`usage error: ${err.message}`);
      return 2;
    }
    throw err;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined && import.meta.url.endsWith("cli.js");
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
