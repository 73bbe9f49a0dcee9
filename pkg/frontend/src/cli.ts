#!/usr/bin/env node
// plots render <csv> --kind joint_spectrum|density_abs|wigner
//                    [--wavelength-axes] --out fig.png
import * as path from "node:path";
import { fileURLToPath } from "node:url";

import { SchemaError, SCHEMAS, type PanelKind } from "./csv.js";
import { render } from "./render.js";

const USAGE =
  "usage: plots render <csv> --kind <joint_spectrum|density_abs|wigner> " +
  "[--wavelength-axes] --out <fig.png>";

export function main(argv: string[]): number {
  if (argv.length === 0 || argv[0] !== "render") {
    console.error(USAGE);
    return 2;
  }
  let csv: string | undefined;
  let kind: string | undefined;
  let out: string | undefined;
  let wavelengthAxes = false;
  for (let i = 1; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === "--kind") kind = argv[++i];
    else if (arg === "--out") out = argv[++i];
    else if (arg === "--wavelength-axes") wavelengthAxes = true;
    else if (!arg.startsWith("--") && csv === undefined) csv = arg;
    else {
      console.error(`unknown argument ${arg}\n${USAGE}`);
      return 2;
    }
  }
  if (!csv || !kind || !out) {
    console.error(USAGE);
    return 2;
  }
  if (!(kind in SCHEMAS)) {
    console.error(`unknown kind ${kind}; expected one of ` +
      Object.keys(SCHEMAS).join(", "));
    return 2;
  }
  try {
    render({
      inputCsv: csv,
      kind: kind as PanelKind,
      axisLabelsInWavelength: wavelengthAxes,
      outputImage: out,
    });
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
      return 1;
    }
    console.error(String(err));
    return 1;
  }
  console.log(`wrote ${out}`);
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  fileURLToPath(import.meta.url) === path.resolve(process.argv[1]);
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
