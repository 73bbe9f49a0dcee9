// Parsers for the three chronopair CSV export schemas.  These are the
// component boundary: nothing here knows how the files were produced.

export type PanelKind = "joint_spectrum" | "density_abs" | "wigner";

export interface ParsedGrid {
  /** column meaning of x/y/value for this kind */
  xName: string;
  yName: string;
  valueName: string;
  rows: Array<[number, number, number]>;
}

export class SchemaError extends Error {}

/** expected header and which columns feed the heatmap, per kind */
export const SCHEMAS: Record<
  PanelKind,
  { header: string[]; x: string; y: string; value: string }
> = {
  joint_spectrum: {
    header: ["omega_s", "omega_i", "re", "im", "abs2"],
    x: "omega_s",
    y: "omega_i",
    value: "abs2",
  },
  density_abs: {
    header: ["omega1", "omega2", "re", "im", "abs"],
    x: "omega1",
    y: "omega2",
    value: "abs",
  },
  wigner: { header: ["omega", "t", "w"], x: "omega", y: "t", value: "w" },
};

export function parseCsv(text: string, kind: PanelKind): ParsedGrid {
  const schema = SCHEMAS[kind];
  const lines = text.split(/\r?\n/).filter(
    (line) => line.trim() !== "" && !line.startsWith("#"),
  );
  if (lines.length === 0) {
    throw new SchemaError(
      `empty CSV; expected header ${schema.header.join(",")}`,
    );
  }
  const header = lines[0].split(",").map((s) => s.trim());
  const matches =
    header.length === schema.header.length &&
    header.every((name, i) => name === schema.header[i]);
  if (!matches) {
    throw new SchemaError(
      `header "${lines[0]}" does not match the ${kind} schema; ` +
        `expected columns ${schema.header.join(",")}`,
    );
  }
  if (lines.length === 1) {
    throw new SchemaError(`no data rows under header ${schema.header.join(",")}`);
  }
  const xi = header.indexOf(schema.x);
  const yi = header.indexOf(schema.y);
  const vi = header.indexOf(schema.value);
  const rows: Array<[number, number, number]> = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== header.length) {
      throw new SchemaError(
        `row ${i + 1} has ${parts.length} fields, expected ${header.length}`,
      );
    }
    const x = Number(parts[xi]);
    const y = Number(parts[yi]);
    const v = Number(parts[vi]);
    if (!Number.isFinite(x) || !Number.isFinite(y) || !Number.isFinite(v)) {
      throw new SchemaError(`row ${i + 1} contains non-numeric fields`);
    }
    rows.push([x, y, v]);
  }
  return {
    xName: schema.x,
    yName: schema.y,
    valueName: schema.value,
    rows,
  };
}

export interface DenseGrid {
  xAxis: number[]; // sorted ascending
  yAxis: number[];
  values: Float64Array; // row-major [ix * ny + iy]
}

/** Assemble scattered (x, y, value) rows into a dense rectangular grid. */
export function toDense(grid: ParsedGrid): DenseGrid {
  const xAxis = [...new Set(grid.rows.map((r) => r[0]))].sort((a, b) => a - b);
  const yAxis = [...new Set(grid.rows.map((r) => r[1]))].sort((a, b) => a - b);
  const xIndex = new Map(xAxis.map((v, i) => [v, i]));
  const yIndex = new Map(yAxis.map((v, i) => [v, i]));
  if (grid.rows.length !== xAxis.length * yAxis.length) {
    throw new SchemaError(
      `rows do not fill a rectangular grid: ${grid.rows.length} rows for ` +
        `${xAxis.length} x ${yAxis.length} axis points`,
    );
  }
  const values = new Float64Array(xAxis.length * yAxis.length);
  for (const [x, y, v] of grid.rows) {
    values[xIndex.get(x)! * yAxis.length + yIndex.get(y)!] = v;
  }
  return { xAxis, yAxis, values };
}
