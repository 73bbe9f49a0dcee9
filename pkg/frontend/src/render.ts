// Heatmap panel rendering: CSV -> dense grid -> colored raster with
// axes, ticks, a colorbar, and optional wavelength axis relabeling.
import * as fs from "node:fs";
import * as path from "node:path";

import { diverging, sequential, type Rgb } from "./colormap.js";
import { parseCsv, toDense, type DenseGrid, type PanelKind, SCHEMAS } from "./csv.js";
import { encodePng } from "./png.js";
import { Raster } from "./raster.js";
import { linearTicks, wavelengthTicks, type Tick } from "./ticks.js";

export interface PanelSpec {
  inputCsv: string;
  kind: PanelKind;
  axisLabelsInWavelength: boolean;
  outputImage: string;
}

const MARGIN = { left: 78, right: 96, top: 28, bottom: 52 };
const PLOT_W = 460;
const PLOT_H = 420;
const BLACK: Rgb = [0, 0, 0];

interface AxisInfo {
  ticks: Tick[];
  label: string;
}

function axisInfo(axis: number[], name: string,
                  wavelength: boolean): AxisInfo {
  const lo = axis[0];
  const hi = axis[axis.length - 1];
  const isFrequency = name.startsWith("omega");
  if (wavelength && isFrequency) {
    return {
      ticks: wavelengthTicks(lo, hi),
      label: `${name}: wavelength (nm)`,
    };
  }
  const unit = isFrequency ? "rad/s" : "s";
  return { ticks: linearTicks(lo, hi), label: `${name} (${unit})` };
}

function toPixelX(value: number, axis: number[]): number {
  const lo = axis[0];
  const hi = axis[axis.length - 1];
  return MARGIN.left + ((value - lo) / (hi - lo)) * (PLOT_W - 1);
}

function toPixelY(value: number, axis: number[]): number {
  const lo = axis[0];
  const hi = axis[axis.length - 1];
  // y axis points up
  return MARGIN.top + (1 - (value - lo) / (hi - lo)) * (PLOT_H - 1);
}

function drawHeatmap(raster: Raster, grid: DenseGrid, kind: PanelKind): void {
  const nx = grid.xAxis.length;
  const ny = grid.yAxis.length;
  let peak = 0;
  for (const v of grid.values) peak = Math.max(peak, Math.abs(v));
  if (peak === 0) peak = 1;
  const signed = kind === "wigner";
  for (let px = 0; px < PLOT_W; px++) {
    const ix = Math.min(nx - 1, Math.floor((px / PLOT_W) * nx));
    for (let py = 0; py < PLOT_H; py++) {
      const iy = Math.min(ny - 1, Math.floor(((PLOT_H - 1 - py) / PLOT_H) * ny));
      const v = grid.values[ix * ny + iy];
      const rgb = signed ? diverging(v / peak) : sequential(Math.max(v, 0) / peak);
      raster.set(MARGIN.left + px, MARGIN.top + py, rgb);
    }
  }
}

function drawColorbar(raster: Raster, grid: DenseGrid, kind: PanelKind): void {
  const x0 = MARGIN.left + PLOT_W + 18;
  const barW = 16;
  let peak = 0;
  for (const v of grid.values) peak = Math.max(peak, Math.abs(v));
  if (peak === 0) peak = 1;
  const signed = kind === "wigner";
  for (let py = 0; py < PLOT_H; py++) {
    const t = 1 - py / (PLOT_H - 1);
    const rgb = signed ? diverging(2 * t - 1) : sequential(t);
    for (let dx = 0; dx < barW; dx++) {
      raster.set(x0 + dx, MARGIN.top + py, rgb);
    }
  }
  const fmt = (v: number) => (v === 0 ? "0" : v.toExponential(1).replace("e+", "e"));
  raster.text(x0 + barW + 4, MARGIN.top, fmt(peak));
  raster.text(x0 + barW + 4, MARGIN.top + PLOT_H - 7, fmt(signed ? -peak : 0));
  if (signed) {
    raster.text(x0 + barW + 4, MARGIN.top + Math.round(PLOT_H / 2) - 3, "0");
  }
}

function drawAxes(raster: Raster, grid: DenseGrid, xInfo: AxisInfo,
                  yInfo: AxisInfo, title: string): void {
  const x0 = MARGIN.left;
  const y0 = MARGIN.top;
  raster.hline(x0, x0 + PLOT_W - 1, y0 + PLOT_H, BLACK);
  raster.vline(x0 - 1, y0, y0 + PLOT_H, BLACK);
  for (const tick of xInfo.ticks) {
    const px = Math.round(toPixelX(tick.position, grid.xAxis));
    if (px < x0 || px > x0 + PLOT_W - 1) continue;
    raster.vline(px, y0 + PLOT_H, y0 + PLOT_H + 4, BLACK);
    raster.textCentered(px, y0 + PLOT_H + 7, tick.label);
  }
  for (const tick of yInfo.ticks) {
    const py = Math.round(toPixelY(tick.position, grid.yAxis));
    if (py < y0 || py > y0 + PLOT_H - 1) continue;
    raster.hline(x0 - 5, x0 - 1, py, BLACK);
    const label = tick.label;
    raster.text(x0 - 8 - label.length * 6, py - 3, label);
  }
  raster.textCentered(x0 + PLOT_W / 2, y0 + PLOT_H + 24, xInfo.label);
  raster.textVertical(6, y0 + PLOT_H / 2, yInfo.label);
  raster.textCentered(x0 + PLOT_W / 2, 10, title);
}

/**
 * Render one panel.  Reads the CSV, validates it against the declared
 * schema, rasterizes the heatmap and writes a PNG.  The output file is
 * written only after the whole image is encoded, so it exists iff the
 * call succeeds.  Inputs are never modified.
 */
export function render(panel: PanelSpec): void {
  const text = fs.readFileSync(panel.inputCsv, "utf8");
  const dense = toDense(parseCsv(text, panel.kind));
  const schema = SCHEMAS[panel.kind];

  const width = MARGIN.left + PLOT_W + MARGIN.right;
  const height = MARGIN.top + PLOT_H + MARGIN.bottom;
  const raster = new Raster(width, height);

  drawHeatmap(raster, dense, panel.kind);
  drawColorbar(raster, dense, panel.kind);
  const xInfo = axisInfo(dense.xAxis, schema.x, panel.axisLabelsInWavelength);
  const yInfo = axisInfo(dense.yAxis, schema.y, panel.axisLabelsInWavelength);
  drawAxes(raster, dense, xInfo, yInfo, `${panel.kind}: ${schema.value}`);

  const png = encodePng(width, height, raster.data);
  fs.mkdirSync(path.dirname(path.resolve(panel.outputImage)), { recursive: true });
  fs.writeFileSync(panel.outputImage, png);
}
