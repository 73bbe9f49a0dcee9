// Colormaps for the heatmap panels: a perceptually-ordered sequential
// map for intensity-like data and a diverging map for the signed
// Wigner function.  Stop tables are sampled from the matplotlib
// reference palettes; lookups interpolate linearly between stops.

export type Rgb = [number, number, number];

// viridis, 16 stops
const VIRIDIS: Rgb[] = [
  [68, 1, 84], [72, 26, 108], [71, 47, 125], [65, 68, 135],
  [57, 86, 140], [49, 104, 142], [42, 120, 142], [35, 136, 142],
  [31, 152, 139], [34, 168, 132], [53, 183, 121], [84, 197, 104],
  [122, 209, 81], [165, 219, 54], [210, 226, 27], [253, 231, 37],
];

// RdBu reversed (blue = negative, red = positive), 17 stops
const RDBU_R: Rgb[] = [
  [5, 48, 97], [19, 74, 139], [41, 108, 168], [75, 140, 192],
  [120, 170, 208], [166, 199, 223], [202, 221, 235], [230, 238, 243],
  [247, 247, 247], [250, 230, 219], [248, 203, 181], [241, 168, 136],
  [225, 126, 95], [202, 82, 62], [172, 39, 39], [133, 14, 33],
  [103, 0, 31],
];

function interpolate(stops: Rgb[], t: number): Rgb {
  const clamped = Math.min(1, Math.max(0, t));
  const x = clamped * (stops.length - 1);
  const lo = Math.floor(x);
  const hi = Math.min(lo + 1, stops.length - 1);
  const frac = x - lo;
  return [0, 1, 2].map(
    (c) => Math.round(stops[lo][c] * (1 - frac) + stops[hi][c] * frac),
  ) as Rgb;
}

export function sequential(t: number): Rgb {
  return interpolate(VIRIDIS, t);
}

/** Diverging lookup: value in [-1, 1], 0 maps to the neutral center. */
export function diverging(v: number): Rgb {
  return interpolate(RDBU_R, (Math.min(1, Math.max(-1, v)) + 1) / 2);
}
