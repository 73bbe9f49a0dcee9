// Tick selection and the optional frequency -> wavelength axis
// relabeling.  Kept pure so the monotonicity contract is directly
// testable.

const C = 299792458.0; // m/s

export interface Tick {
  /** position in the data coordinate of the underlying axis */
  position: number;
  label: string;
}

export function niceStep(span: number, target: number): number {
  const raw = span / Math.max(target, 1);
  const mag = 10 ** Math.floor(Math.log10(raw));
  // nearest 1-2-5 multiple in log distance, so the tick count stays
  // close to the target instead of systematically undershooting it
  let best = mag;
  let bestDist = Infinity;
  for (const m of [1, 2, 5, 10]) {
    const dist = Math.abs(Math.log((m * mag) / raw));
    if (dist < bestDist) {
      best = m * mag;
      bestDist = dist;
    }
  }
  return best;
}

export function formatValue(value: number): string {
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 1e4 || abs < 1e-3) {
    return value.toExponential(2).replace("e+", "e");
  }
  return Number(value.toPrecision(4)).toString();
}

/** Evenly spaced round-number ticks across [lo, hi]. */
export function linearTicks(lo: number, hi: number, target = 5): Tick[] {
  const step = niceStep(hi - lo, target);
  const first = Math.ceil(lo / step) * step;
  const ticks: Tick[] = [];
  for (let v = first; v <= hi + 1e-9 * step; v += step) {
    ticks.push({ position: v, label: formatValue(v) });
  }
  return ticks;
}

export function omegaToWavelength(omega: number): number {
  return (2 * Math.PI * C) / omega;
}

/**
 * Ticks for a frequency axis relabeled in wavelength: round-number
 * wavelengths (nm) placed at their lambda = 2*pi*c/omega positions on
 * the frequency axis.  Because the mapping is monotone decreasing, the
 * returned labels decrease as the axis coordinate increases.
 */
export function wavelengthTicks(omegaLo: number, omegaHi: number,
                                target = 5): Tick[] {
  const lamHiNm = omegaToWavelength(omegaLo) * 1e9;
  const lamLoNm = omegaToWavelength(omegaHi) * 1e9;
  const step = niceStep(lamHiNm - lamLoNm, target);
  const first = Math.ceil(lamLoNm / step) * step;
  const ticks: Tick[] = [];
  for (let lam = first; lam <= lamHiNm + 1e-9 * step; lam += step) {
    const omega = (2 * Math.PI * C) / (lam * 1e-9);
    ticks.push({ position: omega, label: formatValue(lam) });
  }
  // positions ascend along the frequency axis
  return ticks.sort((a, b) => a.position - b.position);
}
