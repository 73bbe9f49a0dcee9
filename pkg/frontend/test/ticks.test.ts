import { describe, expect, it } from "vitest";

import { formatValue, linearTicks, niceStep, omegaToWavelength,
         wavelengthTicks } from "../src/ticks.js";

describe("niceStep", () => {
  it("returns the 1-2-5 multiple nearest the target density", () => {
    expect(niceStep(10, 5)).toBe(2);
    expect(niceStep(1, 5)).toBe(0.2);
    expect(niceStep(7e13, 5)).toBe(1e13);
  });
});

describe("linearTicks", () => {
  it("stays inside the range and ascends", () => {
    const ticks = linearTicks(2.0e15, 2.6e15);
    expect(ticks.length).toBeGreaterThanOrEqual(3);
    for (const t of ticks) {
      expect(t.position).toBeGreaterThanOrEqual(2.0e15);
      expect(t.position).toBeLessThanOrEqual(2.6e15 * (1 + 1e-12));
    }
    for (let i = 1; i < ticks.length; i++) {
      expect(ticks[i].position).toBeGreaterThan(ticks[i - 1].position);
    }
  });
});

describe("wavelengthTicks", () => {
  it("is a monotone-decreasing relabeling of the frequency axis", () => {
    // frequency axis around 830 nm
    const lo = 2.1e15;
    const hi = 2.45e15;
    const ticks = wavelengthTicks(lo, hi);
    expect(ticks.length).toBeGreaterThanOrEqual(3);
    const labels = ticks.map((t) => Number(t.label));
    for (let i = 1; i < ticks.length; i++) {
      // positions ascend in frequency while wavelength labels descend
      expect(ticks[i].position).toBeGreaterThan(ticks[i - 1].position);
      expect(labels[i]).toBeLessThan(labels[i - 1]);
    }
    for (const t of ticks) {
      expect(t.position).toBeGreaterThanOrEqual(lo * (1 - 1e-9));
      expect(t.position).toBeLessThanOrEqual(hi * (1 + 1e-9));
      // each label is the wavelength of its own position
      expect(omegaToWavelength(t.position) * 1e9)
        .toBeCloseTo(Number(t.label), 6);
    }
  });
});

describe("formatValue", () => {
  it("uses compact exponents for large magnitudes", () => {
    expect(formatValue(2.36e15)).toBe("2.36e15");
    expect(formatValue(0)).toBe("0");
    expect(formatValue(830)).toBe("830");
  });
});
