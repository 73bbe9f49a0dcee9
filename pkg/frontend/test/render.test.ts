import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { main } from "../src/cli.js";
import { diverging, sequential } from "../src/colormap.js";
import { render } from "../src/render.js";

const TESTDATA = path.join(__dirname, "..", "testdata");
const PNG_MAGIC = Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]);

let tmp: string;
beforeAll(() => {
  tmp = fs.mkdtempSync(path.join(os.tmpdir(), "plots-"));
});
afterAll(() => {
  fs.rmSync(tmp, { recursive: true, force: true });
});

describe("golden panels", () => {
  const panels = [
    ["negative_jsa.csv", "joint_spectrum"],
    ["positive_chirped_density.csv", "density_abs"],
    ["vertical_chirped_wigner.csv", "wigner"],
  ] as const;

  for (const [file, kind] of panels) {
    it(`renders ${kind} from ${file}`, () => {
      const out = path.join(tmp, `${kind}.png`);
      render({
        inputCsv: path.join(TESTDATA, file),
        kind,
        axisLabelsInWavelength: kind !== "wigner",
        outputImage: out,
      });
      const blob = fs.readFileSync(out);
      expect(blob.subarray(0, 8).equals(PNG_MAGIC)).toBe(true);
      expect(blob.length).toBeGreaterThan(2_000);
    });
  }

  it("does not mutate its input", () => {
    const src = path.join(TESTDATA, "vertical_chirped_wigner.csv");
    const before = fs.readFileSync(src);
    render({
      inputCsv: src,
      kind: "wigner",
      axisLabelsInWavelength: false,
      outputImage: path.join(tmp, "again.png"),
    });
    expect(fs.readFileSync(src).equals(before)).toBe(true);
  });
});

describe("cli", () => {
  it("renders via the documented invocation", () => {
    const out = path.join(tmp, "cli.png");
    const rc = main([
      "render", path.join(TESTDATA, "vertical_chirped_wigner.csv"),
      "--kind", "wigner", "--wavelength-axes", "--out", out,
    ]);
    expect(rc).toBe(0);
    expect(fs.existsSync(out)).toBe(true);
  });

  it("empty csv: schema error, no file written", () => {
    const empty = path.join(tmp, "empty.csv");
    fs.writeFileSync(empty, "");
    const out = path.join(tmp, "nope.png");
    const rc = main(["render", empty, "--kind", "wigner", "--out", out]);
    expect(rc).toBe(1);
    expect(fs.existsSync(out)).toBe(false);
  });

  it("schema mismatch: error names the expected columns, no file", () => {
    const wrong = path.join(tmp, "wrong.csv");
    fs.writeFileSync(wrong, "a,b,c\n1,2,3\n");
    const out = path.join(tmp, "nope2.png");
    const rc = main(["render", wrong, "--kind", "density_abs", "--out", out]);
    expect(rc).toBe(1);
    expect(fs.existsSync(out)).toBe(false);
  });

  it("usage errors exit 2", () => {
    expect(main([])).toBe(2);
    expect(main(["render"])).toBe(2);
    expect(main(["render", "x.csv", "--kind", "sideways", "--out", "y.png"]))
      .toBe(2);
  });
});

describe("colormaps", () => {
  it("sequential endpoints and interior ordering", () => {
    expect(sequential(0)).toEqual([68, 1, 84]);
    expect(sequential(1)).toEqual([253, 231, 37]);
    // luminance-ish proxy increases with t
    const lum = (t: number) =>
      sequential(t).reduce((acc, c, i) => acc + c * [0.2126, 0.7152, 0.0722][i], 0);
    let prev = -1;
    for (let t = 0; t <= 1.0001; t += 0.05) {
      const l = lum(Math.min(t, 1));
      expect(l).toBeGreaterThan(prev);
      prev = l;
    }
  });

  it("diverging map is neutral at zero and saturated at the ends", () => {
    expect(diverging(0)).toEqual([247, 247, 247]);
    const [rN] = diverging(-1);
    const [rP] = diverging(+1);
    expect(rN).toBeLessThan(100);   // deep blue
    expect(rP).toBeGreaterThan(90); // deep red
    expect(diverging(-2)).toEqual(diverging(-1)); // clamped
  });
});
