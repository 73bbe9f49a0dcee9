// A small RGBA raster with just enough drawing primitives for the
// panels: rectangles, 1px lines, and bitmap text.
import { GLYPH_ADVANCE, GLYPH_HEIGHT, GLYPH_WIDTH, glyph, textWidth } from "./font.js";
import type { Rgb } from "./colormap.js";

export class Raster {
  readonly data: Uint8Array;

  constructor(readonly width: number, readonly height: number,
              background: Rgb = [255, 255, 255]) {
    this.data = new Uint8Array(width * height * 4);
    for (let i = 0; i < width * height; i++) {
      this.data[4 * i] = background[0];
      this.data[4 * i + 1] = background[1];
      this.data[4 * i + 2] = background[2];
      this.data[4 * i + 3] = 255;
    }
  }

  set(x: number, y: number, rgb: Rgb): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = 4 * (y * this.width + x);
    this.data[i] = rgb[0];
    this.data[i + 1] = rgb[1];
    this.data[i + 2] = rgb[2];
    this.data[i + 3] = 255;
  }

  fillRect(x0: number, y0: number, w: number, h: number, rgb: Rgb): void {
    for (let y = y0; y < y0 + h; y++) {
      for (let x = x0; x < x0 + w; x++) {
        this.set(x, y, rgb);
      }
    }
  }

  hline(x0: number, x1: number, y: number, rgb: Rgb): void {
    for (let x = Math.min(x0, x1); x <= Math.max(x0, x1); x++) this.set(x, y, rgb);
  }

  vline(x: number, y0: number, y1: number, rgb: Rgb): void {
    for (let y = Math.min(y0, y1); y <= Math.max(y0, y1); y++) this.set(x, y, rgb);
  }

  /** Draw text with its top-left corner at (x, y). */
  text(x: number, y: number, s: string, rgb: Rgb = [0, 0, 0]): void {
    let cx = x;
    for (const ch of s) {
      const rows = glyph(ch);
      for (let gy = 0; gy < GLYPH_HEIGHT; gy++) {
        for (let gx = 0; gx < GLYPH_WIDTH; gx++) {
          if ((rows[gy] >> (GLYPH_WIDTH - 1 - gx)) & 1) {
            this.set(cx + gx, y + gy, rgb);
          }
        }
      }
      cx += GLYPH_ADVANCE;
    }
  }

  /** Draw text centered horizontally around x. */
  textCentered(x: number, y: number, s: string, rgb: Rgb = [0, 0, 0]): void {
    this.text(Math.round(x - textWidth(s) / 2), y, s, rgb);
  }

  /** Draw text rotated 90 degrees counterclockwise, centered on y. */
  textVertical(x: number, y: number, s: string, rgb: Rgb = [0, 0, 0]): void {
    const w = textWidth(s);
    let cy = Math.round(y + w / 2);
    for (const ch of s) {
      const rows = glyph(ch);
      for (let gy = 0; gy < GLYPH_HEIGHT; gy++) {
        for (let gx = 0; gx < GLYPH_WIDTH; gx++) {
          if ((rows[gy] >> (GLYPH_WIDTH - 1 - gx)) & 1) {
            this.set(x + gy, cy - gx, rgb);
          }
        }
      }
      cy -= GLYPH_ADVANCE;
    }
  }
}
