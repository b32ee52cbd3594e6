/**
 * Pointer-drag accumulation: pixel displacements are quantized to whole-cell
 * relative move orders; the fractional remainder is retained so scrolling
 * stays smooth across events. Torus wrap happens in board space on the
 * server, never by warping the OS pointer.
 */
export class PointerAccumulator {
  private fracRow = 0;
  private fracCol = 0;

  constructor(
    private readonly cellWidth: number,
    private readonly cellHeight: number,
  ) {
    if (cellWidth <= 0 || cellHeight <= 0) {
      throw new Error("cell size must be positive");
    }
  }

  /** Feed a pixel displacement; returns the relative orders to send. */
  add(dxPixels: number, dyPixels: number): [number, number][] {
    this.fracCol += dxPixels / this.cellWidth;
    this.fracRow += dyPixels / this.cellHeight;
    const orders: [number, number][] = [];
    while (Math.abs(this.fracCol) >= 1) {
      const s = Math.sign(this.fracCol);
      orders.push([0, s]);
      this.fracCol -= s;
    }
    while (Math.abs(this.fracRow) >= 1) {
      const s = Math.sign(this.fracRow);
      orders.push([s, 0]);
      this.fracRow -= s;
    }
    return orders;
  }

  /** Fractional cells not yet emitted, as [row, col]. */
  remainder(): [number, number] {
    return [this.fracRow, this.fracCol];
  }

  reset(): void {
    this.fracRow = 0;
    this.fracCol = 0;
  }
}
