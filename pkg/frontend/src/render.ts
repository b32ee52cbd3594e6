import { Scene, cursorColor } from "./scene";

const ICONS = ["★", "♠", "♣", "♥", "♦", "☀", "☂", "☘", "⚓", "✈", "♫", "⚙"];

/** Draw a scene on a canvas. Pure projection: all layout lives in the scene. */
export function drawScene(
  ctx: CanvasRenderingContext2D,
  scene: Scene,
  cellSize: number,
): void {
  const w = scene.cols * cellSize;
  const h = scene.rows * cellSize;
  ctx.clearRect(0, 0, w, h);

  ctx.font = `${Math.floor(cellSize * 0.32)}px sans-serif`;
  ctx.textAlign = "center";

  for (const tile of scene.fixedTiles) {
    const x = tile.col * cellSize;
    const y = tile.row * cellSize;
    ctx.fillStyle = tile.tint ?? "#f4f4f4";
    ctx.fillRect(x, y, cellSize, cellSize);
    ctx.strokeStyle = "#444";
    ctx.strokeRect(x, y, cellSize, cellSize);
    ctx.fillStyle = "#111";
    ctx.fillText(tile.label, x + cellSize / 2, y + cellSize * 0.4);
  }

  for (const tile of scene.cursorTiles) {
    if (tile.hidden) continue;
    const x = tile.col * cellSize;
    const y = tile.row * cellSize;
    let label = tile.label;
    if (scene.skin === "colors") {
      ctx.fillStyle = cursorColor(tile.label, scene.skin, 0);
      ctx.fillRect(x + cellSize * 0.3, y + cellSize * 0.55, cellSize * 0.4, cellSize * 0.3);
      continue;
    }
    if (scene.skin === "icons") {
      const i = tile.label.charCodeAt(0) % ICONS.length;
      label = ICONS[i]!;
    }
    ctx.fillStyle = "#0a4ea2";
    ctx.fillText(label, x + cellSize / 2, y + cellSize * 0.85);
  }
}

export function drawAsterisks(el: HTMLElement, entered: number, k: number): void {
  el.textContent = "*".repeat(entered) + "·".repeat(Math.max(0, k - entered));
}
