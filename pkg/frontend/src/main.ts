import { AuthClient } from "./api";
import { LoginApp } from "./app";
import { drawAsterisks, drawScene } from "./render";

const CELL = 72;

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

const canvas = byId<HTMLCanvasElement>("board");
const ctx = canvas.getContext("2d")!;
const status = byId<HTMLElement>("status");
const asterisks = byId<HTMLElement>("asterisks");

const client = new AuthClient("");
const app = new LoginApp(client, (snap) => {
  if (snap.scene) {
    canvas.width = snap.scene.cols * CELL;
    canvas.height = snap.scene.rows * CELL;
    drawScene(ctx, snap.scene, CELL);
  }
  drawAsterisks(asterisks, snap.asterisks, snap.k);
  if (snap.result) {
    status.textContent = snap.result === "success" ? "Welcome." : "Login failed.";
  } else if (snap.message) {
    status.textContent = snap.message;
  }
});

byId<HTMLButtonElement>("open").addEventListener("click", () => {
  const user = byId<HTMLInputElement>("user").value;
  app.open(user, CELL, CELL).catch(() => {
    status.textContent = "login not available";
  });
});
byId<HTMLButtonElement>("reset").addEventListener("click", () => void app.resetGesture());
byId<HTMLButtonElement>("validate").addEventListener("click", () => void app.validateGesture());

// Drag anywhere on the board controls the moveable layer; the OS cursor is
// hidden while dragging (configurable).
let dragging = false;
let last: [number, number] | null = null;
const hideCursorWhileDragging = true;
let lastTap = 0;

canvas.addEventListener("pointerdown", (e) => {
  dragging = true;
  last = [e.clientX, e.clientY];
  canvas.setPointerCapture(e.pointerId);
  if (hideCursorWhileDragging) canvas.style.cursor = "none";
  // double tap commits on touch devices
  if (e.pointerType === "touch") {
    const now = performance.now();
    if (now - lastTap < 350) void app.commitGesture();
    lastTap = now;
  }
});
canvas.addEventListener("pointermove", (e) => {
  if (!dragging || !last) return;
  app.drag(e.clientX - last[0], e.clientY - last[1]);
  last = [e.clientX, e.clientY];
});
canvas.addEventListener("pointerup", (e) => {
  dragging = false;
  last = null;
  canvas.style.cursor = "";
  // a primary click without movement commits
  if (e.pointerType !== "touch") void app.commitGesture();
});
