import init, { cell, potential_curve, eigenfunction_curve, spectrum } from "./pkg/angspec_web.js";

const inputs = ["n", "g1", "g2", "m", "grid"].map((id) => document.getElementById(id));
const status = document.getElementById("status");

function values() {
  const [n, g1, g2, m, grid] = inputs.map((el) => Number(el.value));
  return { n, g1, g2, m, grid };
}

function axes(ctx, w, h) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#bbb";
  ctx.strokeRect(0.5, 0.5, w - 1, h - 1);
}

// pairs is [x0, y0, x1, y1, ...]
function plot(canvas, pairs, yLo, yHi, color) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  axes(ctx, w, h);
  const xs = pairs.filter((_, i) => i % 2 === 0);
  const [xLo, xHi] = [xs[0], xs[xs.length - 1]];
  const px = (x) => ((x - xLo) / (xHi - xLo)) * (w - 20) + 10;
  const py = (y) => h - 10 - ((Math.min(Math.max(y, yLo), yHi) - yLo) / (yHi - yLo)) * (h - 20);
  if (yLo < 0 && yHi > 0) {
    ctx.strokeStyle = "#ddd";
    ctx.beginPath();
    ctx.moveTo(0, py(0));
    ctx.lineTo(w, py(0));
    ctx.stroke();
  }
  ctx.strokeStyle = color;
  ctx.lineWidth = 2;
  ctx.beginPath();
  for (let i = 0; i < pairs.length; i += 2) {
    const [x, y] = [px(pairs[i]), py(pairs[i + 1])];
    i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
  }
  ctx.stroke();
}

function drawSpectrum(canvas, exact, fd) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  axes(ctx, w, h);
  const top = Math.max(...exact, ...fd) * 1.05;
  const px = (v) => 10 + (v / top) * (w - 20);
  const row = (levels, y, color) => {
    ctx.strokeStyle = color;
    ctx.fillStyle = color;
    ctx.lineWidth = 2;
    for (const v of levels) {
      ctx.beginPath();
      ctx.moveTo(px(v), y - 30);
      ctx.lineTo(px(v), y + 30);
      ctx.stroke();
    }
  };
  row(exact, h * 0.3, "#1f77b4");
  row(fd, h * 0.72, "#d62728");
  ctx.fillStyle = "#444";
  ctx.fillText(`0`, 10, h - 4);
  ctx.fillText(top.toFixed(1), w - 50, h - 4);
}

function render() {
  const { n, g1, g2, m, grid } = values();
  inputs.forEach((el) => (el.nextElementSibling.value = el.value));
  try {
    const [lo, hi] = cell(n, g1, g2);
    const pot = potential_curve(n, g1, g2, 400);
    const floor = Math.min(...pot.filter((_, i) => i % 2 === 1));
    plot(document.getElementById("potential"), pot, 0, Math.max(4 * floor, 1), "#2ca02c");
    const psi = eigenfunction_curve(n, g1, g2, m, 400);
    plot(document.getElementById("eigenfunction"), psi, -1.05, 1.05, "#9467bd");
    const count = 6;
    // 4 | N ladders skip every other Dirichlet level, so ask for more FD levels there
    const fdCount = n % 4 === 0 ? 2 * count : count;
    const levels = spectrum(n, g1, g2, count, fdCount, grid);
    drawSpectrum(document.getElementById("spectrum"), levels.slice(0, count), levels.slice(count));
    status.textContent = `cell (${lo.toFixed(4)}, ${hi.toFixed(4)})`;
    status.style.color = "#555";
  } catch (err) {
    status.textContent = String(err);
    status.style.color = "#a00";
  }
}

await init();
inputs.forEach((el) => el.addEventListener("input", render));
render();
