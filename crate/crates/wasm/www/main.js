// Expects the wasm-pack output (`--target web`) in ./pkg.
import init, { colourTorus, torusGraph, verifyColouring, dischargeAudit } from "./pkg/oddcolour_wasm.js";

const $ = (id) => document.getElementById(id);
const palette = ["#f6c1c1", "#f3a0a0", "#e57373", "#c5e1a5", "#9ccc65", "#7cb342", "#b3c7f7", "#82a4f0", "#5c7fe0"];

function params() {
  return ["m", "n", "t"].map((k) => Number($(k).value));
}

function fail(target, e) {
  target.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(e);
  target.appendChild(p);
}

function drawGrid(result) {
  const table = document.createElement("table");
  table.className = "grid";
  const m = result.grid.length;
  const n = result.grid[0].length;
  const marked = new Set(result.recoloured.map((r) => `${r.i},${r.j}`));
  // row n at the top, as in the usual drawing
  for (let j = n; j >= 1; j--) {
    const tr = table.insertRow();
    const th = document.createElement("th");
    th.textContent = j;
    tr.appendChild(th);
    for (let i = 1; i <= m; i++) {
      const td = tr.insertCell();
      const c = result.grid[i - 1][j - 1];
      td.textContent = c;
      td.style.background = palette[(c - 1) % palette.length];
      if (marked.has(`${i},${j}`)) td.className = "recoloured";
    }
  }
  const foot = table.insertRow();
  foot.appendChild(document.createElement("th"));
  for (let i = 1; i <= m; i++) {
    const th = document.createElement("th");
    th.textContent = i;
    foot.appendChild(th);
  }
  return table;
}

function showColouring() {
  const out = $("colour-out");
  try {
    const r = JSON.parse(colourTorus(...params()));
    out.innerHTML = "";
    const p = document.createElement("p");
    const moved = r.recoloured.map((x) => `(${x.i},${x.j}) ${x.from}→${x.to}`).join(", ") || "none";
    p.textContent = `${r.params}, case ${r.case}: ${r.colours} colours, nice: ${r.nice}. Recoloured: ${moved}.`;
    out.append(p, drawGrid(r));
  } catch (e) {
    fail(out, e);
  }
}

function loadInputs() {
  try {
    const [m, n, t] = params();
    $("graph").value = torusGraph(m, n, t);
    const r = JSON.parse(colourTorus(m, n, t));
    const lines = [];
    for (let i = 1; i <= m; i++) {
      for (let j = 1; j <= n; j++) lines.push(`${(i - 1) * n + j} ${r.grid[i - 1][j - 1]}`);
    }
    $("colouring").value = lines.join("\n") + "\n";
  } catch (e) {
    fail($("colour-out"), e);
  }
}

function verdict(name, v) {
  return `${name}: ${v.ok ? "yes" : "no (" + v.witness + ")"}`;
}

function runVerify() {
  try {
    const r = JSON.parse(verifyColouring($("graph").value, $("colouring").value));
    $("verify-out").textContent = [
      verdict("proper", r.proper),
      verdict("odd", r.odd),
      verdict("nice", r.nice),
      verdict("conflict-free", r.conflict_free),
      `colours used: ${r.colours}`,
    ].join("\n");
  } catch (e) {
    $("verify-out").textContent = `error: ${e}`;
  }
}

function runDischarge() {
  try {
    const r = JSON.parse(dischargeAudit($("graph").value));
    const list = (xs) => (xs.length ? xs.map(([x, c]) => `${x} (${c})`).join(", ") : "none");
    $("discharge-out").textContent = [
      `V=${r.vertices} E=${r.edges} F=${r.faces}`,
      `total before: ${r.total_before}`,
      `total after: ${r.total_after}`,
      `conserved: ${r.conserved}`,
      `transfers: ${r.transfers}`,
      `negative faces: ${list(r.negative_faces)}`,
      `negative 6+-vertices: ${list(r.negative_large_vertices)}`,
      `5-vertices with charge <= 0: ${list(r.nonpositive_five_vertices)}`,
    ].join("\n");
  } catch (e) {
    $("discharge-out").textContent = `error: ${e}`;
  }
}

await init();
$("colour").addEventListener("click", showColouring);
$("load").addEventListener("click", loadInputs);
$("verify").addEventListener("click", runVerify);
$("discharge").addEventListener("click", runDischarge);
showColouring();
loadInputs();
