import init, { analyze, unamalgamate, rad_power } from "./pkg/nakayama_web.js";

const SVG = "http://www.w3.org/2000/svg";
const $ = (id) => document.getElementById(id);

let current = null;

function el(name, attrs, parent) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (parent) parent.appendChild(node);
  return node;
}

function circleLayout(count, radius) {
  return Array.from({ length: count }, (_, k) => {
    const a = -Math.PI / 2 + (2 * Math.PI * k) / Math.max(count, 1);
    return [radius * Math.cos(a), radius * Math.sin(a)];
  });
}

function clear(svg) {
  while (svg.firstChild) svg.removeChild(svg.firstChild);
  const defs = el("defs", {}, svg);
  const marker = el("marker", { id: "head", viewBox: "0 0 10 10", refX: 10, refY: 5,
    markerWidth: 6, markerHeight: 6, orient: "auto-start-reverse" }, defs);
  el("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#444" }, marker);
}

function drawQuiver(report) {
  const svg = $("quiver");
  clear(svg);
  const n = report.algebra.n;
  const pos = circleLayout(n, 150);
  const onCycle = new Set(report.resolution_quiver.components.flatMap((c) => c.cycle));
  for (const [i, j] of report.resolution_quiver.arrows) {
    const [x1, y1] = pos[i - 1];
    const [x2, y2] = pos[j - 1];
    const style = onCycle.has(i) ? { stroke: "#c0392b", "stroke-width": 2.5 } : { stroke: "#444", "stroke-width": 1 };
    if (i === j) {
      el("circle", { cx: x1 * 1.18, cy: y1 * 1.18, r: 16, fill: "none", ...style }, svg);
      continue;
    }
    const len = Math.hypot(x2 - x1, y2 - y1);
    const ux = (x2 - x1) / len;
    const uy = (y2 - y1) / len;
    el("line", { x1: x1 + 14 * ux, y1: y1 + 14 * uy, x2: x2 - 14 * ux, y2: y2 - 14 * uy,
      "marker-end": "url(#head)", ...style }, svg);
  }
  pos.forEach(([x, y], k) => {
    el("circle", { cx: x, cy: y, r: 13, fill: "#fff", stroke: "#222" }, svg);
    const t = el("text", { x, y: y + 5, "text-anchor": "middle", "font-size": 14 }, svg);
    t.textContent = k + 1;
  });
}

function drawComplex(report) {
  const svg = $("complex");
  clear(svg);
  const words = report.complex.vertices;
  const pos = circleLayout(words.length, 140);
  const simplices = report.complex.simplices;
  for (const s of simplices.filter((s) => s.length === 3)) {
    const points = s.map((v) => pos[v].join(",")).join(" ");
    el("polygon", { points, fill: "rgba(41, 128, 185, 0.18)", stroke: "none" }, svg);
  }
  for (const [a, b] of simplices.filter((s) => s.length === 2)) {
    el("line", { x1: pos[a][0], y1: pos[a][1], x2: pos[b][0], y2: pos[b][1], stroke: "#2980b9", "stroke-width": 2 }, svg);
  }
  words.forEach((w, k) => {
    const [x, y] = pos[k];
    el("circle", { cx: x, cy: y, r: 6, fill: "#2980b9" }, svg);
    const t = el("text", { x: x * 1.2, y: y * 1.2 + 4, "text-anchor": "middle", "font-size": 12 }, svg);
    t.textContent = w;
  });
  if (words.length === 0) {
    const t = el("text", { x: 0, y: 0, "text-anchor": "middle" }, svg);
    t.textContent = "empty complex";
  }
}

function summarize(report) {
  const lines = [
    `algebra: n=${report.algebra.n}, relations ${report.relation_words.join(", ")}`,
    `kupisch: (${report.kupisch.join(", ")})   class: ${report.class}`,
    `components: ${report.resolution_quiver.components.length}   weights: ${report.weights.join(", ")}`,
    `f-vector: (${report.complex.f_vector.join(", ")})   euler: ${report.euler}`,
    `reduced betti (from -1): (${report.reduced_betti.join(", ")})`,
    `maximal simplices: ${report.complex.maximal_simplices.map((s) => "{" + s.join(",") + "}").join(" ")}`,
    `hc dims: (${report.hc_dims.join(", ")})`,
    `gldim: ${report.gldim}`,
    `verdicts: ${Object.entries(report.verdicts).map(([k, v]) => `${k}=${v ? "ok" : "FAIL"}`).join(" ")}`,
  ];
  return lines.join("\n");
}

function show(report, note) {
  if (report.error) {
    $("message").innerHTML = "";
    const p = document.createElement("p");
    p.className = "error";
    p.textContent = `${report.error.code}: ${report.error.message}`;
    $("message").appendChild(p);
    return;
  }
  current = report;
  $("message").textContent = note || "";
  drawQuiver(report);
  drawComplex(report);
  $("summary").textContent = summarize(report);
  const leaves = $("leaves");
  leaves.innerHTML = "";
  if (report.algebra.n < 3 || report.resolution_quiver.leaves.length === 0) {
    leaves.textContent = "No leaf available (needs a leaf and at least 3 vertices).";
    return;
  }
  for (const leaf of report.resolution_quiver.leaves) {
    const b = document.createElement("button");
    b.textContent = `leaf ${leaf}`;
    b.onclick = () => runUnamalgamate(leaf);
    leaves.appendChild(b);
  }
}

function runUnamalgamate(leaf) {
  const step = JSON.parse(unamalgamate(JSON.stringify(current.algebra), leaf));
  if (step.error) return show(step);
  const input = JSON.stringify(step.output);
  $("algebra").value = input;
  const dropped = step.eliminated.map((e) => e.relation).length;
  show(step.analysis, `Removed leaf ${leaf}: raw relations ${step.raw_words.join(", ")}; ${dropped} redundant dropped; checks ${JSON.stringify(step.checks)}`);
}

await init();
$("analyze").onclick = () => show(JSON.parse(analyze($("algebra").value)));
$("rad").onclick = () => {
  const report = JSON.parse(rad_power(Number($("rad-n").value), Number($("rad-l").value)));
  if (!report.error) $("algebra").value = JSON.stringify(report.algebra);
  show(report);
};
show(JSON.parse(analyze($("algebra").value)));
