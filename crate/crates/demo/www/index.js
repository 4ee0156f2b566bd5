import init, { extraction, bounds, intervals } from "./pkg/twdl_demo.js";

const SVG = "http://www.w3.org/2000/svg";
const PALETTE = ["#999", "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

function el(name, attrs, parent) {
  const e = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  if (parent) parent.appendChild(e);
  return e;
}

// Blank fields are -1, which the bindings read as "not given".
function field(section, name) {
  const v = section.querySelector(`[name=${name}]`).value;
  return v === "" ? -1 : Number(v);
}

const count = (section, name) => Math.max(0, field(section, name));

function run(section, fn) {
  const out = section.querySelector(".out");
  const svg = section.querySelector("svg");
  out.classList.remove("err");
  try {
    fn(svg, out);
  } catch (e) {
    svg.replaceChildren();
    out.classList.add("err");
    out.textContent = String(e.message ?? e);
  }
}

// Vertices on a circle; colour is the colour class, a ring marks the chosen set.
function drawExtraction(svg, out, r) {
  svg.replaceChildren();
  const w = +svg.getAttribute("width"), h = +svg.getAttribute("height");
  const cx = w / 2, cy = h / 2, rad = Math.min(w, h) / 2 - 24;
  const pos = [...Array(r.n).keys()].map(i => {
    const a = (2 * Math.PI * i) / r.n - Math.PI / 2;
    return [cx + rad * Math.cos(a), cy + rad * Math.sin(a)];
  });
  const chosen = new Set(r.selected);
  for (const [u, v] of r.edges) {
    const inside = chosen.has(u) && chosen.has(v);
    el("line", { x1: pos[u][0], y1: pos[u][1], x2: pos[v][0], y2: pos[v][1],
      stroke: inside ? "#333" : "#ccc", "stroke-width": inside ? 2 : 1 }, svg);
  }
  pos.forEach(([x, y], i) => {
    const g = el("g", {}, svg);
    el("circle", { cx: x, cy: y, r: 9, fill: PALETTE[r.coloring[i] % PALETTE.length],
      stroke: chosen.has(i) ? "#000" : "none", "stroke-width": 3 }, g);
    el("title", {}, g).textContent = `v${i}: degree ${r.degrees[i]}, colour ${r.coloring[i]}`;
  });
  const lines = [
    `n = ${r.n}, |E| = ${r.edges.length}${r.r != null ? `, r = ${r.r}` : ""}`,
    r.low_degree ? `vertices within the degree cap: ${r.low_degree.length}` : "no degree cap",
    `chosen: ${r.selected.length} vertices, induced treewidth certificate ${r.witness_width}${r.guaranteed ? "" : " (size guarantee does not apply)"}`,
    ...r.bounds.map(b => `${b.name}: ${b.value}`),
  ];
  out.textContent = lines.join("\n");
}

function drawBounds(svg, out, r) {
  svg.replaceChildren();
  const w = +svg.getAttribute("width"), h = +svg.getAttribute("height"), pad = 36;
  const series = [["tset", "#1f77b4"], ["kset_lower", "#2ca02c"], ["dtset_lower", "#d62728"], ["dtset_upper", "#9467bd"]];
  const rows = r.rows;
  const ymax = Math.max(1, ...rows.flatMap(row => series.map(([k]) => row[k] ?? 0)));
  const nmin = rows[0].n, nmax = rows[rows.length - 1].n;
  const X = n => pad + ((n - nmin) / Math.max(1, nmax - nmin)) * (w - 2 * pad);
  const Y = v => h - pad - (v / ymax) * (h - 2 * pad);
  el("line", { x1: pad, y1: h - pad, x2: w - pad, y2: h - pad, stroke: "#888" }, svg);
  el("line", { x1: pad, y1: pad, x2: pad, y2: h - pad, stroke: "#888" }, svg);
  el("text", { x: w - pad, y: h - 8, "text-anchor": "end" }, svg).textContent = `n = ${nmax}`;
  el("text", { x: 4, y: pad - 8 }, svg).textContent = ymax.toFixed(1);
  series.forEach(([key, colour], i) => {
    const pts = rows.filter(row => row[key] != null).map(row => `${X(row.n)},${Y(row[key])}`);
    if (pts.length) el("polyline", { points: pts.join(" "), fill: "none", stroke: colour, "stroke-width": 2 }, svg);
    el("text", { x: pad + 10, y: pad + 16 * i, fill: colour }, svg).textContent = key;
  });
  const last = rows[rows.length - 1];
  out.textContent = series.map(([k]) => `${k}(${last.n}) = ${last[k] == null ? "n/a" : last[k].toFixed(3)}`).join("\n");
}

// One bar per interval, stacked greedily into rows; the greedy set is filled,
// the oracle set outlined, and swaps listed below.
function drawIntervals(svg, out, r) {
  svg.replaceChildren();
  const w = +svg.getAttribute("width"), pad = 20;
  const xs = r.intervals.flat();
  const lo = Math.min(...xs), hi = Math.max(...xs);
  const X = x => pad + ((x - lo) / (hi - lo)) * (w - 2 * pad);
  const order = [...r.intervals.keys()].sort((a, b) => r.intervals[a][0] - r.intervals[b][0]);
  const rowEnd = [];
  const row = [];
  for (const v of order) {
    let i = rowEnd.findIndex(e => e < r.intervals[v][0]);
    if (i < 0) { i = rowEnd.length; rowEnd.push(0); }
    rowEnd[i] = r.intervals[v][1];
    row[v] = i;
  }
  svg.setAttribute("height", Math.max(120, 2 * pad + 22 * rowEnd.length));
  const greedy = new Set(r.greedy), oracle = new Set(r.oracle), swapped = new Set(r.swapped);
  r.intervals.forEach(([a, b], v) => {
    const g = el("g", {}, svg);
    const high = r.degrees[v] > 2 * r.k;
    el("rect", { x: X(a), y: pad + 22 * row[v], width: Math.max(2, X(b) - X(a)), height: 14, rx: 3,
      fill: greedy.has(v) ? "#2ca02c" : swapped.has(v) ? "#98df8a" : "#ddd",
      stroke: oracle.has(v) ? (high ? "#d62728" : "#000") : "none", "stroke-width": 2 }, g);
    el("title", {}, g).textContent = `v${v}: [${a.toFixed(3)}, ${b.toFixed(3)}], degree ${r.degrees[v]}`;
  });
  const deg = s => Math.max(0, ...s.map(v => r.degrees[v]));
  out.textContent = [
    `alpha = ${r.oracle.length}; greedy set max degree ${deg(r.greedy)} (cap 2k = ${2 * r.k})`,
    `exhaustive set max degree ${deg(r.oracle)}; after swaps ${deg(r.swapped)}`,
    r.swaps.length ? `swaps: ${r.swaps.map(([a, b]) => `v${a} -> v${b}`).join(", ")}` : "no swaps needed",
  ].join("\n");
}

await init();

const ex = document.getElementById("extract");
ex.querySelector("button").onclick = () => run(ex, (svg, out) => {
  const family = ex.querySelector("[name=family]").value;
  const r = JSON.parse(extraction(family, field(ex, "n"), count(ex, "k"), field(ex, "d"), field(ex, "s"),
    field(ex, "n0"), count(ex, "t"), field(ex, "dmax"), count(ex, "seed")));
  drawExtraction(svg, out, r);
});

const bd = document.getElementById("bounds");
bd.querySelector("button").onclick = () => run(bd, (svg, out) => {
  drawBounds(svg, out, JSON.parse(bounds(count(bd, "k"), count(bd, "t"), count(bd, "d"), count(bd, "nmax"))));
});

const iv = document.getElementById("intervals");
iv.querySelector("button").onclick = () => run(iv, (svg, out) => {
  drawIntervals(svg, out, JSON.parse(intervals(count(iv, "n"), count(iv, "k"), count(iv, "seed"))));
});

for (const s of [ex, bd, iv]) s.querySelector("button").click();
