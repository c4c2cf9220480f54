// SVG rendering of the topology, qubit glyphs, and entanglement overlay.
// Pure DOM construction from (ReplayState, render time, selection); no state.

import { Layout, Point, VIEW } from "./layout.js";
import { flightFraction, QubitView, ReplayState } from "./replay.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const QUBIT_COLORS = [
  "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231",
  "#911eb4", "#42d4f4", "#f032e6", "#bfef45", "#469990",
];

const GROUP_COLORS = ["#9b59b6", "#2980b9", "#27ae60", "#d35400", "#c0392b"];

function el(name: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, String(v));
  return node;
}

function lerp(a: Point, b: Point, f: number): Point {
  return { x: a.x + (b.x - a.x) * f, y: a.y + (b.y - a.y) * f };
}

/** Place each visible qubit glyph: around its node, or along its link. */
export function glyphPositions(
  state: ReplayState,
  layout: Layout,
  tRender: number,
): Map<number, Point> {
  const positions = new Map<number, Point>();
  const perNode = new Map<number, QubitView[]>();
  for (const q of state.derived.qubits.values()) {
    if (q.phase !== "live") continue;
    if (q.flight !== null) {
      const from = layout.get(q.flight.src);
      const to = layout.get(q.flight.dst);
      if (from && to) {
        positions.set(q.id, lerp(from, to, flightFraction(state, q, tRender)));
      }
    } else {
      const group = perNode.get(q.node) ?? [];
      group.push(q);
      perNode.set(q.node, group);
    }
  }
  for (const [node, qubits] of perNode) {
    const center = layout.get(node);
    if (!center) continue;
    qubits.forEach((q, i) => {
      const angle = (2 * Math.PI * i) / Math.max(qubits.length, 1) - Math.PI / 2;
      const r = qubits.length > 1 ? 24 : 22;
      positions.set(q.id, {
        x: center.x + r * Math.cos(angle),
        y: center.y + r * Math.sin(angle),
      });
    });
  }
  return positions;
}

export interface RenderOptions {
  selectedQubit: number | null;
  onSelectQubit: (id: number | null) => void;
}

export function renderScene(
  svg: SVGSVGElement,
  state: ReplayState,
  layout: Layout,
  tRender: number,
  options: RenderOptions,
): void {
  svg.innerHTML = "";
  svg.setAttribute("viewBox", `0 0 ${VIEW.width} ${VIEW.height}`);
  const topo = state.doc.topology;

  // Classical links under quantum links, both under nodes.
  for (const link of topo.clinks) {
    const a = layout.get(link.a)!;
    const b = layout.get(link.b)!;
    svg.appendChild(
      el("line", {
        x1: a.x, y1: a.y, x2: b.x, y2: b.y,
        stroke: "#95a5a6", "stroke-width": 2, "stroke-dasharray": "6 5",
      }),
    );
  }
  for (const link of topo.qlinks) {
    const a = layout.get(link.a)!;
    const b = layout.get(link.b)!;
    svg.appendChild(
      el("line", {
        x1: a.x, y1: a.y, x2: b.x, y2: b.y,
        stroke: "#8e44ad", "stroke-width": 4, opacity: 0.75,
      }),
    );
  }

  const positions = glyphPositions(state, layout, tRender);

  // Entanglement overlay: clique edges inside each group.
  const selected = options.selectedQubit;
  const selectedGroup =
    selected === null
      ? null
      : state.derived.groups.find((g) => g.includes(selected)) ?? null;
  state.derived.groups.forEach((group, gi) => {
    const color = GROUP_COLORS[gi % GROUP_COLORS.length];
    const emphasized = selectedGroup !== null && group === selectedGroup;
    for (let i = 0; i < group.length; i++) {
      for (let j = i + 1; j < group.length; j++) {
        const a = positions.get(group[i]);
        const b = positions.get(group[j]);
        if (!a || !b) continue;
        svg.appendChild(
          el("line", {
            x1: a.x, y1: a.y, x2: b.x, y2: b.y,
            stroke: color,
            "stroke-width": emphasized ? 3.5 : 2,
            "stroke-dasharray": "3 3",
            opacity: emphasized ? 0.95 : 0.6,
          }),
        );
      }
    }
  });

  for (const node of topo.nodes) {
    const p = layout.get(node.id)!;
    svg.appendChild(
      el("circle", { cx: p.x, cy: p.y, r: 16, fill: "#ecf0f1", stroke: "#2c3e50", "stroke-width": 2 }),
    );
    const text = el("text", {
      x: p.x, y: p.y + 32, "text-anchor": "middle",
      "font-size": 12, fill: "#2c3e50",
    });
    text.textContent = node.label;
    svg.appendChild(text);
  }

  for (const [id, p] of positions) {
    const isSelected = selected === id;
    const glyph = el("circle", {
      cx: p.x, cy: p.y, r: isSelected ? 9 : 7,
      fill: QUBIT_COLORS[id % QUBIT_COLORS.length],
      stroke: isSelected ? "#2c3e50" : "#ffffff",
      "stroke-width": isSelected ? 3 : 1.5,
      cursor: "pointer",
    });
    glyph.addEventListener("click", (ev) => {
      ev.stopPropagation();
      options.onSelectQubit(isSelected ? null : id);
    });
    const title = el("title", {});
    title.textContent = `qubit ${id}`;
    glyph.appendChild(title);
    svg.appendChild(glyph);
  }

  svg.onclick = () => options.onSelectQubit(null);
}

export function renderGroupsPanel(
  container: HTMLElement,
  state: ReplayState,
  options: RenderOptions,
): void {
  container.innerHTML = "";
  const groups = state.derived.groups;
  if (groups.length === 0) {
    const empty = document.createElement("p");
    empty.className = "muted";
    empty.textContent = "no multi-qubit entangled groups";
    container.appendChild(empty);
    return;
  }
  groups.forEach((group, gi) => {
    const row = document.createElement("div");
    row.className = "group-row";
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = GROUP_COLORS[gi % GROUP_COLORS.length];
    row.appendChild(swatch);
    const label = document.createElement("span");
    label.textContent = `${group.length} qubits: {${group.join(", ")}}`;
    row.appendChild(label);
    if (options.selectedQubit !== null && group.includes(options.selectedQubit)) {
      row.classList.add("selected");
    }
    container.appendChild(row);
  });
}

export function renderInspector(
  container: HTMLElement,
  state: ReplayState,
  selectedQubit: number | null,
): void {
  container.innerHTML = "";
  if (selectedQubit === null) {
    const hint = document.createElement("p");
    hint.className = "muted";
    hint.textContent = "click a qubit to inspect its history";
    container.appendChild(hint);
    return;
  }
  const q = state.derived.qubits.get(selectedQubit);
  if (!q) return;
  const head = document.createElement("h3");
  const where =
    q.flight !== null
      ? "in flight"
      : `at ${state.doc.topology.nodes[q.node]?.label ?? q.node}`;
  head.textContent = `qubit ${q.id} (${q.phase}${q.outcome !== null ? `=${q.outcome}` : ""}, ${where})`;
  container.appendChild(head);
  const list = document.createElement("ul");
  const bySeq = new Map(state.doc.events.map((e) => [e.seq, e]));
  for (const seq of q.history) {
    const ev = bySeq.get(seq);
    if (!ev) continue;
    const item = document.createElement("li");
    item.textContent = state.derived.log[state.doc.events.indexOf(ev)] ?? `event ${seq}`;
    list.appendChild(item);
  }
  container.appendChild(list);
}
