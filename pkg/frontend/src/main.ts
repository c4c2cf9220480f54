// Page wiring: trace selection, playback controls, timeline, panels.

import { demoTraces } from "./demo-traces.js";
import { Layout, layoutFor } from "./layout.js";
import {
  loadReplay,
  ReplayState,
  seek,
  stepBack,
  stepForward,
  totalTime,
} from "./replay.js";
import { renderGroupsPanel, renderInspector, renderScene } from "./render.js";
import { parseTrace } from "./validate.js";

const $ = <T extends HTMLElement>(id: string): T => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
};

const svg = $("scene") as unknown as SVGSVGElement;
const demoSelect = $<HTMLSelectElement>("demo-select");
const fileInput = $<HTMLInputElement>("file-input");
const errorPanel = $("error-panel");
const logPanel = $("event-log");
const groupsPanel = $("groups-panel");
const inspectorPanel = $("inspector");
const timeline = $<HTMLInputElement>("timeline");
const timeLabel = $("time-label");
const metaLabel = $("meta-label");
const speedSelect = $<HTMLSelectElement>("speed-select");
const playButton = $<HTMLButtonElement>("play");

let state: ReplayState | null = null;
let layout: Layout | null = null;
let selectedQubit: number | null = null;
let playClock = 0; // render time in sim ns during playback
let lastFrame = 0;

// Default pacing: a whole trace replays in about ten wall seconds.
const REPLAY_WALL_SECONDS = 10;

function fmt(t: number): string {
  return t >= 1e6 ? `${(t / 1e6).toFixed(3)} ms` : `${t} ns`;
}

function redraw(): void {
  if (!state || !layout) return;
  const tRender = state.playing ? playClock : state.derived.tView;
  renderScene(svg, state, layout, tRender, {
    selectedQubit,
    onSelectQubit: (id) => {
      selectedQubit = id;
      redraw();
    },
  });
  renderGroupsPanel(groupsPanel, state, {
    selectedQubit,
    onSelectQubit: () => undefined,
  });
  renderInspector(inspectorPanel, state, selectedQubit);

  logPanel.innerHTML = "";
  state.derived.log.slice(-200).forEach((line, i, shown) => {
    const div = document.createElement("div");
    div.textContent = line;
    if (i === shown.length - 1) div.className = "current";
    logPanel.appendChild(div);
  });
  logPanel.scrollTop = logPanel.scrollHeight;

  const total = totalTime(state.doc);
  timeline.max = String(total);
  timeline.value = String(Math.min(tRender, total));
  timeLabel.textContent =
    `event ${state.derived.cursor}/${state.doc.events.length} | t = ${fmt(tRender)}` +
    (state.derived.trial > 0 ? ` | trial ${state.derived.trial}` : "");
  playButton.textContent = state.playing ? "pause" : "play";
}

function loadFromText(name: string, text: string): void {
  const { doc, violations } = parseTrace(text);
  errorPanel.innerHTML = "";
  if (!doc) {
    state = null;
    layout = null;
    svg.innerHTML = "";
    logPanel.innerHTML = "";
    groupsPanel.innerHTML = "";
    inspectorPanel.innerHTML = "";
    const head = document.createElement("strong");
    head.textContent = `${name}: invalid trace (${violations.length} problem${violations.length > 1 ? "s" : ""})`;
    errorPanel.appendChild(head);
    const list = document.createElement("ul");
    for (const v of violations) {
      const item = document.createElement("li");
      item.textContent = v;
      list.appendChild(item);
    }
    errorPanel.appendChild(list);
    metaLabel.textContent = "";
    return;
  }
  state = loadReplay(doc);
  layout = layoutFor(doc.meta.scenario, doc.topology);
  selectedQubit = null;
  playClock = 0;
  metaLabel.textContent =
    `${doc.meta.scenario} | backend ${doc.meta.backend} | seed ${doc.meta.seed} | ` +
    `${doc.topology.nodes.length} nodes, ${doc.events.length} events`;
  redraw();
}

function togglePlay(): void {
  if (!state) return;
  state.playing = !state.playing;
  if (state.playing) {
    if (state.derived.cursor >= state.doc.events.length) {
      seek(state, 0);
      state.derived = { ...state.derived, tView: 0 };
    }
    playClock = state.derived.tView;
    lastFrame = performance.now();
    requestAnimationFrame(tick);
  }
  redraw();
}

function tick(now: number): void {
  if (!state || !state.playing) return;
  const total = Math.max(totalTime(state.doc), 1);
  const simPerWallMs = (total / (REPLAY_WALL_SECONDS * 1000)) * state.speed;
  playClock += (now - lastFrame) * simPerWallMs;
  lastFrame = now;
  const events = state.doc.events;
  while (state.derived.cursor < events.length && events[state.derived.cursor].t_ns <= playClock) {
    stepForward(state);
  }
  if (state.derived.cursor >= events.length) {
    state.playing = false;
    playClock = total;
  }
  redraw();
  if (state.playing) requestAnimationFrame(tick);
}

demoSelect.addEventListener("change", () => {
  const name = demoSelect.value;
  if (name && name in demoTraces) {
    loadFromText(name, demoTraces[name]);
  }
});

fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (file) loadFromText(file.name, await file.text());
});

$("step-back").addEventListener("click", () => {
  if (!state) return;
  state.playing = false;
  stepBack(state);
  redraw();
});

$("step-forward").addEventListener("click", () => {
  if (!state) return;
  state.playing = false;
  stepForward(state);
  redraw();
});

playButton.addEventListener("click", togglePlay);

timeline.addEventListener("input", () => {
  if (!state) return;
  state.playing = false;
  seek(state, Number(timeline.value));
  playClock = Number(timeline.value);
  redraw();
});

speedSelect.addEventListener("change", () => {
  if (state) state.speed = Number(speedSelect.value);
});

// Populate the demo dropdown and show the first trace immediately.
for (const name of Object.keys(demoTraces)) {
  const option = document.createElement("option");
  option.value = name;
  option.textContent = name;
  demoSelect.appendChild(option);
}
const first = Object.keys(demoTraces)[0];
if (first) {
  demoSelect.value = first;
  loadFromText(first, demoTraces[first]);
}
