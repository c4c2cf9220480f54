// Replay core: the derived view state is a pure fold of events[0..cursor].
//
// The viewer performs no quantum simulation; everything it shows is read off
// the event stream. stepForward applies one event incrementally, and the
// invariant (tested over the shipped traces) is that the incremental path
// always equals a from-scratch fold at the same cursor.

import { TraceDoc, TraceEvent } from "./types.js";

export type QubitPhase = "live" | "measured" | "lost";

export interface QubitView {
  id: number;
  phase: QubitPhase;
  /** Node currently (or last) holding the qubit. */
  node: number;
  /** Set while the qubit is in transit on a quantum link. */
  flight: { src: number; dst: number; sentAt: number } | null;
  outcome: number | null;
  /** seq numbers of the events that touched this qubit. */
  history: number[];
}

export interface Derived {
  cursor: number;
  /** Time of the last applied event (0 before any). */
  tView: number;
  qubits: Map<number, QubitView>;
  /** Latest multi-qubit entanglement partition. */
  groups: number[][];
  trial: number;
  /** Humanized log lines, one per applied event. */
  log: string[];
}

export interface ReplayState {
  doc: TraceDoc;
  derived: Derived;
  playing: boolean;
  speed: number;
  /** qsend seq -> arrival time (qrecv or qlost), for transit interpolation. */
  arrivals: Map<number, number>;
}

export function initialDerived(): Derived {
  return {
    cursor: 0,
    tView: 0,
    qubits: new Map(),
    groups: [],
    trial: 0,
    log: [],
  };
}

function cloneDerived(d: Derived): Derived {
  const qubits = new Map<number, QubitView>();
  for (const [id, q] of d.qubits) {
    qubits.set(id, { ...q, flight: q.flight ? { ...q.flight } : null, history: [...q.history] });
  }
  return {
    cursor: d.cursor,
    tView: d.tView,
    qubits,
    groups: d.groups.map((g) => [...g]),
    trial: d.trial,
    log: [...d.log],
  };
}

function touch(d: Derived, qubit: number, seq: number): QubitView {
  const q = d.qubits.get(qubit);
  if (q === undefined) throw new Error(`event ${seq} touches unknown qubit ${qubit}`);
  q.history.push(seq);
  return q;
}

const fmtMs = (t: number) => `${(t / 1e6).toFixed(3)} ms`;

export function describeEvent(doc: TraceDoc, ev: TraceEvent): string {
  const label = (id: number) => doc.topology.nodes[id]?.label ?? `node${id}`;
  switch (ev.type) {
    case "qubit_create":
      return `qubit ${ev.qubit} created at ${label(ev.node)}`;
    case "gate":
      return `${ev.name} on qubit${ev.qubits.length > 1 ? "s" : ""} ${ev.qubits.join(", ")}`;
    case "measure":
      return `measure qubit ${ev.qubit} in ${ev.basis} -> ${ev.outcome}`;
    case "noise":
      return `${ev.kind}(p=${ev.p}) on qubit ${ev.qubit}: ${ev.effect}`;
    case "qsend":
      return `qubit ${ev.qubit}: ${label(ev.src)} -> ${label(ev.dst)} (sent)`;
    case "qrecv":
      return `qubit ${ev.qubit}: arrived at ${label(ev.dst)}`;
    case "qlost":
      return `qubit ${ev.qubit}: lost on ${label(ev.src)} -> ${label(ev.dst)}`;
    case "csend":
      return `datagram '${ev.tag}' ${label(ev.src)} -> ${label(ev.dst)} (${atob(ev.payload_b64).length} B)`;
    case "crecv":
      return `datagram '${ev.tag}' delivered to ${label(ev.dst)}`;
    case "egroup":
      return ev.groups.length === 0
        ? "entanglement groups: none"
        : `entanglement groups: ${ev.groups.map((g) => `{${g.join(",")}}`).join(" ")}`;
    case "trial_boundary":
      return `--- trial ${ev.trial} ---`;
    case "note":
      return ev.text;
  }
}

/** Apply one event to a copy of the derived state (pure). */
export function applyEvent(doc: TraceDoc, d: Derived, ev: TraceEvent): Derived {
  const out = cloneDerived(d);
  out.cursor += 1;
  out.tView = ev.t_ns;
  out.log.push(`[${fmtMs(ev.t_ns)}] ${describeEvent(doc, ev)}`);
  switch (ev.type) {
    case "qubit_create":
      out.qubits.set(ev.qubit, {
        id: ev.qubit,
        phase: "live",
        node: ev.node,
        flight: null,
        outcome: null,
        history: [ev.seq],
      });
      break;
    case "gate":
      for (const q of ev.qubits) touch(out, q, ev.seq);
      break;
    case "measure": {
      const q = touch(out, ev.qubit, ev.seq);
      q.phase = "measured";
      q.outcome = ev.outcome;
      break;
    }
    case "noise":
      touch(out, ev.qubit, ev.seq);
      break;
    case "qsend": {
      const q = touch(out, ev.qubit, ev.seq);
      q.flight = { src: ev.src, dst: ev.dst, sentAt: ev.t_ns };
      break;
    }
    case "qrecv": {
      const q = touch(out, ev.qubit, ev.seq);
      q.flight = null;
      q.node = ev.dst;
      break;
    }
    case "qlost": {
      const q = touch(out, ev.qubit, ev.seq);
      q.flight = null;
      q.phase = "lost";
      break;
    }
    case "egroup":
      out.groups = ev.groups.map((g) => [...g]);
      break;
    case "trial_boundary":
      out.trial = ev.trial;
      break;
    case "csend":
    case "crecv":
    case "note":
      break;
  }
  return out;
}

/** From-scratch fold of events[0..cursor). */
export function foldTo(doc: TraceDoc, cursor: number): Derived {
  let d = initialDerived();
  const end = Math.max(0, Math.min(cursor, doc.events.length));
  for (let i = 0; i < end; i++) {
    d = applyEvent(doc, d, doc.events[i]);
  }
  return d;
}

function indexArrivals(doc: TraceDoc): Map<number, number> {
  const arrivals = new Map<number, number>();
  const pending = new Map<number, number>(); // qubit -> qsend seq
  for (const ev of doc.events) {
    if (ev.type === "qsend") {
      pending.set(ev.qubit, ev.seq);
    } else if (ev.type === "qrecv" || ev.type === "qlost") {
      const sendSeq = pending.get(ev.qubit);
      if (sendSeq !== undefined) {
        arrivals.set(sendSeq, ev.t_ns);
        pending.delete(ev.qubit);
      }
    }
  }
  return arrivals;
}

export function loadReplay(doc: TraceDoc): ReplayState {
  return {
    doc,
    derived: initialDerived(),
    playing: false,
    speed: 1,
    arrivals: indexArrivals(doc),
  };
}

export function stepForward(state: ReplayState): void {
  const { doc, derived } = state;
  if (derived.cursor < doc.events.length) {
    state.derived = applyEvent(doc, derived, doc.events[derived.cursor]);
  }
}

export function stepBack(state: ReplayState): void {
  if (state.derived.cursor > 0) {
    state.derived = foldTo(state.doc, state.derived.cursor - 1);
  }
}

/** Jump to the last event with t_ns <= t (clamping at the ends). */
export function seek(state: ReplayState, t: number): void {
  const events = state.doc.events;
  let cursor = 0;
  while (cursor < events.length && events[cursor].t_ns <= t) cursor++;
  state.derived = foldTo(state.doc, cursor);
  state.derived.tView = Math.max(t, 0);
}

export function totalTime(doc: TraceDoc): number {
  const events = doc.events;
  return events.length === 0 ? 0 : events[events.length - 1].t_ns;
}

/**
 * Fraction of the way along its link for an in-flight qubit at render time
 * (linear interpolation between qsend and arrival).
 */
export function flightFraction(state: ReplayState, q: QubitView, tRender: number): number {
  if (q.flight === null) return 0;
  const sendSeq = q.history[q.history.length - 1];
  const arriveAt = state.arrivals.get(sendSeq);
  if (arriveAt === undefined || arriveAt <= q.flight.sentAt) return 1;
  const f = (tRender - q.flight.sentAt) / (arriveAt - q.flight.sentAt);
  return Math.min(Math.max(f, 0), 1);
}
