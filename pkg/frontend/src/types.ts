// Trace document types, mirroring the simulator's JSON schema (format "1").

export interface QMapInfo {
  kind: string;
  p: number;
}

export interface NodeInfo {
  id: number;
  label: string;
}

export interface QLinkInfo {
  a: number;
  b: number;
  delay_ns: number;
  qmaps: QMapInfo[];
}

export interface CLinkInfo {
  a: number;
  b: number;
  delay_ns: number;
}

export interface Topology {
  nodes: NodeInfo[];
  qlinks: QLinkInfo[];
  clinks: CLinkInfo[];
}

export interface TraceMeta {
  format_version: string;
  backend: string;
  seed: number;
  scenario: string;
  noise_parameterization: Record<string, string>;
  config?: Record<string, unknown>;
}

interface EventBase {
  t_ns: number;
  seq: number;
}

export type TraceEvent = EventBase &
  (
    | { type: "qubit_create"; node: number; qubit: number }
    | { type: "gate"; name: string; qubits: number[] }
    | { type: "measure"; qubit: number; basis: string; outcome: number }
    | { type: "noise"; qubit: number; kind: string; p: number; effect: string }
    | { type: "qsend"; qubit: number; src: number; dst: number }
    | { type: "qrecv"; qubit: number; src: number; dst: number }
    | { type: "qlost"; qubit: number; src: number; dst: number }
    | { type: "csend"; src: number; dst: number; payload_b64: string; tag: string }
    | { type: "crecv"; src: number; dst: number; payload_b64: string; tag: string }
    | { type: "egroup"; groups: number[][] }
    | { type: "trial_boundary"; trial: number }
    | { type: "note"; text: string }
  );

export interface TraceDoc {
  meta: TraceMeta;
  topology: Topology;
  events: TraceEvent[];
}

export const EVENT_TYPES = [
  "qubit_create",
  "gate",
  "measure",
  "noise",
  "qsend",
  "qrecv",
  "qlost",
  "csend",
  "crecv",
  "egroup",
  "trial_boundary",
  "note",
] as const;

export const PAYLOAD_FIELDS: Record<string, string[]> = {
  qubit_create: ["node", "qubit"],
  gate: ["name", "qubits"],
  measure: ["qubit", "basis", "outcome"],
  noise: ["qubit", "kind", "p", "effect"],
  qsend: ["qubit", "src", "dst"],
  qrecv: ["qubit", "src", "dst"],
  qlost: ["qubit", "src", "dst"],
  csend: ["src", "dst", "payload_b64", "tag"],
  crecv: ["src", "dst", "payload_b64", "tag"],
  egroup: ["groups"],
  trial_boundary: ["trial"],
  note: ["text"],
};
