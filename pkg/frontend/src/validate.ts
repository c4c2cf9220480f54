// Trace validation, matching the simulator's loader rules: schema shape,
// (t_ns, seq) ordering, and referential integrity against the topology.
// An invalid trace is reported in full and never partially rendered.

import { EVENT_TYPES, PAYLOAD_FIELDS, TraceDoc } from "./types.js";

const KNOWN_TYPES = new Set<string>(EVENT_TYPES);
const QMAP_KINDS = new Set(["loss", "depolarizing", "dephasing"]);

export function parseTrace(text: string): { doc: TraceDoc | null; violations: string[] } {
  let obj: unknown;
  try {
    obj = JSON.parse(text);
  } catch (err) {
    return { doc: null, violations: [`not valid JSON: ${String(err)}`] };
  }
  const violations = validateObject(obj);
  return violations.length === 0
    ? { doc: obj as TraceDoc, violations: [] }
    : { doc: null, violations };
}

export function validateObject(obj: unknown): string[] {
  const violations: string[] = [];
  if (typeof obj !== "object" || obj === null || Array.isArray(obj)) {
    return ["top level is not an object"];
  }
  const doc = obj as Record<string, unknown>;
  for (const section of ["meta", "topology", "events"]) {
    if (!(section in doc)) violations.push(`missing section '${section}'`);
  }
  if (violations.length > 0) return violations;

  const meta = doc.meta as Record<string, unknown>;
  for (const key of ["format_version", "backend", "seed", "scenario", "noise_parameterization"]) {
    if (!(key in meta)) violations.push(`meta missing '${key}'`);
  }
  if (meta.format_version !== "1") {
    violations.push(`unsupported format_version '${String(meta.format_version)}'`);
  }

  const topo = doc.topology as Record<string, unknown>;
  const structural: string[] = [];
  for (const section of ["nodes", "qlinks", "clinks"]) {
    if (!Array.isArray(topo[section])) structural.push(`topology missing list '${section}'`);
  }
  if (structural.length > 0) return violations.concat(structural);

  const nodeIds = new Set<number>();
  for (const node of topo.nodes as Record<string, unknown>[]) {
    if (typeof node.id !== "number") {
      violations.push(`node without integer id: ${JSON.stringify(node)}`);
    } else {
      nodeIds.add(node.id);
    }
  }
  for (const [kind, links] of [
    ["qlink", topo.qlinks],
    ["clink", topo.clinks],
  ] as const) {
    for (const link of links as Record<string, unknown>[]) {
      for (const end of ["a", "b"]) {
        if (!nodeIds.has(link[end] as number)) {
          violations.push(`${kind} endpoint ${String(link[end])} not a node`);
        }
      }
      if (typeof link.delay_ns !== "number" || link.delay_ns < 0) {
        violations.push(`${kind} has invalid delay_ns: ${JSON.stringify(link)}`);
      }
    }
  }
  for (const link of topo.qlinks as Record<string, unknown>[]) {
    for (const qmap of (link.qmaps as Record<string, unknown>[]) ?? []) {
      if (!QMAP_KINDS.has(qmap.kind as string)) {
        violations.push(`unknown qmap kind in ${JSON.stringify(link)}`);
      }
      const p = qmap.p;
      if (typeof p !== "number" || p < 0 || p > 1) {
        violations.push(`qmap probability out of range in ${JSON.stringify(link)}`);
      }
    }
  }

  let prevT = -1;
  let prevSeq = -1;
  for (const raw of doc.events as Record<string, unknown>[]) {
    const seq = raw.seq;
    const where = `event seq ${String(seq)}`;
    const etype = raw.type as string;
    if (!KNOWN_TYPES.has(etype)) {
      violations.push(`${where}: unknown type '${etype}'`);
      continue;
    }
    if (typeof raw.t_ns !== "number" || typeof seq !== "number") {
      violations.push(`${where}: t_ns/seq must be integers`);
      continue;
    }
    if (seq <= prevSeq) violations.push(`${where}: seq not strictly increasing`);
    if (raw.t_ns < prevT || (raw.t_ns === prevT && seq < prevSeq)) {
      violations.push(`${where}: events out of (t_ns, seq) order`);
    }
    prevT = raw.t_ns;
    prevSeq = seq;
    const expected = new Set([...PAYLOAD_FIELDS[etype], "t_ns", "seq", "type"]);
    const actual = new Set(Object.keys(raw));
    const missing = [...expected].filter((k) => !actual.has(k));
    const extra = [...actual].filter((k) => !expected.has(k));
    if (missing.length > 0 || extra.length > 0) {
      violations.push(
        `${where}: payload mismatch for ${etype}` +
          (missing.length ? `, missing [${missing.join(", ")}]` : "") +
          (extra.length ? `, extra [${extra.join(", ")}]` : ""),
      );
      continue;
    }
    for (const end of ["src", "dst", "node"]) {
      if (end in raw && !nodeIds.has(raw[end] as number)) {
        violations.push(`${where}: references unknown node ${String(raw[end])}`);
      }
    }
  }
  return violations;
}
