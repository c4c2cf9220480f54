"""Run traces: schema, emission, deterministic JSON serialization, validation.

A trace is one JSON document per run: meta + topology + a time-ordered event
timeline. The byte layout is part of the external contract (the replay viewer
consumes it), so serialization fixes key order and float formatting; two runs
with the same seed produce byte-identical files.
"""

from __future__ import annotations

import base64
import json
from dataclasses import dataclass, field
from typing import Any, BinaryIO

FORMAT_VERSION = "1"

EVENT_TYPES = (
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
)

# Required payload keys per event type (exact: no extras, none missing).
PAYLOAD_FIELDS = {
    "qubit_create": ("node", "qubit"),
    "gate": ("name", "qubits"),
    "measure": ("qubit", "basis", "outcome"),
    "noise": ("qubit", "kind", "p", "effect"),
    "qsend": ("qubit", "src", "dst"),
    "qrecv": ("qubit", "src", "dst"),
    "qlost": ("qubit", "src", "dst"),
    "csend": ("src", "dst", "payload_b64", "tag"),
    "crecv": ("src", "dst", "payload_b64", "tag"),
    "egroup": ("groups",),
    "trial_boundary": ("trial",),
    "note": ("text",),
}

# Recorded in meta so every file names the channel conventions it was run with.
NOISE_PARAMETERIZATION = {
    "depolarizing": "pauli mix (1-3p/4, p/4, p/4, p/4); p = full replacement probability",
    "dephasing": "rho -> (1-p) rho + p Z rho Z",
    "loss": "qubit dropped with probability p on arrival",
}


@dataclass
class TraceDoc:
    meta: dict[str, Any]
    topology: dict[str, list] = field(
        default_factory=lambda: {"nodes": [], "qlinks": [], "clinks": []}
    )
    events: list[dict[str, Any]] = field(default_factory=list)
    _next_seq: int = 0

    @classmethod
    def new(cls, backend: str, seed: int, scenario: str, config: dict | None = None) -> "TraceDoc":
        meta = {
            "format_version": FORMAT_VERSION,
            "backend": backend,
            "seed": seed,
            "scenario": scenario,
            "noise_parameterization": dict(NOISE_PARAMETERIZATION),
        }
        if config is not None:
            meta["config"] = config
        return cls(meta=meta)

    # -- topology ---------------------------------------------------------

    def add_node(self, node_id: int, label: str) -> None:
        self.topology["nodes"].append({"id": node_id, "label": label})

    def add_qlink(self, a: int, b: int, delay_ns: int, qmaps: list[dict]) -> None:
        self.topology["qlinks"].append(
            {"a": a, "b": b, "delay_ns": delay_ns, "qmaps": qmaps}
        )

    def add_clink(self, a: int, b: int, delay_ns: int) -> None:
        self.topology["clinks"].append({"a": a, "b": b, "delay_ns": delay_ns})

    # -- events -----------------------------------------------------------

    def emit(self, event_type: str, t_ns: int, /, **payload) -> None:
        if event_type not in EVENT_TYPES:
            raise ValueError(f"unknown trace event type {event_type!r}")
        event = {"t_ns": t_ns, "seq": self._next_seq, "type": event_type}
        for key in PAYLOAD_FIELDS[event_type]:
            event[key] = payload.pop(key)
        if payload:
            raise ValueError(f"extra payload for {event_type}: {sorted(payload)}")
        self._next_seq += 1
        self.events.append(event)

    def to_obj(self) -> dict:
        return {"meta": self.meta, "topology": self.topology, "events": self.events}


def encode_payload(payload: bytes) -> str:
    return base64.b64encode(payload).decode("ascii")


def decode_payload(text: str) -> bytes:
    return base64.b64decode(text.encode("ascii"))


# -- serialization ---------------------------------------------------------


def _write_value(out: list[str], value: Any) -> None:
    if isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        # 17 significant digits: lossless round-trip, stable bytes.
        out.append(format(value, ".17g"))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=True))
    elif isinstance(value, dict):
        out.append("{")
        for i, (k, v) in enumerate(value.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(k), ensure_ascii=True))
            out.append(":")
            _write_value(out, v)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, v in enumerate(value):
            if i:
                out.append(",")
            _write_value(out, v)
        out.append("]")
    elif value is None:
        out.append("null")
    else:
        raise TypeError(f"unserializable value of type {type(value).__name__}")


def dumps(doc: TraceDoc) -> str:
    """Serialize with fixed key order and fixed float formatting."""
    out: list[str] = []
    _write_value(out, doc.to_obj())
    out.append("\n")
    return "".join(out)


def write_json(doc: TraceDoc, destination: BinaryIO) -> None:
    destination.write(dumps(doc).encode("utf-8"))


# -- validation -------------------------------------------------------------


def validate(data: bytes | str) -> list[str]:
    """Check schema, ordering and referential integrity; returns violations."""
    violations: list[str] = []
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        return [f"not valid JSON: {exc}"]

    if not isinstance(obj, dict):
        return ["top level is not an object"]
    for section in ("meta", "topology", "events"):
        if section not in obj:
            violations.append(f"missing section {section!r}")
    if violations:
        return violations

    meta = obj["meta"]
    for key in ("format_version", "backend", "seed", "scenario", "noise_parameterization"):
        if key not in meta:
            violations.append(f"meta missing {key!r}")
    if meta.get("format_version") != FORMAT_VERSION:
        violations.append(
            f"unsupported format_version {meta.get('format_version')!r}"
        )

    topo = obj["topology"]
    node_ids = set()
    structural = [
        f"topology missing list {section!r}"
        for section in ("nodes", "qlinks", "clinks")
        if section not in topo or not isinstance(topo[section], list)
    ]
    if structural:
        return violations + structural
    for node in topo["nodes"]:
        if not isinstance(node.get("id"), int):
            violations.append(f"node without integer id: {node}")
        else:
            node_ids.add(node["id"])
    for kind, links in (("qlink", topo["qlinks"]), ("clink", topo["clinks"])):
        for link in links:
            for end in ("a", "b"):
                if link.get(end) not in node_ids:
                    violations.append(f"{kind} endpoint {link.get(end)} not a node")
            if not isinstance(link.get("delay_ns"), int) or link["delay_ns"] < 0:
                violations.append(f"{kind} has invalid delay_ns: {link}")
    for link in topo["qlinks"]:
        for qmap in link.get("qmaps", []):
            if qmap.get("kind") not in ("loss", "depolarizing", "dephasing"):
                violations.append(f"unknown qmap kind in {link}")
            p = qmap.get("p")
            if not isinstance(p, (int, float)) or not 0 <= p <= 1:
                violations.append(f"qmap probability out of range in {link}")

    prev_t, prev_seq = -1, -1
    for event in obj["events"]:
        seq = event.get("seq")
        where = f"event seq {seq}"
        etype = event.get("type")
        if etype not in EVENT_TYPES:
            violations.append(f"{where}: unknown type {etype!r}")
            continue
        if not isinstance(event.get("t_ns"), int) or not isinstance(seq, int):
            violations.append(f"{where}: t_ns/seq must be integers")
            continue
        if seq <= prev_seq:
            violations.append(f"{where}: seq not strictly increasing")
        if (event["t_ns"], seq) < (prev_t, prev_seq):
            violations.append(f"{where}: events out of (t_ns, seq) order")
        prev_t, prev_seq = event["t_ns"], seq
        expected = set(PAYLOAD_FIELDS[etype]) | {"t_ns", "seq", "type"}
        actual = set(event)
        if actual != expected:
            missing = expected - actual
            extra = actual - expected
            violations.append(
                f"{where}: payload mismatch for {etype}"
                + (f", missing {sorted(missing)}" if missing else "")
                + (f", extra {sorted(extra)}" if extra else "")
            )
            continue
        for end in ("src", "dst", "node"):
            if end in event and event[end] not in node_ids:
                violations.append(f"{where}: references unknown node {event[end]}")
    return violations
