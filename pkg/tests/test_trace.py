"""Trace document: emission counts, serialization determinism, validation."""

import json

import pytest

from qnetsim import trace as trace_mod
from qnetsim.network import Network
from qnetsim.protocols import ScenarioSpec, run_scenario
from qnetsim.trace import TraceDoc, decode_payload, dumps, validate


def run_bell_net(seed=0):
    net = Network("ket", seed=seed)
    a, b = net.create_node("A"), net.create_node("B")
    net.install_quantum_link(a, b)
    net.install_classical_link(a, b)

    def go():
        h0, h1 = net.create_bell_pair(a)
        net.send_qubit(a, h1, b)
        net.set_recv_callback(b, lambda q, frm: (net.measure(h0), net.measure(q)))

    net.schedule(0, go)
    net.run()
    return net


# -- emission ----------------------------------------------------------------


def test_bell_creation_event_sequence():
    net = Network("ket")
    a = net.create_node()
    net.create_bell_pair(a)
    types = [e["type"] for e in net.trace_doc().events]
    assert types == ["qubit_create", "qubit_create", "gate", "gate", "egroup"]
    egroup = net.trace_doc().events[-1]
    assert egroup["groups"] == [[0, 1]]


def test_teleportation_correction_payload_roundtrip():
    spec = ScenarioSpec(name="teleportation", trials=1, forced_rands=[0.25, 0.75])
    summary = run_scenario(spec)
    csends = [e for e in summary.trace.events if e["type"] == "csend"]
    assert len(csends) == 1
    assert csends[0]["tag"] == "corrections"
    assert decode_payload(csends[0]["payload_b64"]) == bytes([1, 0])
    # The X correction is skipped (b1=0) and the Z applied (b0=1).
    crecv_seq = next(e["seq"] for e in summary.trace.events if e["type"] == "crecv")
    post = [
        e["name"]
        for e in summary.trace.events
        if e["type"] == "gate" and e["seq"] > crecv_seq
    ]
    assert post == ["Z"]


def test_lost_qubit_has_qsend_qlost_but_no_qrecv():
    from qnetsim.noise import NoiseMap

    net = Network("ket", seed=1)
    a, b = net.create_node(), net.create_node()
    channel = net.install_quantum_link(a, b)
    channel.attach(NoiseMap("loss", 1.0))
    net.schedule(0, lambda: net.send_qubit(a, net.alloc_qubit(a), b))
    net.run()
    types = [e["type"] for e in net.trace_doc().events]
    assert types.count("qsend") == 1
    assert types.count("qlost") == 1
    assert types.count("qrecv") == 0


def test_gate_and_measure_counts_match_registry_activity():
    net = run_bell_net()
    events = net.trace_doc().events
    assert sum(1 for e in events if e["type"] == "gate") == 2  # H + CNOT
    assert sum(1 for e in events if e["type"] == "measure") == 2
    assert sum(1 for e in events if e["type"] == "qubit_create") == 2
    assert sum(1 for e in events if e["type"] == "qsend") == 1
    assert sum(1 for e in events if e["type"] == "qrecv") == 1


def test_egroup_fold_matches_registry_partition():
    net = run_bell_net()
    folded = []
    for e in net.trace_doc().events:
        if e["type"] == "egroup":
            folded = e["groups"]
    live_multi = [g for g in net.registry.entanglement_groups() if len(g) > 1]
    assert folded == live_multi == []


def test_egroup_fold_matches_registry_with_live_groups():
    # Leave several entangled clusters alive and one half-measured pair.
    net = Network("stab", seed=2)
    a = net.create_node()

    def go():
        for _ in range(2):
            net.create_bell_pair(a)
        trio = [net.alloc_qubit(a) for _ in range(3)]
        net.apply("H", [trio[0]])
        net.apply("CNOT", [trio[0], trio[1]])
        net.apply("CNOT", [trio[1], trio[2]])
        pair = net.create_bell_pair(a)
        net.measure(pair[0])

    net.schedule(0, go)
    net.run()
    folded = []
    for e in net.trace_doc().events:
        if e["type"] == "egroup":
            folded = e["groups"]
    live_multi = [g for g in net.registry.entanglement_groups() if len(g) > 1]
    assert folded == live_multi
    assert sorted(len(g) for g in folded) == [2, 2, 3]


# -- serialization ---------------------------------------------------------------


def test_setup_only_trace_is_valid_json_with_empty_events():
    net = Network("ket", seed=0)
    net.create_node("solo")
    payload = dumps(net.trace_doc())
    obj = json.loads(payload)
    assert obj["events"] == []
    assert validate(payload) == []


def test_same_seed_serializes_byte_identical():
    doc_a = run_bell_net(seed=3).trace_doc()
    doc_b = run_bell_net(seed=3).trace_doc()
    assert dumps(doc_a).encode() == dumps(doc_b).encode()


def test_probabilities_serialized_with_17_significant_digits():
    from qnetsim.noise import NoiseMap

    net = Network("ket", seed=0)
    a, b = net.create_node(), net.create_node()
    net.install_quantum_link(a, b).attach(NoiseMap("depolarizing", 0.2))
    text = dumps(net.trace_doc())
    assert "0.20000000000000001" in text
    assert json.loads(text)["topology"]["qlinks"][0]["qmaps"][0]["p"] == 0.2


def test_round_trip_preserves_structure():
    net = run_bell_net()
    doc = net.trace_doc()
    parsed = json.loads(dumps(doc))
    assert parsed == doc.to_obj()


def test_scenario_trace_validates():
    for name in ("bell_all_to_all", "teleportation", "ghz4", "cluster5"):
        summary = run_scenario(ScenarioSpec(name=name, trials=2, seed=1))
        assert validate(dumps(summary.trace)) == []


# -- validation ------------------------------------------------------------------


def valid_doc() -> dict:
    doc = TraceDoc.new("ket", 0, "adhoc")
    doc.add_node(0, "A")
    doc.emit("qubit_create", 0, node=0, qubit=0)
    return json.loads(dumps(doc))


def test_validate_flags_unknown_node_reference():
    obj = valid_doc()
    obj["events"][0]["node"] = 99
    violations = validate(json.dumps(obj))
    assert any("99" in v and "seq 0" in v for v in violations)


def test_validate_flags_out_of_order_events():
    obj = valid_doc()
    obj["events"] = [
        {"t_ns": 5, "seq": 0, "type": "note", "text": "later"},
        {"t_ns": 1, "seq": 1, "type": "note", "text": "earlier"},
    ]
    assert any("order" in v for v in validate(json.dumps(obj)))


def test_validate_flags_payload_shape():
    obj = valid_doc()
    del obj["events"][0]["qubit"]
    obj["events"][0]["bogus"] = 1
    violations = validate(json.dumps(obj))
    assert any("missing ['qubit']" in v for v in violations)
    assert any("extra ['bogus']" in v for v in violations)


def test_validate_flags_unknown_type_and_bad_version():
    obj = valid_doc()
    obj["events"][0]["type"] = "mystery"
    obj["meta"]["format_version"] = "2"
    violations = validate(json.dumps(obj))
    assert any("mystery" in v for v in violations)
    assert any("format_version" in v for v in violations)


def test_validate_rejects_garbage():
    assert validate(b"{not json") != []
    assert validate(b"[]") != []


def test_emit_rejects_unknown_type_and_bad_payload():
    doc = TraceDoc.new("ket", 0, "adhoc")
    with pytest.raises(ValueError):
        doc.emit("warp", 0)
    with pytest.raises(KeyError):
        doc.emit("gate", 0, name="H")  # missing qubits
    with pytest.raises(ValueError):
        doc.emit("note", 0, text="x", extra=1)
