"""GHZ-4 distribution over a star: ack-gated qubit hand-out, then Z readout.

The source prepares the 4-qubit GHZ state with a Hadamard followed by a CNOT
chain, then distributes qubits to three parties one at a time, waiting for a
one-byte acknowledgment datagram before sending the next. Once the last ack
arrives all four qubits are measured in Z; noiselessly the outcomes are
always all-equal with a 50/50 all-zeros branch.
"""

from __future__ import annotations

from .common import ScenarioSpec, ScenarioSummary, run_trials, summarize

ACK = bytes([0x01])


def aggregate_records(records: list[dict]) -> dict:
    completed = [r for r in records if not r.get("failed")]
    all_equal = sum(1 for r in completed if r["all_equal"])
    zeros = sum(1 for r in completed if all(o == 0 for o in r["outcomes"]))
    return {
        "completed": len(completed),
        "failed": len(records) - len(completed),
        "all_equal_rate": (all_equal / len(completed)) if completed else None,
        "all_zeros_rate": (zeros / len(completed)) if completed else None,
    }


def run_ghz4(spec: ScenarioSpec) -> ScenarioSummary:
    net = spec.make_network()
    source = net.create_node("Source")
    parties = [net.create_node(f"P{i}") for i in (1, 2, 3)]
    for party in parties:
        channel = net.install_quantum_link(source, party)
        channel.set_delay(spec.qdelay_ns)
        for noise_map in spec.noise:
            channel.attach(noise_map)
        net.install_classical_link(source, party, spec.cdelay_ns)

    current: dict = {}

    def send_next(k: int) -> None:
        """Dispatch qubit k+1 to party k and arm its ack timeout."""
        net.send_qubit(source, current["qubits"][k + 1], parties[k])
        current["awaiting"] = k
        current["timeout_id"] = net.schedule(
            spec.ack_timeout_ns(), lambda: on_timeout(k)
        )

    def on_party_recv(handle: int, src: int, party: int) -> None:
        net.send_datagram(party, source, ACK, tag="ack")

    def on_ack(datagram) -> None:
        k = parties.index(datagram.src)
        if current.get("awaiting") != k:
            return
        current["awaiting"] = None
        net.scheduler.cancel(current["timeout_id"])
        if k + 1 < len(parties):
            send_next(k + 1)
        else:
            readout()

    def readout() -> None:
        outcomes = [net.measure(q, "Z") for q in current["qubits"]]
        finish({"outcomes": outcomes, "all_equal": len(set(outcomes)) == 1})

    def on_timeout(k: int) -> None:
        net.emit("note", text=f"ack timeout waiting on spoke {k}")
        finish({"failed": True, "acks_received": k})

    def finish(record: dict) -> None:
        if current.get("done_called"):
            return
        current["done_called"] = True
        current["done"](record)

    for party in parties:
        net.set_recv_callback(
            party, lambda h, s, party=party: on_party_recv(h, s, party)
        )
    net.set_datagram_callback(source, on_ack)

    def trial(i: int, done) -> None:
        current.clear()
        current["done"] = done
        qubits = [net.alloc_qubit(source) for _ in range(4)]
        net.apply("H", [qubits[0]])
        for a, b in zip(qubits, qubits[1:]):
            net.apply("CNOT", [a, b])
        current["qubits"] = qubits
        send_next(0)

    records = run_trials(net, spec, trial)
    return summarize(spec, net, records, aggregate_records(records))
