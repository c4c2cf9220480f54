"""Quantum teleportation of a |+> state with classical correction delivery.

Schedule within each trial (matching the canonical event chain): Bell pair at
t=0; at t=1 ms one half is sent to the receiver and the |+> payload is
prepared; the Bell-basis measurement is armed for t=4 ms (or the qubit's
arrival, whichever is later); the two outcome bits travel as a 2-byte
datagram, and the receiver applies X^b1 then Z^b0 before reading out in the
X basis. Noiselessly the X outcome is 0 on every branch.
"""

from __future__ import annotations

from .common import PLUS, ScenarioSpec, ScenarioSummary, run_trials, summarize
from ..simcore import NS_PER_MS

T_SEND_NS = 1 * NS_PER_MS
T_MEASURE_NS = 4 * NS_PER_MS


def aggregate_records(records: list[dict]) -> dict:
    completed = [r for r in records if not r.get("failed")]
    zeros = sum(1 for r in completed if r["x_outcome"] == 0)
    fidelities = [r["fidelity"] for r in completed if r.get("fidelity") is not None]
    return {
        "completed": len(completed),
        "failed": len(records) - len(completed),
        "x_zero_rate": (zeros / len(completed)) if completed else None,
        "mean_fidelity": (sum(fidelities) / len(fidelities)) if fidelities else None,
    }


def run_teleportation(spec: ScenarioSpec) -> ScenarioSummary:
    net = spec.make_network()
    alice = net.create_node("A")
    bob = net.create_node("B")
    channel = net.install_quantum_link(alice, bob)
    channel.set_delay(spec.qdelay_ns)
    for noise_map in spec.noise:
        channel.attach(noise_map)
    net.install_classical_link(alice, bob, spec.cdelay_ns)

    current: dict = {}

    def on_recv(handle: int, src: int) -> None:
        # Arm the Bell measurement for the schedule slot (never earlier than
        # the qubit's arrival).
        fire_at = max(current["base"] + T_MEASURE_NS, net.now())
        net.schedule(fire_at - net.now(), measure_and_correct)

    def measure_and_correct() -> None:
        b0, b1 = net.measure_bell(current["payload"], current["keep"])
        current["bits"] = (b0, b1)
        net.send_datagram(alice, bob, bytes([b0, b1]), tag="corrections")

    def on_corrections(datagram) -> None:
        b0, b1 = datagram.payload
        qubit = current["sent"]
        if b1:
            net.apply("X", [qubit])
        if b0:
            net.apply("Z", [qubit])
        fidelity = None
        if spec.backend in ("ket", "dm"):
            fidelity = net.registry.fidelity([qubit], PLUS)
        outcome = net.measure(qubit, "X")
        finish(
            {
                "bits": list(current["bits"]),
                "x_outcome": outcome,
                "fidelity": fidelity,
            }
        )

    def finish(record: dict) -> None:
        if current.get("done_called"):
            return
        current["done_called"] = True
        net.scheduler.cancel(current["timeout_id"])
        current["done"](record)

    net.set_recv_callback(bob, on_recv)
    net.set_datagram_callback(bob, on_corrections)

    def trial(i: int, done) -> None:
        current.clear()
        current["base"] = net.now()
        current["done"] = done

        keep, send = net.create_bell_pair(alice)
        current["keep"], current["sent"] = keep, send

        def dispatch() -> None:
            net.send_qubit(alice, send, bob)
            payload = net.alloc_qubit(alice)
            net.apply("H", [payload])
            current["payload"] = payload

        net.schedule(T_SEND_NS, dispatch)
        current["timeout_id"] = net.schedule(
            T_MEASURE_NS + spec.qdelay_ns + spec.cdelay_ns + spec.ack_timeout_ns(),
            lambda: finish({"failed": True}),
        )

    records = run_trials(net, spec, trial)
    return summarize(spec, net, records, aggregate_records(records))
