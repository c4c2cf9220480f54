"""Cluster-state manipulation scenarios.

``cluster5``: an orchestrator prepares a 5-qubit linear cluster state,
hands the end/middle qubits g0, g2, g4 to three clients (ack-gated), X-measures
its own g1 and g3, and sends each client a one-byte correction instruction.
After the local corrections the three remote qubits form the linear graph
state A-B-C, verified through its stabilizer generators.

``cluster_chain``: the same pattern generalized to an n-qubit linear cluster
distributed from one source to n-1 leaves, used to exercise the stabilizer
backend at network scale.
"""

from __future__ import annotations

import json
import time
from importlib import resources

from .common import ScenarioSpec, ScenarioSummary, run_trials, summarize
from ..errors import CapacityError
from ..qstate import DEFAULT_CAPS, BackendKind
from ..registry import Phase

ACK = bytes([0x01])

with resources.files(__package__).joinpath("cluster5_corrections.json").open() as fh:
    _CORRECTIONS = json.load(fh)

CORRECTION_INSTRUCTIONS: list[list[str]] = _CORRECTIONS["instructions"]
CORRECTION_BRANCHES: dict[str, dict[str, int]] = _CORRECTIONS["branches"]

CLIENTS = ("A", "B", "C")


def graph_state_stabilizer(chain: list[int], k: int) -> dict[int, str]:
    """K_k = X_k prod Z_neighbors for a linear graph over ``chain`` handles."""
    ops = {chain[k]: "X"}
    if k > 0:
        ops[chain[k - 1]] = "Z"
    if k + 1 < len(chain):
        ops[chain[k + 1]] = "Z"
    return ops


def aggregate_cluster5(records: list[dict]) -> dict:
    completed = [r for r in records if not r.get("failed")]
    ok = sum(
        1 for r in completed if all(v == 1.0 for v in r["stabilizers"].values())
    )
    branches: dict[str, int] = {}
    for r in completed:
        branches[r["branch"]] = branches.get(r["branch"], 0) + 1
    return {
        "completed": len(completed),
        "failed": len(records) - len(completed),
        "all_stabilizers_rate": (ok / len(completed)) if completed else None,
        "branches": branches,
    }


def run_cluster5(spec: ScenarioSpec) -> ScenarioSummary:
    net = spec.make_network()
    orchestrator = net.create_node("Orchestrator")
    clients = [net.create_node(name) for name in CLIENTS]
    for client in clients:
        channel = net.install_quantum_link(orchestrator, client)
        channel.set_delay(spec.qdelay_ns)
        for noise_map in spec.noise:
            channel.attach(noise_map)
        net.install_classical_link(orchestrator, client, spec.cdelay_ns)

    current: dict = {}

    def send_next(k: int) -> None:
        handle, client = current["plan"][k]
        net.send_qubit(orchestrator, handle, client)
        current["awaiting"] = k
        current["timeout_id"] = net.schedule(
            spec.ack_timeout_ns(), lambda: on_timeout(k)
        )

    def on_client_recv(handle: int, src: int, client: int) -> None:
        net.send_datagram(client, orchestrator, ACK, tag="ack")

    def on_ack(datagram) -> None:
        k = clients.index(datagram.src)
        if current.get("awaiting") != k:
            return
        current["awaiting"] = None
        net.scheduler.cancel(current["timeout_id"])
        if k + 1 < len(clients):
            send_next(k + 1)
        else:
            measure_and_instruct()

    def measure_and_instruct() -> None:
        g = current["qubits"]
        m1 = net.measure(g[1], "X")
        m3 = net.measure(g[3], "X")
        branch = f"{m1}{m3}"
        current["branch"] = branch
        for name, client in zip(CLIENTS, clients):
            instruction = CORRECTION_BRANCHES[branch][name]
            net.send_datagram(
                orchestrator, client, bytes([instruction]), tag="correction"
            )

    def on_correction(datagram, name: str) -> None:
        qubit = current["held"][name]
        for gate in CORRECTION_INSTRUCTIONS[datagram.payload[0]]:
            net.apply(gate, [qubit])
        current["corrected"].add(name)
        if len(current["corrected"]) == len(CLIENTS):
            verify()

    def verify() -> None:
        held = current["held"]
        chain = [held[name] for name in CLIENTS]
        stabilizers = {
            f"K_{name}": net.registry.expect_pauli(graph_state_stabilizer(chain, k))
            for k, name in enumerate(CLIENTS)
        }
        finish(
            {
                "branch": current["branch"],
                "stabilizers": stabilizers,
            }
        )

    def on_timeout(k: int) -> None:
        net.emit("note", text=f"ack timeout waiting on client {CLIENTS[k]}")
        finish({"failed": True, "acks_received": k})

    def finish(record: dict) -> None:
        if current.get("done_called"):
            return
        current["done_called"] = True
        current["done"](record)

    for name, client in zip(CLIENTS, clients):
        net.set_recv_callback(
            client, lambda h, s, client=client: on_client_recv(h, s, client)
        )
        net.set_datagram_callback(
            client, lambda d, name=name: on_correction(d, name)
        )
    net.set_datagram_callback(orchestrator, on_ack)

    def trial(i: int, done) -> None:
        current.clear()
        current["done"] = done
        current["corrected"] = set()
        qubits = [net.alloc_qubit(orchestrator) for _ in range(5)]
        for q in qubits:
            net.apply("H", [q])
        for a, b in zip(qubits, qubits[1:]):
            net.apply("CZ", [a, b])
        current["qubits"] = qubits
        current["held"] = dict(zip(CLIENTS, (qubits[0], qubits[2], qubits[4])))
        current["plan"] = list(zip((qubits[0], qubits[2], qubits[4]), clients))
        send_next(0)

    records = run_trials(net, spec, trial)
    return summarize(spec, net, records, aggregate_cluster5(records))


def aggregate_chain(records: list[dict], n: int) -> dict:
    completed = [r for r in records if not r.get("failed")]
    return {
        "nodes": n,
        "completed": len(completed),
        "failed": len(records) - len(completed),
        "stabilizers_expected": n,
        "stabilizers_ok": min((r["stabilizers_ok"] for r in completed), default=0),
    }


def run_cluster_chain(spec: ScenarioSpec) -> ScenarioSummary:
    n = spec.nodes
    if n < 2:
        raise ValueError("cluster_chain needs at least 2 nodes")
    kind = BackendKind.parse(spec.backend)
    if n > DEFAULT_CAPS[kind]:
        raise CapacityError(
            f"{kind.value} backend holds at most {DEFAULT_CAPS[kind]} qubits, "
            f"cluster_chain with {n} nodes needs {n}"
        )
    started = time.perf_counter()
    net = spec.make_network()
    source = net.create_node("Source")
    leaves = [net.create_node(f"L{i}") for i in range(1, n)]
    for leaf in leaves:
        channel = net.install_quantum_link(source, leaf)
        channel.set_delay(spec.qdelay_ns)
        for noise_map in spec.noise:
            channel.attach(noise_map)

    def trial(i: int, done) -> None:
        qubits = [net.alloc_qubit(source) for _ in range(n)]
        for q in qubits:
            net.apply("H", [q])
        for a, b in zip(qubits, qubits[1:]):
            net.apply("CZ", [a, b])
        for q, leaf in zip(qubits[1:], leaves):
            net.send_qubit(source, q, leaf)

        def check() -> None:
            lost = [
                q for q in qubits[1:] if net.registry.entry(q).phase is Phase.LOST
            ]
            if lost:
                done({"failed": True, "lost": len(lost)})
                return
            ok = 0
            for k in range(n):
                if net.registry.expect_pauli(graph_state_stabilizer(qubits, k)) == 1.0:
                    ok += 1
            done({"stabilizers_ok": ok})

        net.schedule(spec.qdelay_ns, check)

    records = run_trials(net, spec, trial)
    aggregate = aggregate_chain(records, n)
    aggregate["event_count"] = len(net.trace.events)
    aggregate["wall_seconds"] = round(time.perf_counter() - started, 6)
    return summarize(spec, net, records, aggregate)
