"""All-to-all Bell-pair distribution over a three-node network.

Per trial and per node pair, the lower-id node prepares a Bell pair and sends
one half across the pair's quantum link; on arrival both halves are measured
and the equal-outcome correlation is tallied. With a dense backend the pair
fidelity against the ideal Bell state is recorded just before measurement.
"""

from __future__ import annotations

from .common import BELL_PHI_PLUS, ScenarioSpec, ScenarioSummary, run_trials, summarize
from ..registry import Phase

PAIRS = ((0, 1), (0, 2), (1, 2))


def aggregate_records(records: list[dict], basis: str) -> dict:
    pair_keys = [f"{a}-{b}" for a, b in PAIRS]
    stats = {k: {"trials": 0, "equal": 0, "lost": 0, "fidelities": []} for k in pair_keys}
    for record in records:
        for key, outcome in record["pairs"].items():
            s = stats[key]
            if outcome.get("lost"):
                s["lost"] += 1
                continue
            s["trials"] += 1
            s["equal"] += int(outcome["equal"])
            if outcome.get("fidelity") is not None:
                s["fidelities"].append(outcome["fidelity"])
    per_pair = {}
    for key, s in stats.items():
        per_pair[key] = {
            "equal_rate": (s["equal"] / s["trials"]) if s["trials"] else None,
            "lost": s["lost"],
            "mean_fidelity": (
                sum(s["fidelities"]) / len(s["fidelities"]) if s["fidelities"] else None
            ),
        }
    measured = sum(s["trials"] for s in stats.values())
    equal = sum(s["equal"] for s in stats.values())
    return {
        "basis": basis,
        "pairs": per_pair,
        "equal_rate": (equal / measured) if measured else None,
        "sends": len(records) * len(PAIRS),
        "lost": sum(s["lost"] for s in stats.values()),
    }


def run_bell_all_to_all(spec: ScenarioSpec) -> ScenarioSummary:
    net = spec.make_network()
    for i in range(3):
        net.create_node(f"N{i}")
    for a, b in PAIRS:
        channel = net.install_quantum_link(a, b)
        channel.set_delay(spec.qdelay_ns)
        for noise_map in spec.noise:
            channel.attach(noise_map)

    def trial(i: int, done) -> None:
        results: dict[str, dict] = {}
        remaining = [len(PAIRS)]

        def finish_pair(key: str, outcome: dict) -> None:
            results[key] = outcome
            remaining[0] -= 1
            if remaining[0] == 0:
                done({"pairs": results})

        for a, b in PAIRS:
            key = f"{a}-{b}"
            h0, h1 = net.create_bell_pair(a)
            net.send_qubit(a, h1, b)

            def check(key=key, h0=h0, h1=h1) -> None:
                if net.registry.entry(h1).phase is Phase.LOST:
                    finish_pair(key, {"lost": True})
                    return
                fidelity = None
                if spec.backend in ("ket", "dm"):
                    fidelity = net.registry.fidelity([h0, h1], BELL_PHI_PLUS)
                o0 = net.measure(h0, spec.bell_basis)
                o1 = net.measure(h1, spec.bell_basis)
                finish_pair(
                    key,
                    {"outcomes": [o0, o1], "equal": o0 == o1, "fidelity": fidelity},
                )

            # Runs at the arrival timestamp, right after the arrival event.
            net.schedule(spec.qdelay_ns, check)

    records = run_trials(net, spec, trial)
    return summarize(spec, net, records, aggregate_records(records, spec.bell_basis))
