"""Shared harness for the demonstration scenarios: specs, summaries, trials."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..network import DEFAULT_CLASSICAL_DELAY_NS, ForcedRandom, Network
from ..noise import NoiseMap
from ..trace import TraceDoc

SCENARIO_NAMES = ("bell_all_to_all", "teleportation", "ghz4", "cluster5", "cluster_chain")

BELL_PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2.0)
PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2.0)


@dataclass
class ScenarioSpec:
    """Parameters of one scenario run (the CLI maps its flags onto this)."""

    name: str
    backend: str = "ket"
    seed: int = 0
    trials: int = 1
    noise: list[NoiseMap] = field(default_factory=list)
    qdelay_ns: int = 0
    cdelay_ns: int = DEFAULT_CLASSICAL_DELAY_NS
    nodes: int = 5  # cluster_chain only
    timeout_mult: float = 1.0
    bell_basis: str = "Z"  # bell_all_to_all measurement basis variant
    forced_rands: Optional[list[float]] = None  # branch-forcing test hook

    def __post_init__(self):
        if self.name not in SCENARIO_NAMES:
            raise ValueError(
                f"unknown scenario {self.name!r} (valid: {', '.join(SCENARIO_NAMES)})"
            )
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.bell_basis not in ("Z", "X"):
            raise ValueError("bell_basis must be Z or X")

    def config_dict(self) -> dict:
        return {
            "scenario": self.name,
            "backend": self.backend,
            "seed": self.seed,
            "trials": self.trials,
            "noise": [f"{m.kind}:{m.p}" for m in self.noise],
            "qdelay_ns": self.qdelay_ns,
            "cdelay_ns": self.cdelay_ns,
            "nodes": self.nodes,
            "timeout_mult": self.timeout_mult,
        }

    def make_network(self) -> Network:
        rng = None
        if self.forced_rands is not None:
            rng = ForcedRandom(self.forced_rands, random.Random(self.seed))
        return Network(
            backend=self.backend,
            seed=self.seed,
            scenario=self.name,
            config=self.config_dict(),
            rng=rng,
        )

    def ack_timeout_ns(self) -> int:
        """10x the spoke round trip, scaled by the timeout multiplier."""
        rtt = self.qdelay_ns + self.cdelay_ns
        return max(int(10 * rtt * self.timeout_mult), 1)


@dataclass
class ScenarioSummary:
    name: str
    backend: str
    seed: int
    trials: int
    records: list[dict]
    aggregate: dict
    trace: TraceDoc = field(repr=False)
    trace_path: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "backend": self.backend,
            "seed": self.seed,
            "trials": self.trials,
            "records": self.records,
            "aggregate": self.aggregate,
            "trace_path": self.trace_path,
        }


def run_trials(
    net: Network,
    spec: ScenarioSpec,
    trial_fn: Callable[[int, Callable[[dict], None]], None],
) -> list[dict]:
    """Run ``spec.trials`` trials back to back inside one event loop.

    ``trial_fn(i, done)`` builds trial i's initial events and must arrange for
    ``done(record)`` to be called exactly once, possibly from a later event.
    Each trial starts with a trial_boundary marker at the time the previous
    one finished.
    """
    records: list[dict] = []

    def begin(i: int) -> None:
        net.emit("trial_boundary", trial=i)

        def done(record: dict) -> None:
            records.append(record)
            if i + 1 < spec.trials:
                net.schedule(0, lambda: begin(i + 1))

        trial_fn(i, done)

    net.schedule(0, lambda: begin(0))
    net.run()
    if len(records) != spec.trials:
        raise RuntimeError(
            f"{spec.name}: {len(records)} of {spec.trials} trials completed"
        )
    return records


def summarize(
    spec: ScenarioSpec, net: Network, records: list[dict], aggregate: dict
) -> ScenarioSummary:
    return ScenarioSummary(
        name=spec.name,
        backend=spec.backend,
        seed=spec.seed,
        trials=spec.trials,
        records=records,
        aggregate=aggregate,
        trace=net.trace_doc(),
    )
