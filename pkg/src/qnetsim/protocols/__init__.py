"""The demonstration scenario library, runnable from code or the CLI."""

from .bell import run_bell_all_to_all
from .cluster import run_cluster5, run_cluster_chain
from .common import SCENARIO_NAMES, ScenarioSpec, ScenarioSummary
from .ghz import run_ghz4
from .teleport import run_teleportation

RUNNERS = {
    "bell_all_to_all": run_bell_all_to_all,
    "teleportation": run_teleportation,
    "ghz4": run_ghz4,
    "cluster5": run_cluster5,
    "cluster_chain": run_cluster_chain,
}


def run_scenario(spec: ScenarioSpec) -> ScenarioSummary:
    return RUNNERS[spec.name](spec)


__all__ = [
    "SCENARIO_NAMES",
    "RUNNERS",
    "ScenarioSpec",
    "ScenarioSummary",
    "run_scenario",
    "run_bell_all_to_all",
    "run_teleportation",
    "run_ghz4",
    "run_cluster5",
    "run_cluster_chain",
]
