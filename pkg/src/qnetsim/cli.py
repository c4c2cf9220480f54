"""Command-line entry points: run scenarios and generate the demo traces.

``qnetsim`` runs one scenario per invocation, prints the summary as JSON on
stdout (diagnostics go to stderr) and optionally writes the trace file.
Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import trace as trace_mod
from .errors import QNetSimError
from .noise import NoiseMap
from .protocols import SCENARIO_NAMES, ScenarioSpec, ScenarioSummary, run_scenario

# Shipped demo traces: scenario -> (seed, trials). Fixed so the files are
# reproducible byte for byte.
DEMO_TRACES = {
    "bell_all_to_all": (1, 1),
    "teleportation": (7, 1),
    "ghz4": (11, 1),
    "cluster5": (5, 1),
}


def _noise_arg(text: str) -> NoiseMap:
    try:
        return NoiseMap.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qnetsim",
        description="Run a hybrid quantum-classical network scenario.",
    )
    parser.add_argument("--scenario", required=True, choices=SCENARIO_NAMES)
    parser.add_argument("--backend", default="ket", choices=("ket", "dm", "stab"))
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=1)
    parser.add_argument("--trace-out", type=Path, default=None,
                        help="write the run trace (JSON) to this path")
    parser.add_argument("--noise", type=_noise_arg, action="append", default=[],
                        metavar="KIND:P",
                        help="attach a noise map (loss|depolarizing|dephasing:p) "
                             "to every quantum link; repeatable")
    parser.add_argument("--qdelay-ns", type=int, default=0)
    parser.add_argument("--cdelay-ns", type=int, default=1_000_000)
    parser.add_argument("--nodes", type=int, default=5,
                        help="chain length (cluster_chain only)")
    parser.add_argument("--timeout-mult", type=float, default=1.0)
    return parser


def run_from_args(args: argparse.Namespace) -> ScenarioSummary:
    spec = ScenarioSpec(
        name=args.scenario,
        backend=args.backend,
        seed=args.seed,
        trials=args.trials,
        noise=list(args.noise),
        qdelay_ns=args.qdelay_ns,
        cdelay_ns=args.cdelay_ns,
        nodes=args.nodes,
        timeout_mult=args.timeout_mult,
    )
    return run_scenario(spec)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.trials < 1:
            raise ValueError("--trials must be >= 1")
        if args.qdelay_ns < 0 or args.cdelay_ns < 0:
            raise ValueError("delays must be >= 0")
        summary = run_from_args(args)
        if args.trace_out is not None:
            with open(args.trace_out, "wb") as fh:
                trace_mod.write_json(summary.trace, fh)
            summary.trace_path = str(args.trace_out)
        print(json.dumps(summary.to_dict()))
        return 0
    except (QNetSimError, ValueError, OSError) as exc:
        print(f"qnetsim: error: {exc}", file=sys.stderr)
        return 1


def generate_demo_traces(output_dir: Path) -> list[Path]:
    """Write the four canonical traces (fixed seeds, one trial each)."""
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (seed, trials) in DEMO_TRACES.items():
        summary = run_scenario(ScenarioSpec(name=name, seed=seed, trials=trials))
        path = output_dir / f"{name}.json"
        with open(path, "wb") as fh:
            trace_mod.write_json(summary.trace, fh)
        written.append(path)
    return written


def demo_traces_main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="qnetsim-demo-traces",
        description="Generate the four pre-loaded demo traces.",
    )
    parser.add_argument("output_dir", type=Path)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        for path in generate_demo_traces(args.output_dir):
            print(path)
        return 0
    except (QNetSimError, OSError) as exc:
        print(f"qnetsim-demo-traces: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
