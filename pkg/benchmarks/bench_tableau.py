#!/usr/bin/env python3
"""Benchmark the stabilizer tableau kernels: compiled extension vs numpy.

Applies a fixed random Clifford workload (gates + mid-circuit measurements)
at several qubit counts to every available kernel implementation and prints
a table of wall times and speedup.

Usage: python3 benchmarks/bench_tableau.py [--depth 2000] [--sizes 20,100,500]
"""

import argparse
import random
import time

from qnetsim.qstate.kernels import available
from qnetsim.qstate.stab import StabState


def workload(n: int, depth: int, seed: int):
    rng = random.Random(seed)
    ops = []
    for _ in range(depth):
        r = rng.random()
        if r < 0.5:
            gate = rng.choice(("H", "S", "X", "Z"))
            ops.append((gate, (rng.randrange(n),), None))
        elif r < 0.9:
            a = rng.randrange(n)
            b = (a + 1 + rng.randrange(n - 1)) % n
            ops.append((rng.choice(("CNOT", "CZ")), (a, b), None))
        else:
            ops.append(("M", (rng.randrange(n),), rng.random()))
    return ops


def run_once(kernel, n: int, ops) -> float:
    state = StabState(n, kernel=kernel)
    start = time.perf_counter()
    for gate, targets, rand in ops:
        if gate == "M":
            state.measure_z(targets[0], rand)
        else:
            state.apply_gate(gate, targets)
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--depth", type=int, default=2000)
    parser.add_argument("--sizes", default="20,100,500")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    kernels = available()
    names = [k.IMPL for k in kernels]
    print(f"kernels: {', '.join(names)}   depth={args.depth}   best of {args.repeats}")
    header = f"{'qubits':>8} " + " ".join(f"{name:>12}" for name in names)
    if len(kernels) > 1:
        header += f" {'speedup':>9}"
    print(header)
    for n in sizes:
        ops = workload(n, args.depth, seed=n)
        times = [
            min(run_once(k, n, ops) for _ in range(args.repeats)) for k in kernels
        ]
        row = f"{n:>8} " + " ".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) > 1:
            row += f" {times[-1] / times[0]:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
