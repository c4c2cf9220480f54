#!/usr/bin/env python3
"""Derive the cluster5 correction table by brute force and write it as JSON.

Self-contained statevector algebra (no simulator imports, so the table stays
an independent oracle). For each (m1, m3) branch of the orchestrator's two
X-basis measurements on the 5-qubit linear cluster state, searches the
24-element single-qubit Clifford group per client for local corrections that
map the post-measurement 3-qubit state back to the linear graph state A-B-C.

Regenerate with:  python3 scripts/derive_cluster5_corrections.py
Output: src/qnetsim/protocols/cluster5_corrections.json (committed).
"""

import itertools
import json
from pathlib import Path

import numpy as np

SQ2 = 1.0 / np.sqrt(2.0)
GATES = {
    "H": np.array([[SQ2, SQ2], [SQ2, -SQ2]], dtype=complex),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
OUT_PATH = Path(__file__).resolve().parent.parent / "src" / "qnetsim" / "protocols" / "cluster5_corrections.json"


def apply_1q(psi: np.ndarray, u: np.ndarray, qubit: int, n: int) -> np.ndarray:
    """Qubit i is bit i of the basis index (little-endian)."""
    t = psi.reshape([2] * n)
    axis = n - 1 - qubit
    t = np.moveaxis(t, axis, 0)
    t = (u @ t.reshape(2, -1)).reshape(t.shape)
    return np.moveaxis(t, 0, axis).reshape(-1)


def apply_cz(psi: np.ndarray, a: int, b: int, n: int) -> np.ndarray:
    idx = np.arange(psi.size)
    mask = ((idx >> a) & 1) & ((idx >> b) & 1)
    out = psi.copy()
    out[mask == 1] *= -1
    return out


def measure_x_forced(psi: np.ndarray, qubit: int, outcome: int, n: int):
    """H then forced-Z projection then removal of the qubit, mirroring how the
    simulator consumes a qubit on an X-basis measurement."""
    psi = apply_1q(psi, GATES["H"], qubit, n)
    t = psi.reshape([2] * n)
    kept = np.take(t, outcome, axis=n - 1 - qubit).reshape(-1)
    norm = np.linalg.norm(kept)
    assert norm > 1e-12, "branch has zero probability"
    return kept / norm, n - 1


def linear_cluster(n: int) -> np.ndarray:
    psi = np.zeros(2**n, dtype=complex)
    psi[0] = 1.0
    for q in range(n):
        psi = apply_1q(psi, GATES["H"], q, n)
    for q in range(n - 1):
        psi = apply_cz(psi, q, q + 1, n)
    return psi


def clifford_group():
    """The 24 single-qubit Cliffords as shortest H/S/X/Y/Z words (BFS order)."""

    def canon(u: np.ndarray) -> bytes:
        # Global-phase-free fingerprint: normalize by the first nonzero entry;
        # adding 0.0 collapses -0.0 into +0.0 so the bytes are stable.
        flat = u.reshape(-1)
        pivot = flat[np.argmax(np.abs(flat) > 1e-9)]
        return (np.round(flat / pivot, 9) + (0.0 + 0.0j)).tobytes()

    found: dict[bytes, tuple[list[str], np.ndarray]] = {}
    frontier = [([], np.eye(2, dtype=complex))]
    found[canon(np.eye(2, dtype=complex))] = ([], np.eye(2, dtype=complex))
    while frontier:
        nxt = []
        for word, u in frontier:
            for g in ("H", "S", "X", "Y", "Z"):
                w2 = word + [g]
                u2 = GATES[g] @ u
                key = canon(u2)
                if key not in found:
                    found[key] = (w2, u2)
                    nxt.append((w2, u2))
        frontier = nxt
    elems = sorted(found.values(), key=lambda wu: (len(wu[0]), wu[0]))
    assert len(elems) == 24, f"expected 24 Cliffords, found {len(elems)}"
    return elems


def main():
    cliffords = clifford_group()
    target = linear_cluster(3)
    table = {}
    for m1, m3 in itertools.product((0, 1), repeat=2):
        psi = linear_cluster(5)
        psi, n = measure_x_forced(psi, 1, m1, 5)       # qubit g1
        psi, n = measure_x_forced(psi, 2, m3, n)       # g3, shifted down to 2
        assert n == 3                                   # remaining (g0, g2, g4)
        hit = None
        for (wa, ua), (wb, ub), (wc, uc) in itertools.product(cliffords, repeat=3):
            corrected = apply_1q(psi, ua, 0, 3)
            corrected = apply_1q(corrected, ub, 1, 3)
            corrected = apply_1q(corrected, uc, 2, 3)
            if abs(abs(np.vdot(target, corrected)) - 1.0) < 1e-9:
                hit = {"A": wa, "B": wb, "C": wc}
                break
        assert hit is not None, f"no correction found for branch ({m1}, {m3})"
        table[f"{m1}{m3}"] = hit
        print(f"branch (m1={m1}, m3={m3}): A={hit['A']} B={hit['B']} C={hit['C']}")

    words = sorted({tuple(v[c]) for v in table.values() for c in "ABC"})
    instructions = [list(w) for w in words]
    doc = {
        "description": (
            "Local Clifford corrections restoring the linear graph state A-B-C "
            "after the orchestrator X-measures qubits g1 and g3 of a 5-qubit "
            "linear cluster. Derived by exhaustive single-qubit Clifford search; "
            "regenerate with scripts/derive_cluster5_corrections.py."
        ),
        "instructions": instructions,
        "branches": {
            key: {c: words.index(tuple(v[c])) for c in "ABC"}
            for key, v in table.items()
        },
    }
    OUT_PATH.write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {OUT_PATH}")


if __name__ == "__main__":
    main()
