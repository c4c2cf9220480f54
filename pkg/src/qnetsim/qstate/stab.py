"""Stabilizer tableau backend for scalable Clifford simulation.

The tableau kernels (gate conjugation, row-sum measurement, group-membership
sign evaluation) live in ``kernels`` and come in compiled and pure-numpy
flavors; this class owns the arrays and the bookkeeping around them.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..errors import ContractViolation, UnsupportedOperation
from . import base, kernels
from .base import BackendKind, JointState
from .pauli import PauliString

_KERNEL_GATES = {
    "H": "gate_h",
    "X": "gate_x",
    "Y": "gate_y",
    "Z": "gate_z",
    "S": "gate_s",
    "CNOT": "gate_cnot",
    "CZ": "gate_cz",
}


class StabState(JointState):
    kind = BackendKind.STAB

    def __init__(self, n: int, cap: int | None = None, kernel=None):
        super().__init__(n, cap)
        self.kernel = kernel if kernel is not None else kernels.active
        # Destabilizer rows 0..n-1 start as X_i, stabilizer rows n..2n-1 as Z_i.
        self.x = np.zeros((2 * n, n), dtype=np.uint8)
        self.z = np.zeros((2 * n, n), dtype=np.uint8)
        self.r = np.zeros(2 * n, dtype=np.uint8)
        for i in range(n):
            self.x[i, i] = 1
            self.z[n + i, i] = 1

    @property
    def n(self) -> int:
        return self.x.shape[1]

    def apply_gate(self, gate: str, targets: Sequence[int]) -> None:
        base.validate_targets(gate, targets, self.n)
        getattr(self.kernel, _KERNEL_GATES[gate])(self.x, self.z, self.r, *targets)

    def deterministic_z(self, i: int) -> int:
        """Z outcome of qubit i if predetermined, else -1; no collapse."""
        if not 0 <= i < self.n:
            raise IndexError(f"qubit index {i} out of range")
        return int(self.kernel.det_outcome(self.x, self.z, self.r, i))

    def prob_one(self, i: int) -> float:
        det = self.deterministic_z(i)
        return 0.5 if det < 0 else float(det)

    def measure_z(self, i: int, rand: float) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"qubit index {i} out of range")
        return int(self.kernel.measure(self.x, self.z, self.r, i, rand))

    def merge(self, other: JointState) -> "StabState":
        assert isinstance(other, StabState)
        self._check_merge_cap(other)
        na, nb = self.n, other.n
        n = na + nb
        merged = StabState.__new__(StabState)
        merged.cap = self.cap
        merged.kernel = self.kernel
        merged.x = np.zeros((2 * n, n), dtype=np.uint8)
        merged.z = np.zeros((2 * n, n), dtype=np.uint8)
        merged.r = np.zeros(2 * n, dtype=np.uint8)
        # Destabilizers.
        merged.x[0:na, 0:na] = self.x[0:na]
        merged.z[0:na, 0:na] = self.z[0:na]
        merged.x[na:n, na:n] = other.x[0:nb]
        merged.z[na:n, na:n] = other.z[0:nb]
        merged.r[0:na] = self.r[0:na]
        merged.r[na:n] = other.r[0:nb]
        # Stabilizers.
        merged.x[n:n + na, 0:na] = self.x[na:]
        merged.z[n:n + na, 0:na] = self.z[na:]
        merged.x[n + na:, na:n] = other.x[nb:]
        merged.z[n + na:, na:n] = other.z[nb:]
        merged.r[n:n + na] = self.r[na:]
        merged.r[n + na:] = other.r[nb:]
        return merged

    def discard(self, i: int) -> None:
        """Row/column elimination of a qubit that measures deterministically.

        Sweeps the pivot stabilizer into every other stabilizer touching the
        qubit (with the paired destabilizer compensation that keeps the
        anticommutation pairing intact), then deletes the pivot pair and the
        qubit's columns.
        """
        n = self.n
        if not 0 <= i < n:
            raise IndexError(f"qubit index {i} out of range")
        if self.x[n:, i].any():
            raise ContractViolation(
                f"cannot discard qubit {i}: not in a definite Z eigenstate"
            )
        stab_rows = [j for j in range(n, 2 * n) if self.z[j, i]]
        pivot = stab_rows[0]
        for j in stab_rows[1:]:
            self.kernel.rowsum(self.x, self.z, self.r, j, pivot)
            self.kernel.rowsum(self.x, self.z, self.r, pivot - n, j - n)
        keep_rows = [j for j in range(2 * n) if j != pivot - n and j != pivot]
        keep_cols = [c for c in range(n) if c != i]
        self.x = np.ascontiguousarray(self.x[np.ix_(keep_rows, keep_cols)])
        self.z = np.ascontiguousarray(self.z[np.ix_(keep_rows, keep_cols)])
        self.r = np.ascontiguousarray(self.r[keep_rows])

    def apply_pauli_channel(self, i: int, probs: Sequence[float], rand: float) -> str:
        base.validate_pauli_probs(probs)
        if not 0 <= i < self.n:
            raise IndexError(f"qubit index {i} out of range")
        letter = base.sample_pauli(probs, rand)
        if letter != "I":
            self.apply_gate(letter, [i])
        return letter

    def expect_pauli(self, p: PauliString) -> float:
        if p.n != self.n:
            raise ValueError(f"Pauli length {p.n} != state size {self.n}")
        sign = self.kernel.pauli_sign(self.x, self.z, self.r, p.x_bits(), p.z_bits())
        return float(sign * p.sign)

    def fidelity(self, reference) -> float:
        raise UnsupportedOperation("fidelity is not defined on the stab backend")

    def forget(self, i: int, rand: float) -> None:
        self.measure_z(i, rand)
        self.discard(i)

    def stabilizer_strings(self) -> list[str]:
        """Human-readable signed stabilizer generators (testing aid)."""
        out = []
        n = self.n
        for row in range(n, 2 * n):
            letters = []
            for c in range(n):
                xb, zb = self.x[row, c], self.z[row, c]
                letters.append("IXZY"[xb + 2 * zb] if xb + 2 * zb != 3 else "Y")
            out.append(("-" if self.r[row] else "+") + "".join(letters))
        return out

    def validate(self) -> None:
        """Exhaustive invariant check: stabilizer rows commute pairwise and are
        independent; destabilizer i anticommutes with stabilizer i only.
        Test harness use; too slow to run after every gate.
        """
        n = self.n
        sx, sz = self.x[n:].astype(np.int64), self.z[n:].astype(np.int64)
        dx, dz = self.x[:n].astype(np.int64), self.z[:n].astype(np.int64)
        comm = (sx @ sz.T + sz @ sx.T) % 2
        if comm.any():
            raise AssertionError("stabilizer generators do not commute")
        pair = (dx @ sz.T + dz @ sx.T) % 2
        if not np.array_equal(pair, np.eye(n, dtype=np.int64)):
            raise AssertionError("destabilizer/stabilizer pairing broken")
        stacked = np.concatenate([sx, sz], axis=1) % 2
        if _gf2_rank(stacked) != n:
            raise AssertionError("stabilizer generators are dependent")


def _gf2_rank(mat: np.ndarray) -> int:
    m = mat.copy() % 2
    rank = 0
    rows, cols = m.shape
    for c in range(cols):
        pivots = np.nonzero(m[rank:, c])[0]
        if pivots.size == 0:
            continue
        p = rank + pivots[0]
        m[[rank, p]] = m[[p, rank]]
        hits = np.nonzero(m[:, c])[0]
        for h in hits:
            if h != rank:
                m[h] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank
