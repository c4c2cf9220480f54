"""Dense statevector backend for pure states."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..errors import ContractViolation
from . import base
from .base import BackendKind, JointState, snap_probability
from .pauli import PauliString


class KetState(JointState):
    kind = BackendKind.KET

    def __init__(self, n: int, cap: int | None = None):
        super().__init__(n, cap)
        self.amps = np.zeros(2**n, dtype=complex)
        self.amps[0] = 1.0

    @property
    def n(self) -> int:
        return int(self.amps.size).bit_length() - 1

    def _apply_unitary(self, u: np.ndarray, targets: Sequence[int]) -> None:
        n = self.n
        k = len(targets)
        psi = self.amps.reshape([2] * n)
        axes = [n - 1 - t for t in targets]
        psi = np.moveaxis(psi, axes, range(k))
        rest = psi.shape[k:]
        psi = (u @ psi.reshape(2**k, -1)).reshape([2] * k + list(rest))
        psi = np.moveaxis(psi, range(k), axes)
        self.amps = np.ascontiguousarray(psi).reshape(-1)
        assert abs(np.linalg.norm(self.amps) - 1.0) < base.STATE_TOL

    def apply_gate(self, gate: str, targets: Sequence[int]) -> None:
        base.validate_targets(gate, targets, self.n)
        u = base.GATES_1Q.get(gate)
        if u is None:
            u = base.GATES_2Q[gate]
        self._apply_unitary(u, targets)

    def prob_one(self, i: int) -> float:
        """P(Z-outcome 1) for qubit i; snapped, no collapse."""
        if not 0 <= i < self.n:
            raise IndexError(f"qubit index {i} out of range")
        axis = self.n - 1 - i
        branch = np.take(self.amps.reshape([2] * self.n), 1, axis=axis)
        return snap_probability(float(np.linalg.norm(branch) ** 2))

    def measure_z(self, i: int, rand: float) -> int:
        p1 = self.prob_one(i)
        if p1 == 0.0:
            outcome = 0
        elif p1 == 1.0:
            outcome = 1
        else:
            outcome = 1 if rand < p1 else 0
        n = self.n
        psi = self.amps.reshape([2] * n)
        dead = [slice(None)] * n
        dead[n - 1 - i] = 1 - outcome
        psi[tuple(dead)] = 0.0
        self.amps = psi.reshape(-1)
        self.amps /= np.linalg.norm(self.amps)
        return outcome

    def merge(self, other: JointState) -> "KetState":
        assert isinstance(other, KetState)
        self._check_merge_cap(other)
        merged = KetState.__new__(KetState)
        merged.cap = self.cap
        merged.amps = np.kron(other.amps, self.amps)
        return merged

    def discard(self, i: int) -> None:
        p1 = self.prob_one(i)
        if p1 not in (0.0, 1.0):
            raise ContractViolation(
                f"cannot discard qubit {i}: not in a definite Z eigenstate (P1={p1})"
            )
        axis = self.n - 1 - i
        kept = np.take(self.amps.reshape([2] * self.n), int(p1), axis=axis)
        self.amps = np.ascontiguousarray(kept).reshape(-1)
        self.amps /= np.linalg.norm(self.amps)

    def apply_pauli_channel(self, i: int, probs: Sequence[float], rand: float) -> str:
        base.validate_pauli_probs(probs)
        if not 0 <= i < self.n:
            raise IndexError(f"qubit index {i} out of range")
        letter = base.sample_pauli(probs, rand)
        if letter != "I":
            self._apply_unitary(base.GATES_1Q[letter], [i])
        return letter

    def expect_pauli(self, p: PauliString) -> float:
        if p.n != self.n:
            raise ValueError(f"Pauli length {p.n} != state size {self.n}")
        phi = KetState.__new__(KetState)
        phi.cap = self.cap
        phi.amps = self.amps.copy()
        for i, letter in enumerate(p.letters):
            if letter != "I":
                phi._apply_unitary(base.GATES_1Q[letter], [i])
        val = p.sign * float(np.vdot(self.amps, phi.amps).real)
        return base.snap_expectation(val)

    def fidelity(self, reference) -> float:
        ref = reference.amps if isinstance(reference, KetState) else np.asarray(reference)
        if ref.size != self.amps.size:
            raise ValueError("reference size mismatch")
        return float(abs(np.vdot(ref, self.amps)) ** 2)

    def forget(self, i: int, rand: float) -> None:
        self.measure_z(i, rand)
        self.discard(i)
