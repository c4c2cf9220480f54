"""Dense density-matrix backend for exact mixed-state evolution."""

from __future__ import annotations

from functools import reduce
from typing import Sequence

import numpy as np

from ..errors import ContractViolation
from . import base
from .base import BackendKind, JointState, snap_probability
from .pauli import PauliString


class DmState(JointState):
    kind = BackendKind.DM

    def __init__(self, n: int, cap: int | None = None):
        super().__init__(n, cap)
        self.rho = np.zeros((2**n, 2**n), dtype=complex)
        self.rho[0, 0] = 1.0

    @property
    def n(self) -> int:
        return int(self.rho.shape[0]).bit_length() - 1

    def _left_mul(self, u: np.ndarray, mat: np.ndarray, targets: Sequence[int]) -> np.ndarray:
        """(U x I) @ mat, acting on the row index's target-qubit bits."""
        n = self.n
        k = len(targets)
        arr = mat.reshape([2] * n + [mat.shape[1]])
        axes = [n - 1 - t for t in targets]
        arr = np.moveaxis(arr, axes, range(k))
        rest = arr.shape[k:]
        arr = (u @ arr.reshape(2**k, -1)).reshape([2] * k + list(rest))
        arr = np.moveaxis(arr, range(k), axes)
        return np.ascontiguousarray(arr).reshape(mat.shape)

    def _conjugate(self, u: np.ndarray, rho: np.ndarray, targets: Sequence[int]) -> np.ndarray:
        """U rho U† without building the full 2^n unitary."""
        b = self._left_mul(u, rho, targets)
        return self._left_mul(u, b.conj().T, targets).conj().T

    def _assert_valid(self) -> None:
        assert abs(np.trace(self.rho).real - 1.0) < base.STATE_TOL
        assert np.abs(self.rho - self.rho.conj().T).max() < base.STATE_TOL

    def apply_gate(self, gate: str, targets: Sequence[int]) -> None:
        base.validate_targets(gate, targets, self.n)
        u = base.GATES_1Q.get(gate)
        if u is None:
            u = base.GATES_2Q[gate]
        self.rho = self._conjugate(u, self.rho, targets)
        self._assert_valid()

    def prob_one(self, i: int) -> float:
        if not 0 <= i < self.n:
            raise IndexError(f"qubit index {i} out of range")
        diag = np.real(np.diag(self.rho))
        mask = (np.arange(diag.size) >> i) & 1
        return snap_probability(float(diag[mask == 1].sum()))

    def measure_z(self, i: int, rand: float) -> int:
        p1 = self.prob_one(i)
        if p1 == 0.0:
            outcome = 0
        elif p1 == 1.0:
            outcome = 1
        else:
            outcome = 1 if rand < p1 else 0
        mask = (np.arange(self.rho.shape[0]) >> i) & 1
        dead = np.nonzero(mask != outcome)[0]
        self.rho[dead, :] = 0.0
        self.rho[:, dead] = 0.0
        self.rho /= np.trace(self.rho).real
        return outcome

    def merge(self, other: JointState) -> "DmState":
        assert isinstance(other, DmState)
        self._check_merge_cap(other)
        merged = DmState.__new__(DmState)
        merged.cap = self.cap
        merged.rho = np.kron(other.rho, self.rho)
        return merged

    def _trace_out(self, i: int) -> None:
        n = self.n
        arr = self.rho.reshape([2] * (2 * n))
        row_axis = n - 1 - i
        col_axis = 2 * n - 1 - i
        arr = np.trace(arr, axis1=row_axis, axis2=col_axis)
        dim = 2 ** (n - 1)
        self.rho = np.ascontiguousarray(arr).reshape(dim, dim)

    def discard(self, i: int) -> None:
        p1 = self.prob_one(i)
        if p1 not in (0.0, 1.0):
            raise ContractViolation(
                f"cannot discard qubit {i}: not in a definite Z eigenstate (P1={p1})"
            )
        self._trace_out(i)
        self._assert_valid()

    def apply_pauli_channel(self, i: int, probs: Sequence[float], rand: float) -> str:
        base.validate_pauli_probs(probs)
        if not 0 <= i < self.n:
            raise IndexError(f"qubit index {i} out of range")
        out = probs[0] * self.rho
        for letter, p in zip("XYZ", probs[1:]):
            if p > 0.0:
                out = out + p * self._conjugate(base.GATES_1Q[letter], self.rho, [i])
        self.rho = out
        self._assert_valid()
        return "I"

    def expect_pauli(self, p: PauliString) -> float:
        if p.n != self.n:
            raise ValueError(f"Pauli length {p.n} != state size {self.n}")
        eye = np.eye(2, dtype=complex)
        mats = [base.GATES_1Q[c] if c != "I" else eye for c in reversed(p.letters)]
        full = reduce(np.kron, mats) if mats else np.array([[1.0]], dtype=complex)
        val = p.sign * float(np.sum(full * self.rho.T).real)
        return base.snap_expectation(val)

    def fidelity(self, reference) -> float:
        ref = reference.amps if hasattr(reference, "amps") else np.asarray(reference)
        if ref.size != self.rho.shape[0]:
            raise ValueError("reference size mismatch")
        return float((ref.conj() @ self.rho @ ref).real)

    def forget(self, i: int, rand: float) -> None:
        # Loss traces the qubit out exactly; no sampling on this backend.
        self._trace_out(i)
        self._assert_valid()
