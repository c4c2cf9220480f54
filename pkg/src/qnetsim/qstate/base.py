"""Shared contract and gate tables for the quantum-state backends."""

from __future__ import annotations

import enum
from abc import ABC, abstractmethod
from typing import Sequence

import numpy as np

from ..errors import CapacityError
from .pauli import PauliString

# Tolerances: state invariants (norm/trace/Hermiticity) and probability sums.
STATE_TOL = 1e-9
PROB_SUM_TOL = 1e-12


class BackendKind(enum.Enum):
    KET = "ket"
    DM = "dm"
    STAB = "stab"

    @classmethod
    def parse(cls, name: str) -> "BackendKind":
        try:
            return cls(name.lower())
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown backend {name!r} (valid: {valid})") from None


# Memory-bound qubit caps per backend (overridable per state).
DEFAULT_CAPS = {BackendKind.KET: 14, BackendKind.DM: 7, BackendKind.STAB: 4096}

_SQ2 = 1.0 / np.sqrt(2.0)

GATES_1Q = {
    "H": np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
}

# Two-qubit index convention: basis index = bit(first target) * 2 + bit(second).
GATES_2Q = {
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
}

GATE_ARITY = {**{g: 1 for g in GATES_1Q}, **{g: 2 for g in GATES_2Q}}

PAULI_LETTERS = ("I", "X", "Y", "Z")


def snap_probability(p: float) -> float:
    """Clamp to [0, 1] and snap values within 1e-9 of {0, 1/2, 1} exactly.

    The gate set is purely Clifford, so on pure states every single-qubit
    Z-outcome probability is exactly 0, 1/2 or 1; snapping strips float dirt
    so deterministic branches stay deterministic and equal-probability draws
    resolve identically on every backend. Genuinely intermediate mixed-state
    probabilities (possible under exact density-matrix noise) are > 1e-9 away
    from the anchors for any sane noise parameter and pass through untouched.
    """
    p = min(max(p, 0.0), 1.0)
    for anchor in (0.0, 0.5, 1.0):
        if abs(p - anchor) <= 1e-9:
            return anchor
    return p


def snap_expectation(v: float) -> float:
    """Clamp to [-1, 1] and snap values within 1e-9 of {-1, 0, +1} exactly.

    Pure stabilizer states give Pauli expectations of exactly -1, 0 or +1;
    the snap makes the dense backends report those cases as exactly as the
    tableau backend does. Intermediate mixed-state values pass through.
    """
    v = min(max(v, -1.0), 1.0)
    for anchor in (-1.0, 0.0, 1.0):
        if abs(v - anchor) <= 1e-9:
            return anchor
    return v


def validate_targets(gate: str, targets: Sequence[int], n: int) -> None:
    if gate not in GATE_ARITY:
        raise ValueError(f"unknown gate {gate!r}")
    if len(targets) != GATE_ARITY[gate]:
        raise ValueError(
            f"{gate} takes {GATE_ARITY[gate]} target(s), got {len(targets)}"
        )
    for t in targets:
        if not 0 <= t < n:
            raise IndexError(f"qubit index {t} out of range for {n}-qubit state")
    if len(set(targets)) != len(targets):
        raise ValueError(f"repeated target in {tuple(targets)}")


def validate_pauli_probs(probs: Sequence[float]) -> None:
    if len(probs) != 4:
        raise ValueError("expected (p_I, p_X, p_Y, p_Z)")
    if any(p < 0 for p in probs):
        raise ValueError("negative Pauli probability")
    if abs(sum(probs) - 1.0) > PROB_SUM_TOL:
        raise ValueError(f"Pauli probabilities sum to {sum(probs)!r}, not 1")


def sample_pauli(probs: Sequence[float], rand: float) -> str:
    """Pick one letter from cumulative (I, X, Y, Z) order at position ``rand``."""
    acc = 0.0
    for letter, p in zip(PAULI_LETTERS, probs):
        acc += p
        if rand < acc:
            return letter
    return "Z"


class JointState(ABC):
    """An n-qubit joint state. Qubit i is bit i of the basis index."""

    kind: BackendKind

    def __init__(self, n: int, cap: int | None = None):
        cap = DEFAULT_CAPS[self.kind] if cap is None else cap
        if n < 0 or n > cap:
            raise CapacityError(
                f"{self.kind.value} backend holds at most {cap} qubits, requested {n}"
            )
        self.cap = cap

    @property
    @abstractmethod
    def n(self) -> int:
        """Qubit count."""

    @abstractmethod
    def apply_gate(self, gate: str, targets: Sequence[int]) -> None:
        """Apply one of H, X, Y, Z, S, CNOT, CZ in place."""

    @abstractmethod
    def measure_z(self, i: int, rand: float) -> int:
        """Z-measure qubit i, collapsing in place. Outcome 1 iff rand < P(1)
        when probabilistic; deterministic outcomes ignore ``rand``.
        """

    @abstractmethod
    def merge(self, other: "JointState") -> "JointState":
        """Tensor product self (low qubit indices) with other (shifted up)."""

    @abstractmethod
    def discard(self, i: int) -> None:
        """Remove qubit i, which must be in a definite Z eigenstate; higher
        qubit indices shift down by one.
        """

    @abstractmethod
    def apply_pauli_channel(
        self, i: int, probs: Sequence[float], rand: float
    ) -> str:
        """Single-qubit Pauli channel. Exact mixture on DM (returns "I");
        one sampled trajectory letter on Ket/Stab.
        """

    @abstractmethod
    def expect_pauli(self, p: PauliString) -> float:
        """Expectation value of the signed Pauli string, in [-1, 1]."""

    @abstractmethod
    def forget(self, i: int, rand: float) -> None:
        """Drop qubit i regardless of its state (used for qubit loss): partial
        trace on DM; measure-with-unrecorded-outcome then discard on Ket/Stab.
        """

    def _check_merge_cap(self, other: "JointState") -> None:
        if self.n + other.n > self.cap:
            raise CapacityError(
                f"{self.kind.value} backend: merged size {self.n + other.n} "
                f"exceeds cap {self.cap}"
            )
