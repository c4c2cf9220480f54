"""Signed multi-qubit Pauli strings, used as verification observables."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_VALID = frozenset("IXYZ")


@dataclass(frozen=True)
class PauliString:
    """Letters indexed by qubit: ``letters[i]`` acts on qubit i."""

    letters: str
    sign: int = 1

    def __post_init__(self):
        if not set(self.letters) <= _VALID:
            raise ValueError(f"invalid Pauli letters {self.letters!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def n(self) -> int:
        return len(self.letters)

    @classmethod
    def from_ops(cls, n: int, ops: dict[int, str], sign: int = 1) -> "PauliString":
        """Build an n-qubit string from {qubit index: letter}, identity elsewhere."""
        letters = ["I"] * n
        for i, letter in ops.items():
            if not 0 <= i < n:
                raise IndexError(f"qubit {i} out of range for {n}-qubit Pauli")
            letters[i] = letter
        return cls("".join(letters), sign)

    def x_bits(self) -> np.ndarray:
        return np.frombuffer(
            bytes(1 if c in "XY" else 0 for c in self.letters), dtype=np.uint8
        ).copy()

    def z_bits(self) -> np.ndarray:
        return np.frombuffer(
            bytes(1 if c in "ZY" else 0 for c in self.letters), dtype=np.uint8
        ).copy()

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.letters
