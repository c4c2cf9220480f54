"""Pluggable quantum-state backends behind one joint-state interface.

Three representations of an n-qubit state share the ``JointState`` contract:

- ``ket``: dense statevector, pure states only;
- ``dm``: dense density matrix, exact mixed-state noise;
- ``stab``: stabilizer tableau, Clifford circuits at scale.

Protocol code is written once against the contract and runs on any of them.
"""

from .base import (
    DEFAULT_CAPS,
    GATE_ARITY,
    BackendKind,
    JointState,
    snap_probability,
)
from .dm import DmState
from .ket import KetState
from .pauli import PauliString
from .stab import StabState

_CLASSES = {
    BackendKind.KET: KetState,
    BackendKind.DM: DmState,
    BackendKind.STAB: StabState,
}


def new_state(kind: BackendKind, n: int, cap: int | None = None) -> JointState:
    """|0...0> on ``n`` qubits in the requested representation."""
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    return _CLASSES[kind](n, cap)


__all__ = [
    "BackendKind",
    "JointState",
    "KetState",
    "DmState",
    "StabState",
    "PauliString",
    "new_state",
    "snap_probability",
    "DEFAULT_CAPS",
    "GATE_ARITY",
]
