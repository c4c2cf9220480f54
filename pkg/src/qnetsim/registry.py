"""Global qubit registry: handles, lifecycle, and joint-state slot tracking.

Every qubit in the simulation is addressed by a handle that is issued once and
never reused. The registry maps live handles to (state, slot) pairs, merges
joint states lazily when a multi-qubit gate spans them, and discards slots as
qubits are measured or lost. It is owned by the network controller and is the
single authority on entanglement grouping.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import ConfigurationError, LifecycleError
from .qstate import BackendKind, JointState, PauliString, new_state


class Phase(enum.Enum):
    LIVE = "live"
    MEASURED = "measured"
    LOST = "lost"


@dataclass
class Entry:
    handle: int
    phase: Phase
    state_id: Optional[int]  # None unless LIVE
    slot: Optional[int]
    owner: Optional[int]  # node id; None while in flight
    in_flight: bool = False
    outcome: Optional[int] = None  # set when MEASURED


class QubitRegistry:
    """Handle bookkeeping over the active backend's joint states.

    ``emit`` is the trace hook (event type, payload); ``rng`` supplies one
    uniform variate per random decision, in event-execution order. Entanglement
    group events cover only multi-qubit groups (singletons carry no
    entanglement) and fire exactly when that partition changes: on merges and
    on departures from multi-qubit states.

    ``debug_checks`` turns on an exhaustive referential-integrity assertion
    after every mutation; it is O(total handles), so it stays off outside
    tests.
    """

    def __init__(
        self,
        backend: BackendKind,
        rng,
        emit: Optional[Callable[..., None]] = None,
        cap: Optional[int] = None,
        debug_checks: bool = False,
    ):
        self.backend = backend
        self.rng = rng
        self.emit = emit or (lambda event_type, **payload: None)
        self.cap = cap
        self.debug_checks = debug_checks
        self.entries: dict[int, Entry] = {}
        self.states: dict[int, JointState] = {}
        self._slot_handles: dict[int, list[int]] = {}  # state_id -> handle per slot
        self._multi: dict[int, list[int]] = {}  # state_id -> handles, size >= 2 only
        self._next_handle = 0
        self._next_state_id = 0

    # -- lookups ---------------------------------------------------------

    def entry(self, handle: int) -> Entry:
        try:
            return self.entries[handle]
        except KeyError:
            raise LifecycleError(f"unknown qubit handle {handle}") from None

    def _live_entry(self, handle: int) -> Entry:
        e = self.entry(handle)
        if e.phase is not Phase.LIVE:
            raise LifecycleError(f"qubit {handle} is {e.phase.value}, not live")
        return e

    def state_of(self, handle: int) -> JointState:
        return self.states[self._live_entry(handle).state_id]

    def outcome_of(self, handle: int) -> int:
        e = self.entry(handle)
        if e.phase is not Phase.MEASURED:
            raise LifecycleError(f"qubit {handle} is {e.phase.value}, not measured")
        return e.outcome

    def live_handles(self) -> list[int]:
        return [h for h, e in self.entries.items() if e.phase is Phase.LIVE]

    # -- creation --------------------------------------------------------

    def alloc_qubit(self, owner: int) -> int:
        if self.backend is None:
            raise ConfigurationError("quantum-state backend not set")
        handle = self._next_handle
        self._next_handle += 1
        sid = self._next_state_id
        self._next_state_id += 1
        self.states[sid] = new_state(self.backend, 1, self.cap)
        self._slot_handles[sid] = [handle]
        self.entries[handle] = Entry(handle, Phase.LIVE, sid, 0, owner)
        self.emit("qubit_create", node=owner, qubit=handle)
        self._debug_check()
        return handle

    # -- gates -----------------------------------------------------------

    def _merge_states(self, sid_a: int, sid_b: int) -> int:
        a, b = self.states.pop(sid_a), self.states.pop(sid_b)
        handles_a, handles_b = self._slot_handles.pop(sid_a), self._slot_handles.pop(sid_b)
        self._multi.pop(sid_a, None)
        self._multi.pop(sid_b, None)
        merged = a.merge(b)
        sid = self._next_state_id
        self._next_state_id += 1
        handles = handles_a + handles_b
        self.states[sid] = merged
        self._slot_handles[sid] = handles
        self._multi[sid] = handles
        for off, h in enumerate(handles):
            e = self.entries[h]
            e.state_id = sid
            e.slot = off
        return sid

    def _emit_egroup(self) -> None:
        groups = sorted(sorted(g) for g in self._multi.values())
        self.emit("egroup", groups=groups)

    def apply(self, gate: str, handles: Sequence[int]) -> None:
        """Apply a gate across handles, merging their joint states if needed."""
        entries = [self._live_entry(h) for h in handles]
        for e in entries:
            if e.in_flight:
                raise LifecycleError(f"qubit {e.handle} is in flight")
        sid = entries[0].state_id
        merged = False
        for e in entries[1:]:
            if e.state_id != sid:
                sid = self._merge_states(sid, e.state_id)
                merged = True
        targets = [self.entries[h].slot for h in handles]
        self.states[sid].apply_gate(gate, targets)
        self.emit("gate", name=gate, qubits=list(handles))
        if merged:
            self._emit_egroup()
        self._debug_check()

    # -- slot removal ------------------------------------------------------

    def _drop_slot(self, e: Entry, collapse: Callable[[JointState, int], None]) -> bool:
        """Remove e's slot from its joint state via ``collapse``; returns True
        if the qubit left a multi-qubit state (the egroup partition changed)."""
        sid, slot = e.state_id, e.slot
        state = self.states[sid]
        was_multi = state.n >= 2
        collapse(state, slot)
        handles = self._slot_handles[sid]
        handles.pop(slot)
        for h in handles[slot:]:
            self.entries[h].slot -= 1
        if not handles:
            del self.states[sid]
            del self._slot_handles[sid]
            self._multi.pop(sid, None)
        elif len(handles) == 1:
            self._multi.pop(sid, None)
        e.state_id = None
        e.slot = None
        e.owner = None
        return was_multi

    # -- measurement -----------------------------------------------------

    def measure(self, handle: int, basis: str = "Z") -> int:
        """Destructive measurement; X basis is realized as H then Z."""
        if basis not in ("Z", "X"):
            raise ValueError(f"unsupported basis {basis!r}")
        e = self._live_entry(handle)
        if e.in_flight:
            raise LifecycleError(f"qubit {handle} is in flight")
        state = self.states[e.state_id]
        if basis == "X":
            state.apply_gate("H", [e.slot])
        outcome = state.measure_z(e.slot, self.rng.random())
        e.phase = Phase.MEASURED
        e.outcome = outcome
        changed = self._drop_slot(e, lambda s, slot: s.discard(slot))
        self.emit("measure", qubit=handle, basis=basis, outcome=outcome)
        if changed:
            self._emit_egroup()
        self._debug_check()
        return outcome

    def measure_bell(self, h0: int, h1: int) -> tuple[int, int]:
        """Bell-basis measurement of two qubits: CNOT, H, then two Z reads."""
        if h0 == h1:
            raise ValueError("bell measurement needs two distinct qubits")
        self._live_entry(h0)
        self._live_entry(h1)
        self.apply("CNOT", [h0, h1])
        self.apply("H", [h0])
        b0 = self.measure(h0, "Z")
        b1 = self.measure(h1, "Z")
        return b0, b1

    def apply_channel(self, handle: int, probs: Sequence[float]) -> str:
        """Single-qubit Pauli channel on a handle. Valid on in-flight qubits:
        channels act on qubits in transit. Draws one variate regardless of
        backend so random streams stay aligned across backends."""
        e = self._live_entry(handle)
        state = self.states[e.state_id]
        return state.apply_pauli_channel(e.slot, probs, self.rng.random())

    def lose(self, handle: int) -> None:
        """Qubit loss: drop the slot, projecting the remaining partners
        (exact trace-out on DM, unrecorded measurement on Ket/Stab)."""
        e = self._live_entry(handle)
        rand = self.rng.random()
        changed = self._drop_slot(e, lambda s, slot: s.forget(slot, rand))
        e.phase = Phase.LOST
        if changed:
            self._emit_egroup()
        self._debug_check()

    # -- verification oracles (non-collapsing) ----------------------------

    def expect_pauli(self, ops: dict[int, str], sign: int = 1) -> float:
        """Expectation of a Pauli acting on the given handles (identity on the
        rest of their joint state). All handles must share one joint state."""
        sids = {self._live_entry(h).state_id for h in ops}
        if len(sids) != 1:
            raise ValueError("handles span multiple joint states")
        sid = sids.pop()
        state = self.states[sid]
        slot_ops = {self.entries[h].slot: letter for h, letter in ops.items()}
        return state.expect_pauli(PauliString.from_ops(state.n, slot_ops, sign))

    def fidelity(self, handles: Sequence[int], reference: np.ndarray) -> float:
        """Fidelity of the joint state of ``handles`` against a reference ket
        whose bit k corresponds to handles[k]. The handles must make up an
        entire joint state (no partial-trace fidelity)."""
        sids = {self._live_entry(h).state_id for h in handles}
        if len(sids) != 1:
            raise ValueError("handles span multiple joint states")
        sid = sids.pop()
        state = self.states[sid]
        if state.n != len(handles):
            raise ValueError("handles do not cover their joint state")
        ref = np.asarray(reference, dtype=complex)
        perm = [self.entries[h].slot for h in handles]
        idx = np.arange(2**state.n)
        src = np.zeros_like(idx)
        for k, slot in enumerate(perm):
            src |= ((idx >> slot) & 1) << k
        return state.fidelity(ref[src])

    # -- grouping ---------------------------------------------------------

    def entanglement_groups(self) -> list[list[int]]:
        """Partition of live handles by joint state (singletons included)."""
        groups = [sorted(hs) for hs in self._slot_handles.values()]
        return sorted(groups)

    def _debug_check(self) -> None:
        if self.debug_checks:
            assert self._integrity_ok()

    def _integrity_ok(self) -> bool:
        seen = set()
        for h, e in self.entries.items():
            if e.phase is Phase.LIVE:
                if e.state_id not in self.states:
                    return False
                if not 0 <= e.slot < self.states[e.state_id].n:
                    return False
                if (e.state_id, e.slot) in seen:
                    return False
                seen.add((e.state_id, e.slot))
                if self._slot_handles[e.state_id][e.slot] != h:
                    return False
        total = sum(s.n for s in self.states.values())
        if total != len(seen):
            return False
        multi_expected = {
            sid: hs for sid, hs in self._slot_handles.items() if len(hs) >= 2
        }
        return self._multi == multi_expected
