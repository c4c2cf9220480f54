"""Registry behavior: handles, lifecycle, merging, Bell measurement algebra."""

import itertools
import random

import numpy as np
import pytest

import oracles
from qnetsim.errors import LifecycleError
from qnetsim.qstate import BackendKind
from qnetsim.registry import Phase, QubitRegistry

ALL_KINDS = list(BackendKind)


class Forced:
    """Fixed variates first, then a seeded stream."""

    def __init__(self, forced, seed=0):
        self._forced = list(forced)
        self._rng = random.Random(seed)

    def random(self):
        return self._forced.pop(0) if self._forced else self._rng.random()


def make_registry(kind=BackendKind.KET, rng=None, emit=None):
    return QubitRegistry(kind, rng or random.Random(0), emit=emit, debug_checks=True)


# -- allocation ---------------------------------------------------------------


def test_first_allocation_gets_handle_zero():
    reg = make_registry()
    assert reg.alloc_qubit(owner=0) == 0
    assert reg.state_of(0).n == 1


def test_two_allocations_are_singleton_groups():
    reg = make_registry()
    a, b = reg.alloc_qubit(0), reg.alloc_qubit(0)
    assert reg.entanglement_groups() == [[a], [b]]


def test_handles_never_reused():
    reg = make_registry()
    handles = [reg.alloc_qubit(0) for _ in range(100)]
    assert handles == list(range(100))
    for h in handles:
        reg.measure(h)
    assert reg.alloc_qubit(0) == 100


# -- gates and merging ----------------------------------------------------------


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_bell_creation_merges_groups(kind):
    reg = make_registry(kind)
    a, b = reg.alloc_qubit(0), reg.alloc_qubit(0)
    reg.apply("H", [a])
    reg.apply("CNOT", [a, b])
    assert reg.entry(a).state_id == reg.entry(b).state_id
    assert reg.entanglement_groups() == [[a, b]]


def test_gate_within_one_state_does_not_change_groups():
    reg = make_registry()
    a, b = reg.alloc_qubit(0), reg.alloc_qubit(0)
    reg.apply("H", [a])
    reg.apply("CNOT", [a, b])
    before = reg.entanglement_groups()
    reg.apply("CNOT", [a, b])
    assert reg.entanglement_groups() == before


def test_gate_on_measured_handle_is_lifecycle_error():
    reg = make_registry()
    a = reg.alloc_qubit(0)
    reg.measure(a)
    with pytest.raises(LifecycleError, match="measured"):
        reg.apply("X", [a])


def test_merge_order_independence_of_partition():
    def build(order):
        reg = make_registry(BackendKind.STAB)
        hs = [reg.alloc_qubit(0) for _ in range(4)]
        for a, b in order:
            reg.apply("CZ", [hs[a], hs[b]])
        return reg.entanglement_groups()

    orders = [((0, 1), (1, 2), (2, 3)), ((2, 3), (0, 1), (1, 2)), ((1, 2), (2, 3), (0, 1))]
    partitions = {tuple(map(tuple, build(o))) for o in orders}
    assert len(partitions) == 1


# -- measurement -------------------------------------------------------------------


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_fresh_qubit_measures_zero(kind):
    reg = make_registry(kind)
    assert reg.measure(reg.alloc_qubit(0), "Z") == 0


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_x_basis_measure_of_plus_is_zero(kind):
    reg = make_registry(kind)
    h = reg.alloc_qubit(0)
    reg.apply("H", [h])
    assert reg.measure(h, "X") == 0


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_bell_halves_measure_equal(kind):
    for seed in range(8):
        reg = make_registry(kind, rng=random.Random(seed))
        a, b = reg.alloc_qubit(0), reg.alloc_qubit(0)
        reg.apply("H", [a])
        reg.apply("CNOT", [a, b])
        assert reg.measure(a) == reg.measure(b)


def test_bell_marginal_from_projector_oracle():
    # Oracle: P(1) = 1/2, so outcome tracks rand exactly.
    for r in (0.1, 0.49, 0.5, 0.9):
        reg = make_registry(rng=Forced([r]))
        a, b = reg.alloc_qubit(0), reg.alloc_qubit(0)
        reg.apply("H", [a])
        reg.apply("CNOT", [a, b])
        assert reg.measure(a) == (1 if r < 0.5 else 0)


def test_measured_outcome_is_retained():
    reg = make_registry()
    h = reg.alloc_qubit(0)
    reg.apply("X", [h])
    assert reg.measure(h) == 1
    assert reg.outcome_of(h) == 1
    assert reg.entry(h).phase is Phase.MEASURED


# -- bell measurement ------------------------------------------------------------------


def oracle_bell_measurement(state_vector):
    """Circuit-algebra oracle: CNOT(0->1), H(0), read both bits."""
    psi = oracles.full_unitary(oracles.CNOT, [0, 1], 2) @ state_vector
    psi = oracles.full_unitary(oracles.H, [0], 2) @ psi
    probs = np.abs(psi) ** 2
    idx = int(np.argmax(probs))
    assert abs(probs[idx] - 1.0) < 1e-12, "oracle expects a deterministic branch"
    return idx & 1, (idx >> 1) & 1


# Frozen from the oracle below; (b0, b1) per Bell input.
BELL_TO_BITS = {
    "phi_plus": (0, 0),
    "phi_minus": (1, 0),
    "psi_plus": (0, 1),
    "psi_minus": (1, 1),
}
BELL_VECTORS = {
    "phi_plus": oracles.BELL_PHI_PLUS,
    "phi_minus": oracles.BELL_PHI_MINUS,
    "psi_plus": oracles.BELL_PSI_PLUS,
    "psi_minus": oracles.BELL_PSI_MINUS,
}


def test_oracle_confirms_frozen_bell_mapping():
    for name, vec in BELL_VECTORS.items():
        assert oracle_bell_measurement(vec) == BELL_TO_BITS[name]


@pytest.mark.parametrize("kind", ALL_KINDS)
@pytest.mark.parametrize("name", sorted(BELL_VECTORS))
def test_measure_bell_maps_bell_basis_to_bits(kind, name):
    prep = {
        "phi_plus": [],
        "phi_minus": [("Z", 0)],
        "psi_plus": [("X", 1)],
        "psi_minus": [("Z", 0), ("X", 1)],
    }[name]
    reg = make_registry(kind)
    a, b = reg.alloc_qubit(0), reg.alloc_qubit(0)
    reg.apply("H", [a])
    reg.apply("CNOT", [a, b])
    for gate, which in prep:
        reg.apply(gate, [(a, b)[which]])
    assert reg.measure_bell(a, b) == BELL_TO_BITS[name]


def test_measure_bell_rejects_same_handle():
    reg = make_registry()
    h = reg.alloc_qubit(0)
    with pytest.raises(ValueError):
        reg.measure_bell(h, h)


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_teleportation_identity_on_every_branch(kind):
    # Enumerate all four (b0, b1) branches with forced variates and check the
    # correction convention X^b1 then Z^b0 restores |+> at the receiver.
    for r0, r1 in itertools.product((0.75, 0.25), repeat=2):
        reg = make_registry(kind, rng=Forced([r0, r1]))
        res_a, res_b = reg.alloc_qubit(0), reg.alloc_qubit(0)
        reg.apply("H", [res_a])
        reg.apply("CNOT", [res_a, res_b])
        payload = reg.alloc_qubit(0)
        reg.apply("H", [payload])
        b0, b1 = reg.measure_bell(payload, res_a)
        assert (b0, b1) == (1 if r0 < 0.5 else 0, 1 if r1 < 0.5 else 0)
        if b1:
            reg.apply("X", [res_b])
        if b0:
            reg.apply("Z", [res_b])
        assert reg.expect_pauli({res_b: "X"}) == 1.0
        assert reg.measure(res_b, "X") == 0


# -- grouping ----------------------------------------------------------------------------


def test_groups_after_three_allocs():
    reg = make_registry()
    hs = [reg.alloc_qubit(0) for _ in range(3)]
    assert reg.entanglement_groups() == [[h] for h in hs]


def test_measuring_half_a_pair_leaves_singleton():
    reg = make_registry()
    a, b = reg.alloc_qubit(0), reg.alloc_qubit(0)
    reg.apply("H", [a])
    reg.apply("CNOT", [a, b])
    reg.measure(a)
    assert reg.entanglement_groups() == [[b]]


def test_egroup_events_only_on_multiqubit_changes():
    events = []
    reg = QubitRegistry(
        BackendKind.KET,
        random.Random(0),
        emit=lambda event_type, **p: events.append((event_type, p)),
    )
    a, b = reg.alloc_qubit(0), reg.alloc_qubit(0)
    assert [e for e in events if e[0] == "egroup"] == []
    reg.apply("H", [a])
    reg.apply("CNOT", [a, b])
    assert [p["groups"] for k, p in events if k == "egroup"] == [[[a, b]]]
    reg.measure(a)
    assert [p["groups"] for k, p in events if k == "egroup"][-1] == []


def test_integrity_holds_through_random_workload():
    rng = random.Random(42)
    reg = make_registry(BackendKind.STAB, rng=rng)
    live = [reg.alloc_qubit(0) for _ in range(6)]
    for _ in range(200):
        action = rng.random()
        if action < 0.4 and len(live) >= 2:
            a, b = rng.sample(live, 2)
            reg.apply("CZ", [a, b])
        elif action < 0.6 and live:
            reg.apply("H", [rng.choice(live)])
        elif action < 0.8 and live:
            live.remove(h := rng.choice(live))
            reg.measure(h)
        else:
            live.append(reg.alloc_qubit(0))
        assert reg._integrity_ok()
        assert sum(s.n for s in reg.states.values()) == len(live)
