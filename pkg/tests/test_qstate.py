"""Backend contract tests: each representation alone, then cross-equivalence."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from qnetsim.errors import CapacityError, ContractViolation, UnsupportedOperation
from qnetsim.qstate import (
    BackendKind,
    DmState,
    KetState,
    PauliString,
    StabState,
    new_state,
)
from qnetsim.qstate.kernels import available

ALL_KINDS = list(BackendKind)


def bell_pair(kind):
    s = new_state(kind, 2)
    s.apply_gate("H", [0])
    s.apply_gate("CNOT", [0, 1])
    return s


# -- construction -----------------------------------------------------------


def test_new_ket_is_all_zeros():
    s = new_state(BackendKind.KET, 1)
    assert np.allclose(s.amps, [1, 0])


def test_new_dm_is_all_zeros():
    s = new_state(BackendKind.DM, 1)
    assert np.allclose(s.rho, np.diag([1, 0]))


def test_new_stab_generators():
    s = new_state(BackendKind.STAB, 2)
    assert s.stabilizer_strings() == ["+ZI", "+IZ"]


@pytest.mark.parametrize("kind,cap", [(BackendKind.KET, 14), (BackendKind.DM, 7)])
def test_capacity_error_names_backend(kind, cap):
    with pytest.raises(CapacityError, match=kind.value):
        new_state(kind, cap + 1)


def test_merge_capacity_error():
    a = new_state(BackendKind.DM, 4)
    b = new_state(BackendKind.DM, 4)
    with pytest.raises(CapacityError, match="dm"):
        a.merge(b)


# -- gates -------------------------------------------------------------------


def test_bell_amplitudes():
    s = bell_pair(BackendKind.KET)
    assert np.allclose(s.amps, oracles.BELL_PHI_PLUS)


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_x_twice_is_identity(kind):
    s = new_state(kind, 1)
    s.apply_gate("X", [0])
    s.apply_gate("X", [0])
    assert s.measure_z(0, 0.99) == 0


def test_stab_h_gives_plus_stabilizer():
    s = new_state(BackendKind.STAB, 1)
    s.apply_gate("H", [0])
    assert s.stabilizer_strings() == ["+X"]


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_gate_validation(kind):
    s = new_state(kind, 2)
    with pytest.raises(IndexError):
        s.apply_gate("X", [2])
    with pytest.raises(ValueError):
        s.apply_gate("CNOT", [1, 1])
    with pytest.raises(ValueError):
        s.apply_gate("CNOT", [0])
    with pytest.raises(ValueError):
        s.apply_gate("T", [0])


# -- measurement --------------------------------------------------------------


@pytest.mark.parametrize("kind", ALL_KINDS)
@pytest.mark.parametrize("rand", [0.0, 0.5, 0.999])
def test_measure_one_state_deterministic(kind, rand):
    s = new_state(kind, 1)
    s.apply_gate("X", [0])
    assert s.measure_z(0, rand) == 1
    assert s.measure_z(0, rand) == 1  # unchanged by measurement


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_measure_plus_follows_rand_rule(kind):
    # Outcome 1 iff rand < P(1); for |+> P(1) = 1/2 exactly.
    s = new_state(kind, 1)
    s.apply_gate("H", [0])
    assert s.measure_z(0, 0.3) == 1
    assert s.measure_z(0, 0.9) == 1  # collapsed to |1>

    s = new_state(kind, 1)
    s.apply_gate("H", [0])
    assert s.measure_z(0, 0.5) == 0
    assert s.measure_z(0, 0.2) == 0


@pytest.mark.parametrize("kind", ALL_KINDS)
@pytest.mark.parametrize("rands", [(0.1, 0.7), (0.9, 0.2), (0.49, 0.51)])
def test_bell_outcomes_perfectly_correlated(kind, rands):
    s = bell_pair(kind)
    assert s.measure_z(0, rands[0]) == s.measure_z(1, rands[1])


def test_bell_marginal_is_half_over_seeds():
    # Frozen oracle expectation: projector probability of outcome 1 is 1/2,
    # so the outcome equals (rand < 0.5) for every trial.
    rng = np.random.default_rng(1234)
    for _ in range(200):
        r = float(rng.random())
        s = bell_pair(BackendKind.KET)
        assert s.measure_z(0, r) == (1 if r < 0.5 else 0)


# -- merge ---------------------------------------------------------------------


def test_merge_bit_order():
    zero = new_state(BackendKind.KET, 1)
    one = new_state(BackendKind.KET, 1)
    one.apply_gate("X", [0])
    merged = zero.merge(one)  # |0>_q0 (x) |1>_q1
    assert np.allclose(merged.amps, [0, 0, 1, 0])


def test_merge_stab_generators():
    merged = new_state(BackendKind.STAB, 1).merge(new_state(BackendKind.STAB, 1))
    assert merged.stabilizer_strings() == ["+ZI", "+IZ"]
    merged.validate()


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_merge_bell_with_fresh_qubit(kind):
    merged = bell_pair(kind).merge(new_state(kind, 1))
    assert merged.n == 3
    for rand in (0.0, 0.999):
        copy = bell_pair(kind).merge(new_state(kind, 1))
        assert copy.measure_z(2, rand) == 0


# -- discard ---------------------------------------------------------------------


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_measure_then_discard_bell_half(kind):
    s = bell_pair(kind)
    outcome = s.measure_z(1, 0.9)  # 0.9 >= 0.5 -> outcome 0
    assert outcome == 0
    s.discard(1)
    assert s.n == 1
    assert s.measure_z(0, 0.9) == 0


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_discard_only_qubit_gives_empty_state(kind):
    s = new_state(kind, 1)
    s.measure_z(0, 0.5)
    s.discard(0)
    assert s.n == 0


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_discard_undetermined_qubit_rejected(kind):
    s = new_state(kind, 1)
    s.apply_gate("H", [0])
    with pytest.raises(ContractViolation):
        s.discard(0)


def test_dm_discard_preserves_trace():
    s = bell_pair(BackendKind.DM)
    s.apply_pauli_channel(0, (0.5, 0.5, 0.0, 0.0), 0.0)  # mix of |00>,|11> terms
    s.measure_z(1, 0.7)
    s.discard(1)
    assert abs(np.trace(s.rho).real - 1.0) < 1e-9


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_discard_middle_qubit_shifts_indices(kind):
    # GHZ3, measure + discard the middle qubit; the outer two stay correlated.
    s = new_state(kind, 3)
    s.apply_gate("H", [0])
    s.apply_gate("CNOT", [0, 1])
    s.apply_gate("CNOT", [1, 2])
    outcome = s.measure_z(1, 0.8)
    s.discard(1)
    assert s.n == 2
    sign = 1 if outcome == 0 else -1
    assert s.expect_pauli(PauliString("ZZ")) == 1.0
    assert s.expect_pauli(PauliString("ZI")) == sign
    assert s.expect_pauli(PauliString("IZ")) == sign


# -- pauli channels ----------------------------------------------------------------


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_identity_channel_is_noop(kind):
    s = bell_pair(kind)
    assert s.apply_pauli_channel(0, (1.0, 0.0, 0.0, 0.0), 0.99) == "I"
    assert s.expect_pauli(PauliString("XX")) == 1.0
    assert s.expect_pauli(PauliString("ZZ")) == 1.0


def test_channel_prob_sum_violation():
    s = new_state(BackendKind.KET, 1)
    with pytest.raises(ValueError):
        s.apply_pauli_channel(0, (0.5, 0.5, 0.5, 0.0), 0.1)


def test_ket_channel_samples_letter():
    s = new_state(BackendKind.KET, 1)
    assert s.apply_pauli_channel(0, (0.0, 1.0, 0.0, 0.0), 0.42) == "X"
    assert np.allclose(s.amps, [0, 1])


def test_ket_channel_cumulative_order():
    # Cumulative (I, X, Y, Z): with probs (.25,.25,.25,.25) rand picks by quarter.
    for rand, letter in ((0.1, "I"), (0.3, "X"), (0.6, "Y"), (0.9, "Z")):
        s = new_state(BackendKind.KET, 1)
        assert s.apply_pauli_channel(0, (0.25, 0.25, 0.25, 0.25), rand) == letter


def test_dm_depolarizing_fidelity_matches_kraus_oracle():
    # Oracle: explicit four-term Kraus sum on one Bell half.
    for p in (0.0, 0.2, 1.0):
        rho_oracle = oracles.kraus_apply(
            oracles.dm(oracles.BELL_PHI_PLUS), oracles.depolarizing_kraus(p, 1, 2)
        )
        expected = oracles.dm_fidelity(rho_oracle, oracles.BELL_PHI_PLUS)
        assert abs(expected - (1 - 3 * p / 4)) < 1e-12  # closed form cross-check

        s = bell_pair(BackendKind.DM)
        s.apply_pauli_channel(1, (1 - 3 * p / 4, p / 4, p / 4, p / 4), 0.77)
        assert abs(s.fidelity(oracles.BELL_PHI_PLUS) - expected) < 1e-12


def test_dm_remains_positive_after_channels():
    s = bell_pair(BackendKind.DM)
    s.apply_pauli_channel(0, (0.4, 0.3, 0.2, 0.1), 0.0)
    s.apply_pauli_channel(1, (0.7, 0.0, 0.0, 0.3), 0.0)
    eigs = np.linalg.eigvalsh(s.rho)
    assert eigs.min() >= -1e-9
    assert abs(eigs.sum() - 1.0) < 1e-9


# -- expectations and fidelity ---------------------------------------------------------


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_bell_stabilizer_expectations(kind):
    s = bell_pair(kind)
    assert s.expect_pauli(PauliString("XX")) == 1.0
    assert s.expect_pauli(PauliString("ZZ")) == 1.0
    assert s.expect_pauli(PauliString("ZZ", sign=-1)) == -1.0


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_plus_state_z_expectation_zero(kind):
    s = new_state(kind, 1)
    s.apply_gate("H", [0])
    assert s.expect_pauli(PauliString("Z")) == 0.0


def test_fidelity_bell_states():
    s = bell_pair(BackendKind.KET)
    assert abs(s.fidelity(oracles.BELL_PHI_PLUS) - 1.0) < 1e-12
    assert abs(s.fidelity(oracles.BELL_PHI_MINUS)) < 1e-12


def test_fidelity_unsupported_on_stab():
    with pytest.raises(UnsupportedOperation):
        bell_pair(BackendKind.STAB).fidelity(oracles.BELL_PHI_PLUS)


# -- cross-backend equivalence -----------------------------------------------------------

GATE_POOL_1Q = ("H", "X", "Y", "Z", "S")
GATE_POOL_2Q = ("CNOT", "CZ")


def circuit_strategy(n, max_len=24):
    gate_1q = st.tuples(
        st.sampled_from(GATE_POOL_1Q), st.integers(0, n - 1)
    ).map(lambda g: (g[0], [g[1]]))
    gate_2q = st.tuples(
        st.sampled_from(GATE_POOL_2Q),
        st.integers(0, n - 1),
        st.integers(0, n - 2),
    ).map(lambda g: (g[0], [g[1], (g[1] + 1 + g[2]) % n]))
    return st.lists(st.one_of(gate_1q, gate_2q), max_size=max_len)


@settings(max_examples=60, deadline=None)
@given(circuit=circuit_strategy(3), data=st.data())
def test_stab_probabilities_match_ket_projectors(circuit, data):
    # Brute-force oracle: tableau outcome probabilities are the statevector
    # projector probabilities, exactly 0, 1/2 or 1.
    ket = new_state(BackendKind.KET, 3)
    stab = new_state(BackendKind.STAB, 3)
    for gate, targets in circuit:
        ket.apply_gate(gate, targets)
        stab.apply_gate(gate, targets)
    psi = oracles.run_circuit(3, circuit)
    for i in range(3):
        p_oracle = oracles.prob_one(psi, i)
        p_snapped = {0.0: 0.0, 0.5: 0.5, 1.0: 1.0}[round(p_oracle, 6)]
        assert ket.prob_one(i) == p_snapped
        assert stab.prob_one(i) == p_snapped
    # Same rand stream on every backend yields the same outcomes.
    rand = data.draw(st.floats(min_value=0.0, max_value=0.999))
    dm_state = new_state(BackendKind.DM, 3)
    for gate, targets in circuit:
        dm_state.apply_gate(gate, targets)
    outcomes = {ket.measure_z(0, rand), stab.measure_z(0, rand), dm_state.measure_z(0, rand)}
    assert len(outcomes) == 1


@settings(max_examples=40, deadline=None)
@given(circuit=circuit_strategy(4))
def test_expect_pauli_agrees_across_backends(circuit):
    states = {kind: new_state(kind, 4) for kind in ALL_KINDS}
    for gate, targets in circuit:
        for s in states.values():
            s.apply_gate(gate, targets)
    for letters in ("XXXX", "ZZZZ", "ZIXI", "IYIZ", "XYZX"):
        p = PauliString(letters)
        vals = {kind: states[kind].expect_pauli(p) for kind in ALL_KINDS}
        assert vals[BackendKind.STAB] in (-1.0, 0.0, 1.0)
        assert vals[BackendKind.KET] == vals[BackendKind.STAB]
        assert abs(vals[BackendKind.KET] - vals[BackendKind.DM]) < 1e-9


@settings(max_examples=40, deadline=None)
@given(circuit=circuit_strategy(4), rands=st.lists(
    st.floats(min_value=0.0, max_value=0.999), min_size=4, max_size=4))
def test_tableau_invariants_hold_after_ops(circuit, rands):
    s = new_state(BackendKind.STAB, 4)
    for gate, targets in circuit:
        s.apply_gate(gate, targets)
    s.validate()
    for i, rand in enumerate(rands):
        s.measure_z(0, rand)
        s.validate()
        s.discard(0)
        s.validate()
        if s.n == 0:
            break


# -- kernel implementations cross-check ------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(circuit=circuit_strategy(4), rands=st.lists(
    st.floats(min_value=0.0, max_value=0.999), min_size=2, max_size=2))
def test_compiled_and_python_kernels_agree(circuit, rands):
    kernels = available()
    if len(kernels) < 2:
        pytest.skip("compiled kernels not built")
    states = [StabState(4, kernel=k) for k in kernels]
    for gate, targets in circuit:
        for s in states:
            s.apply_gate(gate, targets)
    for rand in rands:
        outcomes = {s.measure_z(1, rand) for s in states}
        assert len(outcomes) == 1
    ref = states[0]
    for other in states[1:]:
        assert np.array_equal(ref.x, other.x)
        assert np.array_equal(ref.z, other.z)
        assert np.array_equal(ref.r, other.r)
