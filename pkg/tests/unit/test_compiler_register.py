"""Tests for the register-clock reduction and history states."""

import logging

import numpy as np
import pytest

from lhcert.compiler import (
    compile_register_clock,
    history_amplitudes,
    history_state,
    propagation_term,
    rotation_R,
    thresholds,
)
from lhcert.errors import CompileError, DenseCapError, DimensionError, ValidationError
from lhcert.models import Circuit, Classification, ClockEncoding, StateVector
from lhcert.qcore import acceptance_probability, gate, run_circuit_history
from lhcert.spectral import clock_matrix, null_space
from tests.factories import identity_circuit, random_circuit, random_state


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


class TestThresholds:
    def test_small_t_refused(self):
        assert thresholds(1) == (None, None)

    def test_values(self):
        a, b = thresholds(2)
        assert a == pytest.approx(1 / 1024)
        assert b == pytest.approx(1 / 108)
        assert a < b

    def test_gap_stays_positive(self):
        for T in range(2, 30):
            a, b = thresholds(T)
            assert b > a


class TestCompileRegisterClock:
    def test_shape_and_term_count(self, rng):
        circuit = random_circuit(rng, 3, 4, n=2)
        h = compile_register_clock(circuit)
        assert h.dimension == 8 * 5
        assert h.term_count == 2 + 1 + 4
        assert [t.label for t in h.terms] == ["in[0]", "in[1]", "out", "prop[1]", "prop[2]", "prop[3]", "prop[4]"]

    def test_matvec_matches_dense(self, rng):
        circuit = random_circuit(rng, 3, 3)
        h = compile_register_clock(circuit)
        vector = rng.standard_normal(h.dimension) + 1j * rng.standard_normal(h.dimension)
        assert np.allclose(h.matvec(vector), h.to_dense() @ vector)

    def test_groups_sum_to_whole(self, rng):
        h = compile_register_clock(random_circuit(rng, 2, 3))
        total = sum(h.group_dense(name) for name in ("in", "out", "prop"))
        assert np.allclose(total, h.to_dense())

    def test_positive_semidefinite(self, rng):
        h = compile_register_clock(random_circuit(rng, 2, 4))
        assert np.linalg.eigvalsh(h.to_dense())[0] >= -1e-10

    def test_every_term_is_two_local_on_system(self, rng):
        h = compile_register_clock(random_circuit(rng, 4, 6))
        assert all(len(t.system_qubits) <= 2 for t in h.terms)

    def test_input_override(self):
        circuit = Circuit(m=2, gates=(gate("X", 0), gate("X", 1)), input_bits="00")
        h = compile_register_clock(circuit, "1")
        assert h.metadata["input_bits"] == "1"
        assert len(h.in_terms) == 1

    def test_bad_input_is_compile_error(self):
        circuit = Circuit(m=1, gates=(gate("X", 0),))
        with pytest.raises(CompileError, match="Cannot compile"):
            compile_register_clock(circuit, "012")

    def test_t1_refuses_thresholds(self, caplog):
        with caplog.at_level(logging.WARNING):
            h = compile_register_clock(Circuit(m=1, gates=(gate("X", 0),), input_bits="0"))
        assert not h.has_thresholds
        assert h.metadata["thresholds_refused"] is True
        assert "thresholds refused" in caplog.text

    def test_dense_cap(self, rng):
        h = compile_register_clock(random_circuit(rng, 3, 3))
        with pytest.raises(DenseCapError):
            h.to_dense(dense_cap=16)

    def test_matvec_dimension(self, rng):
        h = compile_register_clock(random_circuit(rng, 2, 2))
        with pytest.raises(DimensionError):
            h.matvec(np.ones(5))

    def test_unknown_group(self, rng):
        h = compile_register_clock(random_circuit(rng, 2, 2))
        with pytest.raises(ValidationError, match="Unknown term group"):
            h.group("clock")


class TestPropagation:
    def test_single_term_is_projector(self, rng):
        circuit = random_circuit(rng, 2, 3)
        term = propagation_term(circuit, 2)
        local = term.local_matrix()
        assert np.allclose(local @ local, local)

    def test_rotation_diagonalizes_propagation(self, rng):
        circuit = random_circuit(rng, 2, 4)
        h = compile_register_clock(circuit)
        rotation = rotation_R(circuit)
        rotated = rotation.conj().T @ h.group_dense("prop") @ rotation
        assert np.allclose(rotated, np.kron(np.eye(4), clock_matrix(4)))

    def test_rotation_is_unitary(self, rng):
        rotation = rotation_R(random_circuit(rng, 2, 3))
        assert np.allclose(rotation.conj().T @ rotation, np.eye(16))

    def test_rotation_cap(self, rng):
        with pytest.raises(DenseCapError):
            rotation_R(random_circuit(rng, 3, 3), dense_cap=31)


class TestHistoryState:
    def test_history_is_in_propagation_kernel(self, rng):
        circuit = random_circuit(rng, 3, 5)
        history = history_state(circuit)
        assert history.prop_residual == pytest.approx(0.0, abs=1e-10)
        assert history.in_residual == pytest.approx(0.0, abs=1e-10)

    def test_energy_equals_rejection_over_t_plus_one(self, rng):
        circuit = random_circuit(rng, 2, 4, n=1)
        witness = random_state(rng, 1)
        history = history_state(circuit, witness=witness)
        epsilon = 1 - acceptance_probability(circuit, witness)
        assert history.energy == pytest.approx(epsilon / 5, abs=1e-10)
        assert history.out_energy == pytest.approx(epsilon / 5, abs=1e-10)

    def test_time_leafs_are_uniform(self, rng):
        history = history_state(random_circuit(rng, 2, 3))
        assert np.allclose(history.time_leaf_weights(), 0.25)
        assert np.linalg.norm(history.amplitudes) == pytest.approx(1.0)

    def test_amplitudes_layout(self):
        circuit = identity_circuit(2, "1")
        amplitudes = history_amplitudes(run_circuit_history(circuit))
        # system |1> at every time: indices 1*3 + t
        expected = np.zeros(6)
        expected[3:] = 1 / np.sqrt(3)
        assert np.allclose(amplitudes, expected)

    def test_accepting_circuit_has_zero_ground_energy(self):
        circuit = Circuit(m=1, gates=(gate("X", 0), gate("I", 0)), input_bits="0")
        h = compile_register_clock(circuit)
        lam = np.linalg.eigvalsh(h.to_dense())[0]
        assert lam == pytest.approx(0.0, abs=1e-10)
        assert h.classify(lam) == Classification.YES

    def test_unary_and_register_energies_agree(self, rng):
        circuit = random_circuit(rng, 2, 3)
        register = history_state(circuit, encoding=ClockEncoding.REGISTER)
        unary = history_state(circuit, encoding="unary")
        assert unary.energy == pytest.approx(register.energy, abs=1e-10)
        assert unary.dimension == 2 ** (2 + 3)

    def test_witness_required(self):
        circuit = Circuit(m=2, gates=(gate("H", 1),), input_bits="0")
        with pytest.raises(DimensionError):
            history_state(circuit)
        assert history_state(circuit, witness=StateVector.basis("0")).T == 1

    @pytest.mark.parametrize(("m", "T"), [(1, 5), (2, 4), (3, 2)])
    def test_propagation_kernel_is_spanned_by_history_states(self, rng, m, T):  # noqa: N803
        circuit = random_circuit(rng, m, T)
        kernel = null_space(compile_register_clock(circuit).group_dense("prop"))
        assert kernel.shape == (2**m * (T + 1), 2**m)

        free = circuit.with_input("")
        histories = np.column_stack([
            history_amplitudes(run_circuit_history(free, StateVector.basis(format(s, f"0{m}b"))))
            for s in range(2**m)
        ])
        assert np.allclose(histories.conj().T @ histories, np.eye(2**m))
        assert np.allclose(kernel @ kernel.conj().T, histories @ histories.conj().T, atol=1e-10)
