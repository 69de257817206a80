"""Tests for local-term Hamiltonians."""

import logging

import numpy as np
import pytest
from scipy.sparse.linalg import LinearOperator

from lhcert.errors import DenseCapError, DimensionError, ValidationError
from lhcert.models import Classification, LocalTerm, StateVector
from lhcert.ops import HamiltonianSpec, apply_hamiltonian, embed, expectation
from lhcert.qcore import embed_dense, gate
from tests.factories import random_state, random_term

PROJ_1 = np.diag([0.0, 1.0])


@pytest.fixture
def rng():
    return np.random.default_rng(99)


@pytest.fixture
def spec(rng):
    terms = [random_term(rng, 4, k) for k in (1, 2, 3, 2)]
    return HamiltonianSpec(n_qubits=4, terms=terms, a=0.1, b=0.5)


class TestHamiltonianSpec:
    def test_dense_is_sum_of_embeddings(self, spec):
        expected = sum(embed_dense(t.matrix, t.qubits, 4) for t in spec.terms)
        assert np.allclose(spec.to_dense(), expected)

    def test_matvec_matches_dense(self, spec, rng):
        vector = random_state(rng, 4).amplitudes
        assert np.allclose(spec.matvec(vector), spec.to_dense() @ vector)

    def test_linear_operator(self, spec, rng):
        vector = random_state(rng, 4).amplitudes
        assert np.allclose(spec.as_linear_operator() @ vector, spec.matvec(vector))

    def test_properties(self, spec):
        assert spec.dimension == 16
        assert spec.term_count == 4
        assert spec.max_locality == 3
        assert spec.gap == pytest.approx(0.4)

    def test_thresholds_must_be_ordered(self):
        with pytest.raises(ValidationError, match="b > a"):
            HamiltonianSpec(n_qubits=1, terms=[], a=0.5, b=0.5)

    def test_term_out_of_range(self):
        with pytest.raises(ValidationError, match="out of range"):
            HamiltonianSpec(n_qubits=1, terms=[LocalTerm((1,), PROJ_1)])

    def test_dense_cap(self, spec):
        with pytest.raises(DenseCapError) as exc:
            spec.to_dense(dense_cap=8)
        assert exc.value.dimension == 16

    def test_matvec_dimension(self, spec):
        with pytest.raises(DimensionError):
            spec.matvec(np.ones(8))

    def test_describe_merges_metadata(self):
        h = HamiltonianSpec(n_qubits=2, terms=[LocalTerm((0,), PROJ_1)], metadata={"encoding": "test"})
        assert h.describe()["encoding"] == "test"
        assert h.describe()["terms"] == 1


class TestClassify:
    def test_bands(self, spec):
        assert spec.classify(0.05) == Classification.YES
        assert spec.classify(0.1) == Classification.YES
        assert spec.classify(0.3) == Classification.UNDECIDED
        assert spec.classify(0.5) == Classification.NO

    def test_no_thresholds_is_undecided(self):
        h = HamiltonianSpec(n_qubits=1, terms=[LocalTerm((0,), PROJ_1)])
        assert not h.has_thresholds
        assert h.classify(0.0) == Classification.UNDECIDED


class TestEmbed:
    def test_dense_below_cap(self):
        matrix = embed(LocalTerm((1,), PROJ_1), 2)
        assert isinstance(matrix, np.ndarray)
        assert np.allclose(matrix, np.kron(np.eye(2), PROJ_1))

    def test_matrix_free_above_cap(self, rng):
        term = random_term(rng, 3, 2)
        operator = embed(term, 3, dense_cap=4)
        assert isinstance(operator, LinearOperator)
        vector = random_state(rng, 3).amplitudes
        assert np.allclose(operator @ vector, embed_dense(term.matrix, term.qubits, 3) @ vector)

    def test_out_of_range(self):
        with pytest.raises(DimensionError):
            embed(LocalTerm((2,), PROJ_1), 2)

    def test_sum_of_embeddings_matches_apply_hamiltonian(self, rng):
        first, second = random_term(rng, 3, 2), random_term(rng, 3, 1)
        spec = HamiltonianSpec(n_qubits=3, terms=[first, second])
        for _ in range(5):
            vector = random_state(rng, 3).amplitudes
            summed = embed(first, 3) @ vector + embed(second, 3) @ vector
            assert np.max(np.abs(summed - apply_hamiltonian(spec, vector))) <= 1e-13

    def test_reversed_qubits_with_swapped_matrix(self, rng):
        swap = gate("SWAP", 0, 1).unitary
        term = random_term(rng, 4, 2)
        i, j = term.qubits
        flipped = LocalTerm((j, i), swap @ term.matrix @ swap)
        assert np.max(np.abs(embed(flipped, 4) - embed(term, 4))) <= 1e-12


class TestExpectation:
    def test_basis_state_energy(self):
        h = HamiltonianSpec(n_qubits=2, terms=[LocalTerm((0,), PROJ_1), LocalTerm((1,), PROJ_1)])
        assert expectation(h, StateVector.basis("11")) == pytest.approx(2.0)
        assert expectation(h, StateVector.basis("10")) == pytest.approx(1.0)

    def test_apply_hamiltonian_matches_matvec(self, spec, rng):
        state = random_state(rng, 4)
        assert np.allclose(apply_hamiltonian(spec, state), spec.to_dense() @ state.amplitudes)

    def test_expectation_in_spectrum_range(self, spec, rng):
        eigenvalues = np.linalg.eigvalsh(spec.to_dense())
        value = expectation(spec, random_state(rng, 4))
        assert eigenvalues[0] - 1e-10 <= value <= eigenvalues[-1] + 1e-10

    def test_raw_vector_is_normalized_with_warning(self, caplog):
        h = HamiltonianSpec(n_qubits=1, terms=[LocalTerm((0,), PROJ_1)])
        with caplog.at_level(logging.WARNING):
            value = expectation(h, np.array([0.0, 2.0]))
        assert value == pytest.approx(1.0)
        assert "normalizing" in caplog.text

    def test_zero_vector(self):
        h = HamiltonianSpec(n_qubits=1, terms=[LocalTerm((0,), PROJ_1)])
        with pytest.raises(ValidationError, match="zero vector"):
            expectation(h, np.zeros(2))

    def test_state_size_mismatch(self, spec):
        with pytest.raises(DimensionError):
            expectation(spec, StateVector.basis("01"))
