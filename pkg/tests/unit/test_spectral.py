"""Tests for eigensolvers, the clock walk and principal angles."""

import logging
import math

import numpy as np
import pytest
from scipy.linalg import hessenberg
from scipy.sparse.linalg import LinearOperator

from lhcert.errors import DenseCapError, SpectralError, ValidationError
from lhcert.ops import HamiltonianSpec
from lhcert.qcore import embed_dense, gate
from lhcert.spectral import (
    angle_bound,
    clock_matrix,
    clock_walk,
    dense_eigh,
    geometric_lemma_check,
    ground_energy,
    lanczos_min_eig,
    null_space,
    principal_angle,
    second_eigenvalue,
)
from tests.factories import random_psd, random_term


@pytest.fixture
def rng():
    return np.random.default_rng(31)


@pytest.fixture
def hamiltonian(rng):
    terms = [random_term(rng, 5, int(k)) for k in rng.integers(1, 4, size=8)]
    return HamiltonianSpec(n_qubits=5, terms=terms, a=0.01, b=0.5)


def sturm_count(diagonal: np.ndarray, off_diagonal: np.ndarray, x: float) -> int:
    """Eigenvalues below x of a Hermitian tridiagonal matrix, from the signs of det(T - xI) minors."""
    count, pivot = 0, 1.0
    for i, a in enumerate(diagonal):
        pivot = a - x - (abs(off_diagonal[i - 1]) ** 2 / pivot if i else 0.0)
        if pivot == 0:
            pivot = -1e-300
        count += int(pivot < 0)
    return count


def bisect_eigenvalues(matrix: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    tridiagonal = hessenberg(matrix)
    diagonal = np.real(np.diag(tridiagonal))
    off_diagonal = np.diag(tridiagonal, -1)
    radius = float(np.abs(matrix).sum(axis=1).max())
    roots = []
    for k in range(len(diagonal)):
        lo, hi = -radius, radius
        while hi - lo > tol:
            mid = (lo + hi) / 2
            if sturm_count(diagonal, off_diagonal, mid) > k:
                hi = mid
            else:
                lo = mid
        roots.append((lo + hi) / 2)
    return np.array(roots)


class TestDenseEigh:
    def test_ascending_spectrum(self, rng):
        report = dense_eigh(random_psd(rng, 6))
        assert np.all(np.diff(report.eigenvalues) >= 0)
        assert report.converged
        assert report.iterations == 6
        assert report.residual < 1e-10

    def test_non_hermitian(self):
        with pytest.raises(SpectralError) as exc:
            dense_eigh(np.array([[0, 1], [0, 0]]))
        assert exc.value.code == "NON_HERMITIAN"

    def test_not_square(self):
        with pytest.raises(SpectralError, match="square"):
            dense_eigh(np.zeros((2, 3)))

    def test_cap(self):
        with pytest.raises(DenseCapError):
            dense_eigh(np.eye(8), dense_cap=4)

    def test_null_space(self):
        basis = null_space(np.diag([0.0, 1.0, 0.0]))
        assert basis.shape == (3, 2)
        assert np.allclose(np.abs(basis[1]), 0)

    def test_second_eigenvalue(self):
        assert second_eigenvalue(np.array([0.0, 1e-12, 0.25, 1.0])) == 0.25
        assert second_eigenvalue(np.zeros(3)) is None

    def test_matches_bisection_on_characteristic_polynomial(self, rng):
        a = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
        matrix = (a + a.conj().T) / 2
        report = dense_eigh(matrix)
        vectors = report.eigenvectors
        reconstructed = vectors @ np.diag(report.eigenvalues) @ vectors.conj().T
        assert np.max(np.abs(reconstructed - matrix)) <= 1e-10
        assert np.allclose(report.eigenvalues, bisect_eigenvalues(matrix), atol=1e-8)

    def test_invariant_under_qubit_relabeling(self, rng):
        matrix = random_psd(rng, 8)
        swap = gate("SWAP", 0, 1).unitary
        # cyclic relabeling 0 -> 1 -> 2 -> 0 as a product of two swaps
        permutation = embed_dense(swap, (0, 2), 3) @ embed_dense(swap, (0, 1), 3)
        relabeled = permutation @ matrix @ permutation.T
        assert not np.allclose(relabeled, matrix)
        assert np.allclose(dense_eigh(relabeled).eigenvalues, dense_eigh(matrix).eigenvalues, atol=1e-10)


class TestLanczos:
    def test_matches_dense(self, hamiltonian):
        exact = dense_eigh(hamiltonian.to_dense()).ground_energy
        report = lanczos_min_eig(hamiltonian, seed=4)
        assert report.converged
        assert report.ground_energy == pytest.approx(exact, abs=1e-7)
        assert report.residual <= 1e-8

    def test_seeded_runs_are_identical(self, hamiltonian):
        first = lanczos_min_eig(hamiltonian, seed=11)
        second = lanczos_min_eig(hamiltonian, seed=11)
        assert first.ground_energy == second.ground_energy
        assert first.iterations == second.iterations

    def test_accepts_linear_operator(self, hamiltonian):
        report = lanczos_min_eig(hamiltonian.as_linear_operator(), seed=1)
        exact = dense_eigh(hamiltonian.to_dense()).ground_energy
        assert report.ground_energy == pytest.approx(exact, abs=1e-7)

    def test_accepts_callable_with_dimension(self):
        diagonal = np.arange(1.0, 9.0)
        report = lanczos_min_eig(lambda v: diagonal * v, dim=8)
        assert report.ground_energy == pytest.approx(1.0, abs=1e-8)

    def test_callable_needs_dimension(self):
        with pytest.raises(SpectralError, match="explicit dimension"):
            lanczos_min_eig(lambda v: v)

    def test_non_convergence_is_reported(self, hamiltonian, caplog):
        with caplog.at_level(logging.WARNING):
            report = lanczos_min_eig(hamiltonian, seed=2, max_iterations=2, tolerance=1e-14)
        assert not report.converged
        assert report.iterations == 2
        assert "did not converge" in caplog.text

    def test_ritz_value_bounds_ground_energy_from_above(self, hamiltonian):
        exact = dense_eigh(hamiltonian.to_dense()).ground_energy
        report = lanczos_min_eig(hamiltonian, seed=2, max_iterations=3)
        assert report.ground_energy >= exact - 1e-10

    def test_one_dimensional_operator(self):
        operator = LinearOperator((1, 1), matvec=lambda v: 0.5 * v, dtype=complex)
        report = lanczos_min_eig(operator)
        assert report.ground_energy == pytest.approx(0.5)
        assert report.converged


class TestGroundEnergy:
    def test_dispatch(self, hamiltonian):
        dense = ground_energy(hamiltonian, method="dense")
        lanczos = ground_energy(hamiltonian, method="lanczos", seed=5)
        assert dense.method == "dense"
        assert lanczos.method == "lanczos"
        assert lanczos.ground_energy == pytest.approx(dense.ground_energy, abs=1e-7)

    def test_unknown_method(self, hamiltonian):
        with pytest.raises(SpectralError, match="Unknown method"):
            ground_energy(hamiltonian, method="power")

    def test_dense_cap(self, hamiltonian):
        with pytest.raises(DenseCapError):
            ground_energy(hamiltonian, dense_cap=16)


class TestClockWalk:
    def test_t1_matrix(self):
        assert np.allclose(clock_matrix(1), [[0.5, -0.5], [-0.5, 0.5]])

    def test_walk_is_stochastic(self):
        walk = clock_walk(5)
        assert np.allclose(walk.B.sum(axis=1), 1.0)
        assert np.all(walk.B >= 0)

    def test_spectrum_is_path_laplacian(self):
        for T in (1, 2, 5, 12):
            walk = clock_walk(T)
            expected = 1 - np.cos(np.pi * np.arange(T + 1) / (T + 1))
            assert np.allclose(walk.eigenvalues, expected)

    def test_gap_bound_holds(self):
        for T in range(1, 40):
            walk = clock_walk(T)
            assert walk.conductance == pytest.approx(1 / (T + 1))
            assert walk.gap_holds

    def test_zero_steps(self):
        with pytest.raises(ValidationError):
            clock_walk(0)


class TestPrincipalAngle:
    def test_known_angle(self):
        angle = 0.3
        b1 = np.array([[1.0], [0.0]])
        b2 = np.array([[math.cos(angle)], [math.sin(angle)]])
        report = principal_angle(b1, b2)
        assert report.theta == pytest.approx(angle)
        assert report.sin2_theta == pytest.approx(math.sin(angle) ** 2)
        assert report.sin2_half_theta == pytest.approx(math.sin(angle / 2) ** 2)

    def test_shared_vector_gives_zero(self):
        b1 = np.eye(3)[:, :2]
        b2 = np.eye(3)[:, 1:]
        assert principal_angle(b1, b2).theta == pytest.approx(0.0)

    def test_orthogonal_subspaces(self):
        report = principal_angle(np.eye(4)[:, :2], np.eye(4)[:, 2:])
        assert report.cos_theta == pytest.approx(0.0)
        assert report.theta == pytest.approx(math.pi / 2)

    def test_bound_attached_when_steps_given(self):
        report = principal_angle(np.eye(2)[:, :1], np.eye(2)[:, 1:], T=3)
        assert report.bound == pytest.approx(1 / 8)
        assert report.lower_bound_check is True

    def test_not_orthonormal(self):
        with pytest.raises(SpectralError) as exc:
            principal_angle(np.array([[2.0], [0.0]]), np.eye(2)[:, :1])
        assert exc.value.code == "NOT_ORTHONORMAL"

    def test_empty_subspace(self):
        with pytest.raises(SpectralError) as exc:
            principal_angle(np.zeros((3, 0)), np.eye(3)[:, :1])
        assert exc.value.code == "EMPTY_SUBSPACE"

    def test_dimension_mismatch(self):
        with pytest.raises(SpectralError, match="dimensions"):
            principal_angle(np.eye(2)[:, :1], np.eye(3)[:, :1])

    def test_angle_bound_values(self):
        bound, half = angle_bound(2)
        assert bound == pytest.approx(1 / 6)
        assert half == pytest.approx((1 - math.sqrt(5 / 6)) / 2)


class TestGeometricLemma:
    def test_random_pairs(self, rng):
        for _ in range(10):
            h1 = random_psd(rng, 6, rank=3)
            h2 = random_psd(rng, 6, rank=3)
            report = geometric_lemma_check(h1, h2)
            assert report.holds
            assert not report.vacuous
            assert report.actual_min >= report.bound - 1e-10

    def test_full_rank_is_vacuous(self, rng):
        report = geometric_lemma_check(np.eye(4), random_psd(rng, 4, rank=2))
        assert report.vacuous
        assert report.theta == pytest.approx(math.pi / 2)
        assert report.holds

    def test_commuting_projectors_with_shared_kernel(self):
        h1 = np.diag([0.0, 1.0, 0.0])
        h2 = np.diag([0.0, 0.0, 1.0])
        report = geometric_lemma_check(h1, h2)
        assert report.theta == pytest.approx(0.0)
        assert report.bound == pytest.approx(0.0)
        assert report.actual_min == pytest.approx(0.0)

    def test_rejects_negative_operator(self):
        with pytest.raises(SpectralError, match="positive semi-definite"):
            geometric_lemma_check(np.diag([-1.0, 1.0]), np.eye(2))
