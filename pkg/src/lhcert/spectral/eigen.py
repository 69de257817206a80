"""Dense Hermitian eigendecomposition and matrix-free Lanczos for the smallest eigenvalue."""

from __future__ import annotations

import logging
from collections.abc import Callable
from typing import Union

import numpy as np
from scipy.sparse.linalg import LinearOperator

from lhcert.errors import DenseCapError, SpectralError
from lhcert.models import SpectralReport, max_abs
from lhcert.ops.base import DEFAULT_DENSE_CAP, Hamiltonian

logger = logging.getLogger(__name__)

EIGH_HERMITIAN_TOL = 1e-8
NULL_SPACE_TOL = 1e-9
LANCZOS_MAX_ITERATIONS = 500
LANCZOS_TOLERANCE = 1e-8
BREAKDOWN_TOL = 1e-12

Operator = Union[Hamiltonian, LinearOperator, Callable[[np.ndarray], np.ndarray]]


def dense_eigh(
    matrix: np.ndarray,
    hermitian_tol: float = EIGH_HERMITIAN_TOL,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> SpectralReport:
    """Full spectrum (ascending) and eigenvectors of a dense Hermitian matrix."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise SpectralError(f"Expected a square matrix, got shape {matrix.shape}")
    dim = matrix.shape[0]
    if dim > dense_cap:
        raise DenseCapError(dim, dense_cap)
    deviation = max_abs(matrix - matrix.conj().T)
    if deviation > hermitian_tol:
        raise SpectralError(f"Matrix is not Hermitian (deviation {deviation:.3e})", "NON_HERMITIAN")

    eigenvalues, eigenvectors = np.linalg.eigh((matrix + matrix.conj().T) / 2)
    residual = 0.0
    if dim:
        ground = eigenvectors[:, 0]
        residual = float(np.linalg.norm(matrix @ ground - eigenvalues[0] * ground))
    return SpectralReport(
        method="dense",
        eigenvalues=eigenvalues,
        residual=residual,
        iterations=dim,
        converged=True,
        eigenvectors=eigenvectors,
    )


def _resolve_operator(
    operator: Operator, dim: int | None
) -> tuple[Callable[[np.ndarray], np.ndarray], int]:
    if isinstance(operator, Hamiltonian):
        return operator.matvec, operator.dimension
    if isinstance(operator, LinearOperator):
        return lambda v: np.asarray(operator.matvec(v)).reshape(-1), operator.shape[0]
    if dim is None:
        raise SpectralError("A callable operator needs an explicit dimension")
    return operator, dim


def lanczos_min_eig(
    operator: Operator,
    dim: int | None = None,
    seed: int = 0,
    max_iterations: int = LANCZOS_MAX_ITERATIONS,
    tolerance: float = LANCZOS_TOLERANCE,
) -> SpectralReport:
    """Smallest eigenvalue of a Hermitian action by Lanczos with full reorthogonalization.

    The start vector is drawn from numpy's default_rng(seed), so the result is
    deterministic given the seed. Non-convergence within max_iterations is
    reported through converged=False and a warning.
    """
    apply, dim = _resolve_operator(operator, dim)
    if dim < 1:
        raise SpectralError("Operator dimension must be positive")

    rng = np.random.default_rng(seed)
    q = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    q /= np.linalg.norm(q)

    basis = np.zeros((dim, min(max_iterations, dim)), dtype=complex)
    alphas: list[float] = []
    betas: list[float] = []
    q_prev = np.zeros(dim, dtype=complex)
    beta = 0.0

    theta = 0.0
    ritz = q
    residual = np.inf
    converged = False
    iterations = 0

    for k in range(basis.shape[1]):
        basis[:, k] = q
        w = apply(q)
        alpha = float(np.vdot(q, w).real)
        w = w - alpha * q - beta * q_prev
        # full reorthogonalization, applied twice
        for _ in range(2):
            w -= basis[:, : k + 1] @ (basis[:, : k + 1].conj().T @ w)
        alphas.append(alpha)
        iterations = k + 1

        tri = np.diag(alphas) + np.diag(betas, 1) + np.diag(betas, -1)
        ritz_values, ritz_vectors = np.linalg.eigh(tri)
        theta = float(ritz_values[0])
        beta = float(np.linalg.norm(w))
        estimate = beta * abs(ritz_vectors[-1, 0])

        if estimate <= tolerance or beta <= BREAKDOWN_TOL or iterations == dim:
            ritz = basis[:, :iterations] @ ritz_vectors[:, 0]
            ritz /= np.linalg.norm(ritz)
            residual = float(np.linalg.norm(apply(ritz) - theta * ritz))
            if residual <= tolerance:
                converged = True
                break
            if beta <= BREAKDOWN_TOL:
                break

        logger.debug(f"Lanczos step {iterations}: theta={theta:.12g}, estimate={estimate:.3e}")
        betas.append(beta)
        q_prev, q = q, w / beta

    if not converged:
        ritz_vectors = np.linalg.eigh(
            np.diag(alphas) + np.diag(betas[: len(alphas) - 1], 1) + np.diag(betas[: len(alphas) - 1], -1)
        )[1]
        ritz = basis[:, :iterations] @ ritz_vectors[:, 0]
        ritz /= np.linalg.norm(ritz)
        residual = float(np.linalg.norm(apply(ritz) - theta * ritz))
        logger.warning(
            f"Lanczos did not converge in {iterations} iterations "
            f"(residual {residual:.3e} > {tolerance:.1e})"
        )

    return SpectralReport(
        method="lanczos",
        eigenvalues=np.array([theta]),
        residual=residual,
        iterations=iterations,
        converged=converged,
        eigenvectors=ritz.reshape(-1, 1),
    )


def ground_energy(
    hamiltonian: Hamiltonian,
    method: str = "dense",
    seed: int = 0,
    dense_cap: int = DEFAULT_DENSE_CAP,
    hermitian_tol: float = EIGH_HERMITIAN_TOL,
    max_iterations: int = LANCZOS_MAX_ITERATIONS,
    tolerance: float = LANCZOS_TOLERANCE,
) -> SpectralReport:
    """Dispatch to dense_eigh or lanczos_min_eig for a Hamiltonian."""
    if method == "dense":
        return dense_eigh(hamiltonian.to_dense(dense_cap), hermitian_tol, dense_cap)
    if method == "lanczos":
        return lanczos_min_eig(hamiltonian, seed=seed, max_iterations=max_iterations, tolerance=tolerance)
    raise SpectralError(f"Unknown method: {method}")


def null_space(matrix: np.ndarray, tol: float = NULL_SPACE_TOL, dense_cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
    """Orthonormal columns spanning the eigenvectors with eigenvalue below tol."""
    report = dense_eigh(matrix, dense_cap=dense_cap)
    assert report.eigenvectors is not None
    return report.eigenvectors[:, report.eigenvalues < tol]


def second_eigenvalue(eigenvalues: np.ndarray, tol: float = NULL_SPACE_TOL) -> float | None:
    """Smallest eigenvalue strictly above the null-space tolerance, None if there is none."""
    above = np.asarray(eigenvalues)[np.asarray(eigenvalues) >= tol]
    return float(np.min(above)) if above.size else None
