"""Clock walk: the tridiagonal clock matrix A, its random walk B = I - A and the gap bound."""

from __future__ import annotations

import logging

import numpy as np

from lhcert.errors import ValidationError
from lhcert.models import ClockWalk
from lhcert.spectral.eigen import dense_eigh

logger = logging.getLogger(__name__)


def clock_matrix(T: int) -> np.ndarray:  # noqa: N803
    """(T+1)x(T+1) matrix with diagonal (1/2, 1, ..., 1, 1/2) and -1/2 off the diagonal."""
    if T < 1:
        raise ValidationError(f"Clock walk needs T >= 1, got {T}")
    diagonal = np.ones(T + 1)
    diagonal[0] = diagonal[-1] = 0.5
    off = -0.5 * np.ones(T)
    return np.diag(diagonal) + np.diag(off, 1) + np.diag(off, -1)


def clock_walk(T: int) -> ClockWalk:  # noqa: N803
    """Build A and B, and compare the second eigenvalue of A with phi^2/2 for phi = 1/(T+1)."""
    A = clock_matrix(T)  # noqa: N806
    B = np.eye(T + 1) - A  # noqa: N806
    conductance = 1.0 / (T + 1)
    eigenvalues = dense_eigh(A).eigenvalues
    walk = ClockWalk(
        T=T,
        A=A,
        B=B,
        conductance=conductance,
        gap_bound=conductance**2 / 2,
        eigenvalues=eigenvalues,
        second_eigenvalue=float(eigenvalues[1]),
    )
    logger.debug(
        f"Clock walk T={T}: second eigenvalue {walk.second_eigenvalue:.6g} "
        f"vs bound {walk.gap_bound:.6g}"
    )
    return walk
