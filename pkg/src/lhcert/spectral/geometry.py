"""Principal angles between null spaces and the two-operator geometrical lemma."""

from __future__ import annotations

import logging
import math

import numpy as np
import scipy.linalg

from lhcert.errors import SpectralError
from lhcert.models import AngleReport, LemmaReport, SpectralReport, max_abs
from lhcert.ops.base import DEFAULT_DENSE_CAP
from lhcert.spectral.eigen import NULL_SPACE_TOL, dense_eigh, second_eigenvalue

logger = logging.getLogger(__name__)

ORTHONORMAL_TOL = 1e-8
LEMMA_TOL = 1e-10


def _check_orthonormal(basis: np.ndarray, name: str) -> np.ndarray:
    basis = np.asarray(basis, dtype=complex)
    if basis.ndim == 1:
        basis = basis.reshape(-1, 1)
    gram = basis.conj().T @ basis
    deviation = max_abs(gram - np.eye(basis.shape[1]))
    if deviation > ORTHONORMAL_TOL:
        raise SpectralError(f"{name} is not orthonormal (deviation {deviation:.3e})", "NOT_ORTHONORMAL")
    return basis


def angle_bound(T: int) -> tuple[float, float]:  # noqa: N803
    """Lower bounds on sin^2(theta) and the implied sin^2(theta/2) for a rejecting instance."""
    bound = 1.0 / (2 * (T + 1))
    return bound, (1 - math.sqrt(1 - bound)) / 2


def principal_angle(
    basis1: np.ndarray, basis2: np.ndarray, T: int | None = None  # noqa: N803
) -> AngleReport:
    """Minimal angle between span(basis1) and span(basis2) from the top singular value of B1^dag B2.

    When T is given, the report carries the rejecting-instance bound
    sin^2(theta) >= 1/(2(T+1)) and its half-angle form.
    """
    b1 = _check_orthonormal(basis1, "First basis")
    b2 = _check_orthonormal(basis2, "Second basis")
    if b1.shape[0] != b2.shape[0]:
        raise SpectralError(f"Bases live in dimensions {b1.shape[0]} and {b2.shape[0]}")
    if b1.shape[1] == 0 or b2.shape[1] == 0:
        raise SpectralError("Principal angle of an empty subspace is undefined", "EMPTY_SUBSPACE")

    singular_values = scipy.linalg.svdvals(b1.conj().T @ b2)
    cos_theta = float(np.clip(singular_values[0], 0.0, 1.0))
    theta = math.acos(cos_theta)
    bound, half_bound = angle_bound(T) if T is not None else (None, None)
    return AngleReport(
        dim_N1=b1.shape[1],
        dim_N2=b2.shape[1],
        cos_theta=cos_theta,
        theta=theta,
        sin2_theta=1.0 - cos_theta**2,
        sin2_half_theta=math.sin(theta / 2) ** 2,
        bound=bound,
        half_angle_bound=half_bound,
    )


def geometric_lemma_check(
    h1: np.ndarray,
    h2: np.ndarray,
    null_tol: float = NULL_SPACE_TOL,
    dense_cap: int = DEFAULT_DENSE_CAP,
    tolerance: float = LEMMA_TOL,
    spectra: tuple[SpectralReport, SpectralReport] | None = None,
) -> LemmaReport:
    """Check lambda_min(H1 + H2) >= lambda sin^2(theta/2) for PSD H1, H2.

    lambda is the smaller of the two "second" eigenvalues (smallest above the
    null-space tolerance) and theta the angle between the null spaces. An
    empty null space makes the lemma vacuous; theta is then reported as pi/2.
    spectra, when given, are the dense spectra of h1 and h2 already computed
    by the caller.
    """
    if spectra is None:
        spectra = (dense_eigh(h1, dense_cap=dense_cap), dense_eigh(h2, dense_cap=dense_cap))
    first, second = spectra
    for name, report in (("H1", first), ("H2", second)):
        if report.eigenvalues[0] < -null_tol:
            raise SpectralError(
                f"{name} is not positive semi-definite (smallest eigenvalue {report.eigenvalues[0]:.3e})"
            )

    gaps = [
        gap
        for gap in (
            second_eigenvalue(first.eigenvalues, null_tol),
            second_eigenvalue(second.eigenvalues, null_tol),
        )
        if gap is not None
    ]
    lam = min(gaps) if gaps else 0.0
    actual_min = float(dense_eigh(np.asarray(h1) + np.asarray(h2), dense_cap=dense_cap).eigenvalues[0])

    assert first.eigenvectors is not None and second.eigenvectors is not None
    n1 = first.eigenvectors[:, first.eigenvalues < null_tol]
    n2 = second.eigenvectors[:, second.eigenvalues < null_tol]
    vacuous = n1.shape[1] == 0 or n2.shape[1] == 0
    theta = math.pi / 2 if vacuous else principal_angle(n1, n2).theta

    bound = lam * math.sin(theta / 2) ** 2
    holds = actual_min >= bound - tolerance
    if not holds:
        logger.warning(f"Geometrical lemma violated: {actual_min:.6g} < {bound:.6g}")
    return LemmaReport(lam=lam, theta=theta, bound=bound, actual_min=actual_min, holds=holds, vacuous=vacuous)
