"""Abstract interface shared by every Hamiltonian representation."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any

import numpy as np
from scipy.sparse.linalg import LinearOperator

from lhcert.models import Classification

DEFAULT_DENSE_CAP = 4096
CLASSIFY_TOL = 1e-10


class Hamiltonian(ABC):
    """A sum of PSD terms with optional promise thresholds a < b."""

    a: float | None
    b: float | None

    @property
    @abstractmethod
    def dimension(self) -> int:
        """Dimension of the full Hilbert space."""

    @property
    @abstractmethod
    def term_count(self) -> int:
        """Number of terms r."""

    @abstractmethod
    def matvec(self, vector: np.ndarray) -> np.ndarray:
        """Apply H to a full-space vector, summing terms in index order."""

    @abstractmethod
    def to_dense(self, dense_cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
        """Assemble the dense matrix, refusing dimensions above dense_cap."""

    @abstractmethod
    def describe(self) -> dict[str, Any]:
        """Metadata summary for reports."""

    def as_linear_operator(self) -> LinearOperator:
        return LinearOperator(
            (self.dimension, self.dimension),
            matvec=self.matvec,
            rmatvec=self.matvec,
            dtype=complex,
        )

    @property
    def has_thresholds(self) -> bool:
        return self.a is not None and self.b is not None

    def classify(self, lambda_min: float, tol: float = CLASSIFY_TOL) -> Classification:
        """YES if lambda_min <= a, NO if lambda_min >= b, UNDECIDED otherwise."""
        if self.a is None or self.b is None:
            return Classification.UNDECIDED
        if lambda_min <= self.a + tol:
            return Classification.YES
        if lambda_min >= self.b - tol:
            return Classification.NO
        return Classification.UNDECIDED
