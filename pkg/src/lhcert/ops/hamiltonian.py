"""Sums of local terms on N qubits: embedding, application and expectation values."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy.sparse.linalg import LinearOperator

from lhcert.errors import DenseCapError, DimensionError, ValidationError
from lhcert.models import LocalTerm, StateVector
from lhcert.ops.base import DEFAULT_DENSE_CAP, Hamiltonian
from lhcert.qcore.tensor import apply_local, embed_dense

logger = logging.getLogger(__name__)

IMAGINARY_TOL = 1e-8
NORM_WARN_TOL = 1e-10


@dataclass(eq=False)
class HamiltonianSpec(Hamiltonian):
    """H = H_1 + ... + H_r on n_qubits qubits with optional thresholds a < b."""

    n_qubits: int
    terms: list[LocalTerm] = field(default_factory=list)
    a: float | None = None
    b: float | None = None
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = list(self.terms)
        if self.n_qubits < 0:
            raise ValidationError(f"Qubit count must be non-negative, got {self.n_qubits}")
        for i, term in enumerate(self.terms):
            if term.qubits and max(term.qubits) >= self.n_qubits:
                raise ValidationError(
                    f"Term {i} acts on qubits {term.qubits}, out of range for {self.n_qubits} qubits"
                )
        if self.a is not None and self.b is not None and not self.b > self.a:
            raise ValidationError(f"Thresholds need b > a, got a={self.a}, b={self.b}")

    @property
    def dimension(self) -> int:
        return int(2**self.n_qubits)

    @property
    def term_count(self) -> int:
        return len(self.terms)

    @property
    def gap(self) -> float | None:
        return None if self.a is None or self.b is None else self.b - self.a

    @property
    def max_locality(self) -> int:
        return max((t.locality for t in self.terms), default=0)

    def matvec(self, vector: np.ndarray) -> np.ndarray:
        vector = np.asarray(vector, dtype=complex).reshape(-1)
        if vector.shape[0] != self.dimension:
            raise DimensionError(
                f"Vector of length {vector.shape[0]} does not match 2^{self.n_qubits}"
            )
        result = np.zeros(self.dimension, dtype=complex)
        for term in self.terms:
            result += apply_local(term.matrix, term.qubits, vector, self.n_qubits)
        return result

    def to_dense(self, dense_cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
        if self.dimension > dense_cap:
            raise DenseCapError(self.dimension, dense_cap)
        dense = np.zeros((self.dimension, self.dimension), dtype=complex)
        for term in self.terms:
            dense += embed_dense(term.matrix, term.qubits, self.n_qubits)
        return dense

    def describe(self) -> dict[str, Any]:
        return {
            "n_qubits": self.n_qubits,
            "terms": self.term_count,
            "max_locality": self.max_locality,
            "a": self.a,
            "b": self.b,
            **self.metadata,
        }


def embed(
    term: LocalTerm, n_qubits: int, dense_cap: int = DEFAULT_DENSE_CAP
) -> np.ndarray | LinearOperator:
    """Extend a term to all n_qubits: dense when 2^n <= dense_cap, matrix-free otherwise."""
    if term.qubits and max(term.qubits) >= n_qubits:
        raise DimensionError(f"Term qubits {term.qubits} out of range for {n_qubits} qubits")
    dim = 2**n_qubits
    if dim <= dense_cap:
        return embed_dense(term.matrix, term.qubits, n_qubits)

    def action(vector: np.ndarray) -> np.ndarray:
        return apply_local(term.matrix, term.qubits, np.asarray(vector).reshape(-1), n_qubits)

    return LinearOperator((dim, dim), matvec=action, rmatvec=action, dtype=complex)


def _as_vector(state: StateVector | np.ndarray, n_qubits: int) -> np.ndarray:
    if isinstance(state, StateVector):
        if state.m != n_qubits:
            raise DimensionError(f"State on {state.m} qubits, Hamiltonian on {n_qubits}")
        return state.amplitudes
    vector = np.asarray(state, dtype=complex).reshape(-1)
    if vector.shape[0] != 2**n_qubits:
        raise DimensionError(f"Vector of length {vector.shape[0]} does not match 2^{n_qubits}")
    return vector


def apply_hamiltonian(spec: HamiltonianSpec, state: StateVector | np.ndarray) -> np.ndarray:
    """Sum over terms of embed(H_i)|state>, in term-index order."""
    return spec.matvec(_as_vector(state, spec.n_qubits))


def expectation(spec: Hamiltonian, state: StateVector | np.ndarray) -> float:
    """<state|H|state> for a unit state; non-unit raw vectors are normalized with a warning."""
    if isinstance(spec, HamiltonianSpec):
        vector = _as_vector(state, spec.n_qubits)
    else:
        vector = np.asarray(state.amplitudes if isinstance(state, StateVector) else state, dtype=complex)
        if vector.shape[0] != spec.dimension:
            raise DimensionError(f"Vector of length {vector.shape[0]} does not match {spec.dimension}")

    norm_sq = float(np.vdot(vector, vector).real)
    if abs(norm_sq - 1.0) > NORM_WARN_TOL:
        if norm_sq == 0:
            raise ValidationError("Cannot take an expectation value in the zero vector")
        logger.warning(f"State has norm^2 {norm_sq:.12g}; normalizing before expectation")
        vector = vector / np.sqrt(norm_sq)

    value = np.vdot(vector, spec.matvec(vector))
    if abs(value.imag) > IMAGINARY_TOL:
        raise ValidationError(f"Expectation has imaginary part {value.imag:.3e}: non-Hermitian input")
    return float(value.real)
