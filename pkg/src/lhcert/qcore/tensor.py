"""Local operator kernels under the qubit-0-most-significant convention."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from lhcert.errors import DimensionError


def _check_qubits(qubits: Sequence[int], n_qubits: int) -> None:
    if any(not 0 <= q < n_qubits for q in qubits):
        raise DimensionError(f"Qubits {tuple(qubits)} out of range for {n_qubits} qubits")


def apply_local(
    matrix: np.ndarray, qubits: Sequence[int], vector: np.ndarray, n_qubits: int
) -> np.ndarray:
    """Return (M on qubits, identity elsewhere) applied to a 2^n vector.

    Extra trailing axes of vector (e.g. a clock register) are carried along untouched.
    """
    _check_qubits(qubits, n_qubits)
    k = len(qubits)
    if vector.shape[0] != 2**n_qubits:
        raise DimensionError(f"Vector of length {vector.shape[0]} is not on {n_qubits} qubits")
    if k == 0:
        return complex(np.asarray(matrix).reshape(-1)[0]) * vector

    batch = vector.shape[1:]
    psi = vector.reshape((2,) * n_qubits + batch)
    op = np.asarray(matrix, dtype=complex).reshape((2,) * (2 * k))
    out = np.tensordot(op, psi, axes=(list(range(k, 2 * k)), list(qubits)))
    out = np.moveaxis(out, list(range(k)), list(qubits))
    return np.ascontiguousarray(out).reshape((2**n_qubits,) + batch)


def embed_dense(matrix: np.ndarray, qubits: Sequence[int], n_qubits: int) -> np.ndarray:
    """Materialize M on the listed qubits as a dense 2^n x 2^n matrix."""
    _check_qubits(qubits, n_qubits)
    rest = [q for q in range(n_qubits) if q not in qubits]
    full = np.kron(np.asarray(matrix, dtype=complex), np.eye(2 ** len(rest), dtype=complex))

    # full is indexed by (qubits..., rest...); move every axis back to its qubit slot
    order = list(qubits) + rest
    position = [order.index(q) for q in range(n_qubits)]
    perm = position + [n_qubits + p for p in position]
    tensor = full.reshape((2,) * (2 * n_qubits)).transpose(perm)
    return np.ascontiguousarray(tensor).reshape(2**n_qubits, 2**n_qubits)
