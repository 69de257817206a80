"""Gate constructors over the standard gate library."""

from __future__ import annotations

import numpy as np

from lhcert.models import Gate, GateName

SELF_INVERSE_GATES = (
    GateName.I,
    GateName.X,
    GateName.Y,
    GateName.Z,
    GateName.H,
    GateName.CNOT,
    GateName.CZ,
    GateName.SWAP,
)


def gate(name: str | GateName, *targets: int) -> Gate:
    """Build a named gate, e.g. gate("CNOT", 0, 1)."""
    return Gate(GateName(name), tuple(targets))


def custom_gate(matrix: np.ndarray, *targets: int) -> Gate:
    return Gate(GateName.CUSTOM, tuple(targets), np.asarray(matrix, dtype=complex))


def adjoint(g: Gate) -> Gate:
    """Inverse gate; self-inverse named gates stay named."""
    if g.name in SELF_INVERSE_GATES:
        return g
    return custom_gate(g.unitary.conj().T, *g.targets)


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary from the QR decomposition of a complex Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases
