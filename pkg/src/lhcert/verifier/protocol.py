"""Random-term verifier: pick a term uniformly, measure it through an ancilla coin."""

from __future__ import annotations

import logging
import math

import numpy as np

from lhcert.errors import DimensionError, ValidationError
from lhcert.models import AcceptanceEstimate, LocalTerm, StateVector, TermDecomposition, max_abs
from lhcert.ops.hamiltonian import HamiltonianSpec, expectation
from lhcert.qcore.tensor import apply_local
from lhcert.spectral.eigen import dense_eigh

logger = logging.getLogger(__name__)

WEIGHT_TOL = 1e-10
PROBABILITY_TOL = 1e-10


def decompose_term(term: LocalTerm) -> TermDecomposition:
    """Spectral decomposition sum_j w_j |alpha_j><alpha_j| with w_j in [0, 1]."""
    report = dense_eigh(term.matrix)
    weights = report.eigenvalues
    if weights[0] < -WEIGHT_TOL or weights[-1] > 1 + WEIGHT_TOL:
        raise ValidationError(
            f"Term eigenvalues [{weights[0]:.3e}, {weights[-1]:.6g}] fall outside [0, 1]"
        )
    assert report.eigenvectors is not None
    return TermDecomposition(weights=np.clip(weights, 0.0, 1.0), vectors=report.eigenvectors)


def coin_unitary(decomposition: TermDecomposition) -> np.ndarray:
    """Unitary T on (term qubits) x (ancilla, least significant).

    T|alpha_j>|0> = |alpha_j>(sqrt(w_j)|0> + sqrt(1 - w_j)|1>).
    """
    dim = decomposition.vectors.shape[0]
    rotations = np.zeros((2 * dim, 2 * dim), dtype=complex)
    for j, w in enumerate(decomposition.weights):
        stay, flip = math.sqrt(w), math.sqrt(1.0 - w)
        rotations[2 * j : 2 * j + 2, 2 * j : 2 * j + 2] = [[stay, -flip], [flip, stay]]
    basis = np.kron(decomposition.vectors, np.eye(2))
    return basis @ rotations @ basis.conj().T


def _clip_probability(value: float, what: str) -> float:
    if value < -PROBABILITY_TOL or value > 1 + PROBABILITY_TOL:
        raise ValidationError(f"{what} {value:.6g} outside [0, 1]")
    return min(1.0, max(0.0, value))


def coin_probability(term: LocalTerm, state: StateVector) -> float:
    """Probability that the ancilla reads 1, i.e. 1 - <state|H_i|state>."""
    if term.qubits and max(term.qubits) >= state.m:
        raise DimensionError(f"Term qubits {term.qubits} out of range for a {state.m}-qubit state")
    local = apply_local(term.matrix, term.qubits, state.amplitudes, state.m)
    value = np.vdot(state.amplitudes, local)
    return _clip_probability(1.0 - float(value.real), "Coin probability")


def ancilla_coin_probability(term: LocalTerm, state: StateVector) -> float:
    """Same probability by explicitly appending an ancilla and applying coin_unitary."""
    unitary = coin_unitary(decompose_term(term))
    extended = np.kron(state.amplitudes, np.array([1.0, 0.0], dtype=complex))
    out = apply_local(unitary, (*term.qubits, state.m), extended, state.m + 1)
    return float(np.sum(np.abs(out[1::2]) ** 2))


def protocol_accept_probability(
    spec: HamiltonianSpec,
    state: StateVector,
    shots: int = 0,
    seed: int = 0,
) -> AcceptanceEstimate:
    """Exact 1 - <H>/r and, with shots > 0, a seeded Monte Carlo estimate of the same.

    Each shot draws a term index uniformly and then a coin with that term's
    coin_probability on a fresh copy of the state.
    """
    r = spec.term_count
    if r == 0:
        raise ValidationError("Verifier needs at least one term")
    if shots < 0:
        raise ValidationError(f"Shot count must be non-negative, got {shots}")
    if state.m != spec.n_qubits:
        raise DimensionError(f"Witness has {state.m} qubits, Hamiltonian acts on {spec.n_qubits}")

    exact = _clip_probability(1.0 - expectation(spec, state) / r, "Acceptance probability")

    sampled = None
    standard_error = 0.0
    if shots:
        coins = np.array([coin_probability(term, state) for term in spec.terms])
        rng = np.random.default_rng(seed)
        indices = rng.integers(0, r, size=shots)
        accepted = rng.random(shots) < coins[indices]
        sampled = float(np.mean(accepted))
        standard_error = math.sqrt(exact * (1.0 - exact) / shots)
        logger.debug(f"Sampled {shots} shots (seed {seed}): {sampled:.6f} vs exact {exact:.6f}")

    return AcceptanceEstimate(
        exact_probability=exact,
        sampled_frequency=sampled,
        shots=shots,
        seed=seed,
        standard_error=standard_error,
    )


def reconstruction_error(decomposition: TermDecomposition, term: LocalTerm) -> float:
    return max_abs(decomposition.reconstruct() - term.matrix)
