"""Exact statevector simulation of verification circuits."""

from __future__ import annotations

import logging

import numpy as np
import scipy.linalg

from lhcert.errors import DenseCapError, DimensionError
from lhcert.models import Circuit, Gate, StateVector
from lhcert.qcore.tensor import apply_local, embed_dense

logger = logging.getLogger(__name__)

DEFAULT_DENSE_CAP = 4096


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Return (G x I_rest)|state>."""
    if max(gate.targets) >= state.m:
        raise DimensionError(f"Gate targets {gate.targets} out of range for {state.m} qubits")
    return StateVector(state.m, apply_local(gate.unitary, gate.targets, state.amplitudes, state.m))


def initial_state(circuit: Circuit, witness: StateVector | None = None) -> StateVector:
    """|x> (x) |witness>, the state the verifier starts from."""
    if witness is None:
        if circuit.witness_qubits:
            raise DimensionError(
                f"Circuit expects a witness on {circuit.witness_qubits} qubits, got none"
            )
        witness = StateVector.basis("")
    if witness.m != circuit.witness_qubits:
        raise DimensionError(
            f"Witness has {witness.m} qubits, circuit expects m - n = {circuit.witness_qubits}"
        )
    return StateVector.basis(circuit.input_bits).tensor(witness)


def run_circuit_history(circuit: Circuit, witness: StateVector | None = None) -> list[StateVector]:
    """All T + 1 intermediate states U_t...U_1 |x, witness>, t = 0..T."""
    states = [initial_state(circuit, witness)]
    for gate in circuit.gates:
        states.append(apply_gate(states[-1], gate))
    return states


def run_circuit(circuit: Circuit, witness: StateVector | None = None) -> StateVector:
    """Final state U_T...U_1 |x, witness>."""
    return run_circuit_history(circuit, witness)[-1]


def output_one_probability(state: StateVector, qubit: int) -> float:
    psi = state.amplitudes.reshape((2,) * state.m)
    return float(np.sum(np.abs(np.take(psi, 1, axis=qubit)) ** 2))


def acceptance_probability(circuit: Circuit, witness: StateVector | None = None) -> float:
    """Probability of measuring 1 on the output qubit after the circuit."""
    final = run_circuit(circuit, witness)
    return min(1.0, max(0.0, output_one_probability(final, circuit.output_qubit)))


def unitary_prefixes(circuit: Circuit, dense_cap: int = DEFAULT_DENSE_CAP) -> list[np.ndarray]:
    """Dense W_t = U_t...U_1 for t = 0..T (W_0 = I)."""
    dim = 2**circuit.m
    if dim > dense_cap:
        raise DenseCapError(dim, dense_cap)
    prefixes = [np.eye(dim, dtype=complex)]
    for g in circuit.gates:
        prefixes.append(embed_dense(g.unitary, g.targets, circuit.m) @ prefixes[-1])
    return prefixes


def circuit_unitary(
    circuit: Circuit, upto: int | None = None, dense_cap: int = DEFAULT_DENSE_CAP
) -> np.ndarray:
    """Dense product U_upto...U_1 (the whole circuit by default)."""
    prefixes = unitary_prefixes(circuit, dense_cap)
    return prefixes[circuit.T if upto is None else upto]


def max_acceptance_probability(circuit: Circuit, dense_cap: int = DEFAULT_DENSE_CAP) -> float:
    """Largest acceptance probability over all witness states for the circuit's input x."""
    m, n = circuit.m, circuit.n
    unitary = circuit_unitary(circuit, dense_cap=dense_cap)
    offset = (int(circuit.input_bits, 2) if n else 0) << (m - n)
    columns = unitary[:, offset : offset + 2 ** (m - n)]
    shift = m - 1 - circuit.output_qubit
    accepting_rows = [r for r in range(2**m) if (r >> shift) & 1]
    singular_values = scipy.linalg.svdvals(columns[accepting_rows])
    probability = float(singular_values[0] ** 2) if singular_values.size else 0.0
    logger.debug(f"Max acceptance over witnesses on {m - n} qubits: {probability:.3e}")
    return min(1.0, probability)
