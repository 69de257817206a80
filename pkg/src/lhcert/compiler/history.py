"""History states and the block rotation R for compiled circuits."""

from __future__ import annotations

import logging

import numpy as np

from lhcert.compiler.register import compile_register_clock, prepare_circuit
from lhcert.compiler.unary import compile_unary, select_terms, unary_clock_index
from lhcert.errors import DenseCapError
from lhcert.models import Circuit, ClockEncoding, HistoryState, StateVector
from lhcert.ops.base import DEFAULT_DENSE_CAP
from lhcert.ops.hamiltonian import expectation
from lhcert.qcore.simulator import run_circuit_history, unitary_prefixes

logger = logging.getLogger(__name__)


def history_amplitudes(
    states: list[StateVector], encoding: ClockEncoding | str = ClockEncoding.REGISTER
) -> np.ndarray:
    """(1/sqrt(T+1)) sum_t |state_t> (x) |t> for a sequence of T + 1 system states."""
    encoding = ClockEncoding(encoding)
    T = len(states) - 1
    dim = states[0].dimension
    if encoding == ClockEncoding.REGISTER:
        grid = np.zeros((dim, T + 1), dtype=complex)
        for t, state in enumerate(states):
            grid[:, t] = state.amplitudes
    else:
        grid = np.zeros((dim, 2**T), dtype=complex)
        for t, state in enumerate(states):
            grid[:, unary_clock_index(t, T)] = state.amplitudes
    return grid.reshape(-1) / np.sqrt(T + 1)


def history_state(
    circuit: Circuit,
    input_bits: str | None = None,
    witness: StateVector | None = None,
    encoding: ClockEncoding | str = ClockEncoding.REGISTER,
    endpoints: str = "minimal",
) -> HistoryState:
    """History state of the circuit on |x, witness>, with its residuals under the compiled H."""
    encoding = ClockEncoding(encoding)
    circuit = prepare_circuit(circuit, input_bits)
    states = run_circuit_history(circuit, witness)
    amplitudes = history_amplitudes(states, encoding)

    if encoding == ClockEncoding.REGISTER:
        register = compile_register_clock(circuit)
        prop_residual = float(np.linalg.norm(register.group_matvec("prop", amplitudes)))
        in_residual = float(np.linalg.norm(register.group_matvec("in", amplitudes)))
        out_vector = register.group_matvec("out", amplitudes)
        energy = expectation(register, amplitudes)
    else:
        unary = compile_unary(circuit, endpoints=endpoints)  # type: ignore[arg-type]
        prop_residual = float(np.linalg.norm(select_terms(unary, "prop").matvec(amplitudes)))
        in_residual = float(np.linalg.norm(select_terms(unary, "in").matvec(amplitudes)))
        out_vector = select_terms(unary, "out").matvec(amplitudes)
        energy = expectation(unary, amplitudes)

    out_energy = float(np.vdot(amplitudes, out_vector).real)
    logger.debug(
        f"History state ({encoding.value}): energy={energy:.3e}, "
        f"prop residual={prop_residual:.3e}, in residual={in_residual:.3e}"
    )
    return HistoryState(
        encoding=encoding,
        m=circuit.m,
        T=circuit.T,
        amplitudes=amplitudes,
        energy=energy,
        prop_residual=prop_residual,
        in_residual=in_residual,
        out_energy=out_energy,
    )


def rotation_R(circuit: Circuit, dense_cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:  # noqa: N802
    """R = sum_t U_t...U_1 (x) |t><t|; conjugates H_prop into I (x) A."""
    dim = 2**circuit.m * (circuit.T + 1)
    if dim > dense_cap:
        raise DenseCapError(dim, dense_cap)
    rotation = np.zeros((dim, dim), dtype=complex)
    for t, prefix in enumerate(unitary_prefixes(circuit, dense_cap)):
        leaf = np.zeros((circuit.T + 1, circuit.T + 1), dtype=complex)
        leaf[t, t] = 1.0
        rotation += np.kron(prefix, leaf)
    return rotation
