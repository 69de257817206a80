"""Unary-clock reduction H' = H'_in + H'_out + H'_prop + H'_clock on m + T qubits.

Clock qubit c_j (j = 1..T) sits at index m + j - 1 and time t is the string
1^t 0^(T-t) on c_1..c_T. Every term touches at most 2 system and 3 clock qubits.
"""

from __future__ import annotations

import logging
from typing import Literal

import numpy as np

from lhcert.compiler.register import PROJ_0, PROJ_1, prepare_circuit, thresholds, wrong_bit_projector
from lhcert.errors import DenseCapError, ValidationError
from lhcert.models import Circuit, LocalTerm
from lhcert.ops.base import DEFAULT_DENSE_CAP
from lhcert.ops.hamiltonian import HamiltonianSpec

logger = logging.getLogger(__name__)

Endpoints = Literal["minimal", "paired"]

UNARY_GROUPS = ("in", "out", "prop", "clock")

# |01> on adjacent clock qubits (c_t = 0, c_{t+1} = 1) is the only invalid local pattern
CLOCK_VIOLATION = np.diag([0.0, 1.0, 0.0, 0.0]).astype(complex)
PROJ_00 = np.diag([1.0, 0.0, 0.0, 0.0]).astype(complex)
PROJ_11 = np.diag([0.0, 0.0, 0.0, 1.0]).astype(complex)


def unary_clock_index(t: int, T: int) -> int:  # noqa: N803
    """Index of |1^t 0^(T-t)> in the 2^T-dimensional clock space (c_1 most significant)."""
    if not 0 <= t <= T:
        raise ValidationError(f"Time {t} outside 0..{T}")
    return ((1 << t) - 1) << (T - t)


def clock_qubit(m: int, j: int) -> int:
    return m + j - 1


def _ket(bits: str) -> np.ndarray:
    vector = np.zeros(2 ** len(bits), dtype=complex)
    vector[int(bits, 2)] = 1.0
    return vector


def _outer(left: str, right: str) -> np.ndarray:
    return np.outer(_ket(left), _ket(right).conj())


def propagation_window(t: int, T: int) -> list[int]:  # noqa: N803
    """Clock indices j checked by H'_prop(t): (t-1, t, t+1) clipped to 1..T."""
    return list(range(max(1, t - 1), min(T, t + 1) + 1))


def unary_propagation_term(circuit: Circuit, t: int) -> LocalTerm:
    """H'_prop(t) with clock factors |after><after|, |before><before| and the two hoppings."""
    m, T = circuit.m, circuit.T
    gate = circuit.gates[t - 1]
    unitary = gate.unitary
    identity = np.eye(unitary.shape[0], dtype=complex)

    if T == 1:
        after, before = "1", "0"
        window = [1]
    else:
        window = propagation_window(t, T)
        after = "".join("1" if j <= t else "0" for j in window)
        before = "".join("1" if j <= t - 1 else "0" for j in window)

    matrix = 0.5 * (
        np.kron(identity, _outer(after, after))
        + np.kron(identity, _outer(before, before))
        - np.kron(unitary, _outer(after, before))
        - np.kron(unitary.conj().T, _outer(before, after))
    )
    qubits = gate.targets + tuple(clock_qubit(m, j) for j in window)
    return LocalTerm(qubits, matrix)


def _endpoint_terms(
    circuit: Circuit, endpoints: Endpoints
) -> tuple[list[LocalTerm], LocalTerm]:
    m, T = circuit.m, circuit.T
    paired = endpoints == "paired" and T >= 2

    if paired:
        start_clock, start_qubits = PROJ_00, (clock_qubit(m, 1), clock_qubit(m, 2))
        end_clock, end_qubits = PROJ_11, (clock_qubit(m, T - 1), clock_qubit(m, T))
    else:
        start_clock, start_qubits = PROJ_0, (clock_qubit(m, 1),)
        end_clock, end_qubits = PROJ_1, (clock_qubit(m, T),)

    in_terms = [
        LocalTerm((i, *start_qubits), np.kron(wrong_bit_projector(bit), start_clock))
        for i, bit in enumerate(circuit.input_bits)
    ]
    out_term = LocalTerm((circuit.output_qubit, *end_qubits), np.kron(PROJ_0, end_clock))
    return in_terms, out_term


def compile_unary(
    circuit: Circuit, input_bits: str | None = None, endpoints: Endpoints = "minimal"
) -> HamiltonianSpec:
    """Compile a circuit and input x into the 5-local unary-clock Hamiltonian.

    Terms are ordered in, out, prop(1..T), clock(1..T-1); metadata["term_groups"]
    records the index ranges of each group.
    """
    if endpoints not in ("minimal", "paired"):
        raise ValidationError(f"Unknown endpoint form: {endpoints}")
    circuit = prepare_circuit(circuit, input_bits)
    m, T = circuit.m, circuit.T

    in_terms, out_term = _endpoint_terms(circuit, endpoints)
    prop_terms = [unary_propagation_term(circuit, t) for t in range(1, T + 1)]
    clock_terms = [
        LocalTerm((clock_qubit(m, t), clock_qubit(m, t + 1)), CLOCK_VIOLATION) for t in range(1, T)
    ]

    groups: dict[str, list[int]] = {}
    terms: list[LocalTerm] = []
    for name, group in zip(UNARY_GROUPS, (in_terms, [out_term], prop_terms, clock_terms), strict=True):
        groups[name] = list(range(len(terms), len(terms) + len(group)))
        terms.extend(group)

    edge_case = T == 1
    if edge_case:
        logger.warning("T=1: single clock qubit, propagation edge rules collide; thresholds refused")
    a, b = thresholds(T)

    spec = HamiltonianSpec(
        n_qubits=m + T,
        terms=terms,
        a=a,
        b=b,
        metadata={
            "encoding": "unary",
            "T": T,
            "m": m,
            "n": circuit.n,
            "clock_qubits": [clock_qubit(m, j) for j in range(1, T + 1)],
            "endpoints": "minimal" if T < 2 else endpoints,
            "edge_case_T1": edge_case,
            "thresholds_refused": a is None,
            "term_groups": groups,
        },
    )
    logger.info(
        f"Compiled unary Hamiltonian: {m + T} qubits, {spec.term_count} terms, "
        f"max locality {spec.max_locality}"
    )
    return spec


def select_terms(spec: HamiltonianSpec, group: str) -> HamiltonianSpec:
    """Sub-Hamiltonian made of one term group of a unary compilation (no thresholds)."""
    groups = spec.metadata.get("term_groups")
    if groups is None:
        raise ValidationError("Hamiltonian carries no term groups")
    if group not in groups:
        raise ValidationError(f"Unknown term group {group!r}, expected one of {sorted(groups)}")
    return HamiltonianSpec(
        n_qubits=spec.n_qubits,
        terms=[spec.terms[i] for i in groups[group]],
        metadata={"group": group},
    )


def unary_isometry(m: int, T: int, dense_cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:  # noqa: N803
    """Dense isometry V with V|s>|t> = |s>|1^t 0^(T-t)>, register index s*(T+1)+t."""
    dim = 2 ** (m + T)
    if dim > dense_cap:
        raise DenseCapError(dim, dense_cap)
    isometry = np.zeros((dim, 2**m * (T + 1)), dtype=complex)
    for s in range(2**m):
        for t in range(T + 1):
            isometry[s * 2**T + unary_clock_index(t, T), s * (T + 1) + t] = 1.0
    return isometry
