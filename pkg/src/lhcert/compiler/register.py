"""Register-clock reduction H = H_in + H_out + H_prop with a (T+1)-level clock."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from lhcert.errors import CompileError, DenseCapError, DimensionError, ValidationError
from lhcert.models import Circuit, ClockRegisterTerm
from lhcert.ops.base import DEFAULT_DENSE_CAP, Hamiltonian
from lhcert.qcore.tensor import apply_local, embed_dense

logger = logging.getLogger(__name__)

PROJ_0 = np.diag([1.0, 0.0]).astype(complex)
PROJ_1 = np.diag([0.0, 1.0]).astype(complex)

TERM_GROUPS = ("in", "out", "prop")


def thresholds(T: int) -> tuple[float | None, float | None]:  # noqa: N803
    """a = 1/T^10 and b = 1/(4(T+1)^3); refused (None, None) when T < 2 where a >= b."""
    if T < 2:
        return None, None
    return 1.0 / T**10, 1.0 / (4 * (T + 1) ** 3)


def clock_outer(row: int, col: int, clock_dim: int) -> np.ndarray:
    """|row><col| on the clock register."""
    matrix = np.zeros((clock_dim, clock_dim), dtype=complex)
    matrix[row, col] = 1.0
    return matrix


def wrong_bit_projector(bit: str) -> np.ndarray:
    """Projector onto the value a qubit must not hold."""
    return PROJ_1 if bit == "0" else PROJ_0


def prepare_circuit(circuit: Circuit, input_bits: str | None) -> Circuit:
    if input_bits is None:
        return circuit
    try:
        return circuit.with_input(input_bits)
    except ValidationError as e:
        raise CompileError(f"Cannot compile with input {input_bits!r}: {e.message}") from e


@dataclass(eq=False)
class RegisterClockHamiltonian(Hamiltonian):
    """Hamiltonian on m system qubits times a (T+1)-dimensional clock, system index major."""

    system_qubits: int
    clock_dim: int
    in_terms: list[ClockRegisterTerm]
    out_term: ClockRegisterTerm
    prop_terms: list[ClockRegisterTerm]
    a: float | None = None
    b: float | None = None
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.prop_terms) != self.clock_dim - 1:
            raise ValidationError(
                f"Expected {self.clock_dim - 1} propagation terms, got {len(self.prop_terms)}"
            )
        for term in self.terms:
            if term.clock_dim != self.clock_dim:
                raise ValidationError(f"Term {term.label} has clock dimension {term.clock_dim}")
            if term.system_qubits and max(term.system_qubits) >= self.system_qubits:
                raise ValidationError(f"Term {term.label} acts outside the {self.system_qubits} system qubits")
        if self.a is not None and self.b is not None and not self.b > self.a:
            raise ValidationError(f"Thresholds need b > a, got a={self.a}, b={self.b}")

    @property
    def T(self) -> int:  # noqa: N802
        return self.clock_dim - 1

    @property
    def terms(self) -> list[ClockRegisterTerm]:
        return [*self.in_terms, self.out_term, *self.prop_terms]

    @property
    def term_count(self) -> int:
        return len(self.in_terms) + 1 + len(self.prop_terms)

    @property
    def dimension(self) -> int:
        return int(2**self.system_qubits * self.clock_dim)

    def group(self, name: str) -> list[ClockRegisterTerm]:
        if name not in TERM_GROUPS:
            raise ValidationError(f"Unknown term group {name!r}, expected one of {', '.join(TERM_GROUPS)}")
        if name == "in":
            return list(self.in_terms)
        if name == "out":
            return [self.out_term]
        return list(self.prop_terms)

    def _apply_terms(self, terms: list[ClockRegisterTerm], vector: np.ndarray) -> np.ndarray:
        vector = np.asarray(vector, dtype=complex).reshape(-1)
        if vector.shape[0] != self.dimension:
            raise DimensionError(f"Vector of length {vector.shape[0]} does not match {self.dimension}")
        grid = vector.reshape(2**self.system_qubits, self.clock_dim)
        result = np.zeros_like(grid)
        for term in terms:
            for system_matrix, clock_matrix in term.parts:
                result += apply_local(
                    system_matrix, term.system_qubits, grid @ clock_matrix.T, self.system_qubits
                )
        return result.reshape(-1)

    def _dense_terms(self, terms: list[ClockRegisterTerm], dense_cap: int) -> np.ndarray:
        if self.dimension > dense_cap:
            raise DenseCapError(self.dimension, dense_cap)
        dense = np.zeros((self.dimension, self.dimension), dtype=complex)
        for term in terms:
            for system_matrix, clock_matrix in term.parts:
                full_system = embed_dense(system_matrix, term.system_qubits, self.system_qubits)
                dense += np.kron(full_system, clock_matrix)
        return dense

    def matvec(self, vector: np.ndarray) -> np.ndarray:
        return self._apply_terms(self.terms, vector)

    def group_matvec(self, name: str, vector: np.ndarray) -> np.ndarray:
        return self._apply_terms(self.group(name), vector)

    def to_dense(self, dense_cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
        return self._dense_terms(self.terms, dense_cap)

    def group_dense(self, name: str, dense_cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
        return self._dense_terms(self.group(name), dense_cap)

    def describe(self) -> dict[str, Any]:
        return {
            "system_qubits": self.system_qubits,
            "clock_dim": self.clock_dim,
            "terms": self.term_count,
            "a": self.a,
            "b": self.b,
            **self.metadata,
        }


def propagation_term(circuit: Circuit, t: int) -> ClockRegisterTerm:
    """H_prop(t) = 1/2 (I|t><t| + I|t-1><t-1| - U_t|t><t-1| - U_t^dag|t-1><t|)."""
    clock_dim = circuit.T + 1
    gate = circuit.gates[t - 1]
    unitary = gate.unitary
    identity = np.eye(unitary.shape[0], dtype=complex)
    stay = 0.5 * (clock_outer(t, t, clock_dim) + clock_outer(t - 1, t - 1, clock_dim))
    return ClockRegisterTerm(
        system_qubits=gate.targets,
        parts=(
            (identity, stay),
            (-0.5 * unitary, clock_outer(t, t - 1, clock_dim)),
            (-0.5 * unitary.conj().T, clock_outer(t - 1, t, clock_dim)),
        ),
        clock_dim=clock_dim,
        label=f"prop[{t}]",
    )


def compile_register_clock(
    circuit: Circuit, input_bits: str | None = None
) -> RegisterClockHamiltonian:
    """Compile a circuit and input x into the register-clock local Hamiltonian."""
    circuit = prepare_circuit(circuit, input_bits)
    T, m = circuit.T, circuit.m
    clock_dim = T + 1

    in_terms = [
        ClockRegisterTerm(
            system_qubits=(i,),
            parts=((wrong_bit_projector(bit), clock_outer(0, 0, clock_dim)),),
            clock_dim=clock_dim,
            label=f"in[{i}]",
        )
        for i, bit in enumerate(circuit.input_bits)
    ]
    out_term = ClockRegisterTerm(
        system_qubits=(circuit.output_qubit,),
        parts=((PROJ_0, clock_outer(T, T, clock_dim)),),
        clock_dim=clock_dim,
        label="out",
    )
    prop_terms = [propagation_term(circuit, t) for t in range(1, T + 1)]

    a, b = thresholds(T)
    if a is None:
        logger.warning(f"T={T} < 2: thresholds refused (a >= b), emitting terms without them")

    logger.info(
        f"Compiled register-clock Hamiltonian: m={m}, T={T}, "
        f"{len(in_terms)} input, 1 output, {len(prop_terms)} propagation terms"
    )
    return RegisterClockHamiltonian(
        system_qubits=m,
        clock_dim=clock_dim,
        in_terms=in_terms,
        out_term=out_term,
        prop_terms=prop_terms,
        a=a,
        b=b,
        metadata={
            "encoding": "register",
            "T": T,
            "m": m,
            "n": circuit.n,
            "input_bits": circuit.input_bits,
            "output_qubit": circuit.output_qubit,
            "thresholds_refused": a is None,
        },
    )
