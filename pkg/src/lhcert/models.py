"""Core data models for lhcert."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from lhcert.errors import ValidationError

UNITARITY_TOL = 1e-10
HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10
NORM_TOL = 1e-10

_SQRT2_INV = 1 / math.sqrt(2)


class GateName(str, Enum):
    I = "I"  # noqa: E741
    X = "X"
    Y = "Y"
    Z = "Z"
    H = "H"
    S = "S"
    T = "T"
    CNOT = "CNOT"
    CZ = "CZ"
    SWAP = "SWAP"
    CUSTOM = "CUSTOM"


class ClockEncoding(str, Enum):
    REGISTER = "register"
    UNARY = "unary"


class Classification(str, Enum):
    YES = "YES"
    NO = "NO"
    UNDECIDED = "UNDECIDED"


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


STANDARD_GATE_MATRICES: dict[GateName, np.ndarray] = {
    GateName.I: _frozen(np.eye(2, dtype=complex)),
    GateName.X: _frozen(np.array([[0, 1], [1, 0]], dtype=complex)),
    GateName.Y: _frozen(np.array([[0, -1j], [1j, 0]], dtype=complex)),
    GateName.Z: _frozen(np.array([[1, 0], [0, -1]], dtype=complex)),
    GateName.H: _frozen(np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV),
    GateName.S: _frozen(np.array([[1, 0], [0, 1j]], dtype=complex)),
    GateName.T: _frozen(np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=complex)),
    GateName.CNOT: _frozen(
        np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
    ),
    GateName.CZ: _frozen(np.diag([1, 1, 1, -1]).astype(complex)),
    GateName.SWAP: _frozen(
        np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
    ),
}


def max_abs(array: np.ndarray) -> float:
    """Largest absolute entry, 0.0 for empty arrays."""
    return float(np.max(np.abs(array))) if array.size else 0.0


def is_unitary(matrix: np.ndarray, tol: float = UNITARITY_TOL) -> bool:
    identity = np.eye(matrix.shape[0], dtype=complex)
    return max_abs(matrix.conj().T @ matrix - identity) <= tol


def check_psd_contraction(
    matrix: np.ndarray,
    what: str,
    hermitian_tol: float = HERMITIAN_TOL,
    psd_tol: float = PSD_TOL,
) -> None:
    """Raise unless matrix is Hermitian, PSD and has operator norm at most 1."""
    deviation = max_abs(matrix - matrix.conj().T)
    if deviation > hermitian_tol:
        raise ValidationError(f"{what} is not Hermitian (deviation {deviation:.3e})")
    eigenvalues = np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)
    if eigenvalues[0] < -psd_tol:
        raise ValidationError(
            f"{what} is not positive semi-definite (smallest eigenvalue {eigenvalues[0]:.3e})"
        )
    if eigenvalues[-1] > 1 + psd_tol:
        raise ValidationError(f"{what} has operator norm {eigenvalues[-1]:.6g} > 1")


@dataclass(frozen=True, eq=False)
class Gate:
    """A named or custom gate on one or two qubits."""

    name: GateName
    targets: tuple[int, ...]
    matrix: np.ndarray | None = None

    def __post_init__(self) -> None:
        name = GateName(self.name)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "targets", tuple(int(q) for q in self.targets))

        if name == GateName.CUSTOM:
            if self.matrix is None:
                raise ValidationError("CUSTOM gate requires a matrix")
            matrix = np.array(self.matrix, dtype=complex)
            if matrix.shape not in ((2, 2), (4, 4)):
                raise ValidationError(f"CUSTOM gate matrix must be 2x2 or 4x4, got {matrix.shape}")
            if not is_unitary(matrix):
                raise ValidationError("CUSTOM gate matrix is not unitary")
            object.__setattr__(self, "matrix", _frozen(matrix))
        elif self.matrix is not None:
            raise ValidationError(f"Named gate {name.value} must not carry a matrix")

        if len(self.targets) not in (1, 2):
            raise ValidationError(f"Gate {name.value} needs 1 or 2 targets, got {len(self.targets)}")
        if len(set(self.targets)) != len(self.targets):
            raise ValidationError(f"Gate {name.value} targets are not distinct: {self.targets}")
        if any(q < 0 for q in self.targets):
            raise ValidationError(f"Gate {name.value} has a negative target: {self.targets}")
        if self.unitary.shape[0] != 2 ** len(self.targets):
            raise ValidationError(
                f"Gate {name.value} acts on {self.unitary.shape[0]} dimensions "
                f"but has {len(self.targets)} target(s)"
            )

    @property
    def unitary(self) -> np.ndarray:
        if self.name == GateName.CUSTOM:
            assert self.matrix is not None
            return self.matrix
        return STANDARD_GATE_MATRICES[self.name]

    @property
    def arity(self) -> int:
        return len(self.targets)


@dataclass(frozen=True, eq=False)
class Circuit:
    """Verification circuit U_T...U_1 on m qubits with input bits on qubits 0..n-1."""

    m: int
    gates: tuple[Gate, ...]
    input_bits: str = ""
    output_qubit: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.m < 1:
            raise ValidationError(f"Circuit needs at least one qubit, got {self.m}")
        if not self.gates:
            raise ValidationError("Circuit needs at least one gate (T >= 1)")
        if any(bit not in "01" for bit in self.input_bits):
            raise ValidationError(f"Input bits must be a 0/1 string: {self.input_bits!r}")
        if len(self.input_bits) > self.m:
            raise ValidationError(
                f"Input has {len(self.input_bits)} bits but the circuit has {self.m} qubits"
            )
        if not 0 <= self.output_qubit < self.m:
            raise ValidationError(f"Output qubit {self.output_qubit} out of range for m={self.m}")
        for t, gate in enumerate(self.gates, 1):
            if max(gate.targets) >= self.m:
                raise ValidationError(
                    f"Gate {t} ({gate.name.value}) targets {gate.targets} out of range for m={self.m}"
                )

    @property
    def T(self) -> int:  # noqa: N802
        return len(self.gates)

    @property
    def n(self) -> int:
        return len(self.input_bits)

    @property
    def witness_qubits(self) -> int:
        return self.m - self.n

    def with_input(self, input_bits: str) -> Circuit:
        return Circuit(
            m=self.m, gates=self.gates, input_bits=input_bits, output_qubit=self.output_qubit
        )


@dataclass(eq=False)
class StateVector:
    """Unit-norm pure state on m qubits; qubit 0 is the most significant index bit."""

    m: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if self.m < 0:
            raise ValidationError(f"Qubit count must be non-negative, got {self.m}")
        if self.amplitudes.shape[0] != 2**self.m:
            raise ValidationError(
                f"State on {self.m} qubits needs {2 ** self.m} amplitudes, "
                f"got {self.amplitudes.shape[0]}"
            )
        deviation = abs(float(np.vdot(self.amplitudes, self.amplitudes).real) - 1.0)
        if deviation > NORM_TOL:
            raise ValidationError(f"State is not unit norm (|norm^2 - 1| = {deviation:.3e})")

    @classmethod
    def basis(cls, bits: str) -> StateVector:
        amplitudes = np.zeros(2 ** len(bits), dtype=complex)
        amplitudes[int(bits, 2) if bits else 0] = 1.0
        return cls(len(bits), amplitudes)

    @classmethod
    def normalized(cls, m: int, amplitudes: np.ndarray) -> StateVector:
        vector = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = np.linalg.norm(vector)
        if norm == 0:
            raise ValidationError("Cannot normalize the zero vector")
        return cls(m, vector / norm)

    @classmethod
    def random(cls, m: int, rng: np.random.Generator) -> StateVector:
        dim = 2**m
        return cls.normalized(m, rng.standard_normal(dim) + 1j * rng.standard_normal(dim))

    @property
    def dimension(self) -> int:
        return int(self.amplitudes.shape[0])

    def tensor(self, other: StateVector) -> StateVector:
        return StateVector(self.m + other.m, np.kron(self.amplitudes, other.amplitudes))


@dataclass(eq=False)
class LocalTerm:
    """Hermitian PSD matrix of norm at most 1 acting on an ordered list of qubits."""

    qubits: tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self) -> None:
        self.qubits = tuple(int(q) for q in self.qubits)
        self.matrix = np.asarray(self.matrix, dtype=complex)
        if len(set(self.qubits)) != len(self.qubits):
            raise ValidationError(f"Term qubits are not distinct: {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValidationError(f"Term has a negative qubit index: {self.qubits}")
        dim = 2 ** len(self.qubits)
        if self.matrix.shape != (dim, dim):
            raise ValidationError(
                f"Term on {len(self.qubits)} qubits needs a {dim}x{dim} matrix, "
                f"got {self.matrix.shape}"
            )
        check_psd_contraction(self.matrix, f"Term on qubits {self.qubits}")

    @property
    def locality(self) -> int:
        return len(self.qubits)


@dataclass(eq=False)
class ClockRegisterTerm:
    """Sum of products (system matrix on <= 2 qubits) x (clock register matrix)."""

    system_qubits: tuple[int, ...]
    parts: tuple[tuple[np.ndarray, np.ndarray], ...]
    clock_dim: int
    label: str = ""

    def __post_init__(self) -> None:
        self.system_qubits = tuple(int(q) for q in self.system_qubits)
        self.parts = tuple(
            (np.asarray(s, dtype=complex), np.asarray(c, dtype=complex)) for s, c in self.parts
        )
        if len(self.system_qubits) > 2:
            raise ValidationError(f"Clock-register term touches {len(self.system_qubits)} system qubits")
        if len(set(self.system_qubits)) != len(self.system_qubits):
            raise ValidationError(f"Term system qubits are not distinct: {self.system_qubits}")
        if not self.parts:
            raise ValidationError("Clock-register term needs at least one part")
        sys_dim = 2 ** len(self.system_qubits)
        for system_matrix, clock_matrix in self.parts:
            if system_matrix.shape != (sys_dim, sys_dim):
                raise ValidationError(
                    f"System matrix must be {sys_dim}x{sys_dim}, got {system_matrix.shape}"
                )
            if clock_matrix.shape != (self.clock_dim, self.clock_dim):
                raise ValidationError(
                    f"Clock matrix must be {self.clock_dim}x{self.clock_dim}, got {clock_matrix.shape}"
                )
        check_psd_contraction(self.local_matrix(), f"Clock-register term {self.label or ''}".strip())

    def local_matrix(self) -> np.ndarray:
        """Dense matrix on (system qubits) x (clock register), system index major."""
        return sum(np.kron(s, c) for s, c in self.parts)  # type: ignore[return-value]


@dataclass(eq=False)
class HistoryState:
    """Uniform superposition of a circuit's intermediate states over time leafs."""

    encoding: ClockEncoding
    m: int
    T: int
    amplitudes: np.ndarray
    energy: float | None = None
    prop_residual: float | None = None
    in_residual: float | None = None
    out_energy: float | None = None

    @property
    def dimension(self) -> int:
        return int(self.amplitudes.shape[0])

    def time_leaf_weights(self) -> np.ndarray:
        """Probability weight of each clock time t = 0..T."""
        if self.encoding == ClockEncoding.REGISTER:
            grid = self.amplitudes.reshape(2**self.m, self.T + 1)
            return np.sum(np.abs(grid) ** 2, axis=0)
        grid = self.amplitudes.reshape(2**self.m, 2**self.T)
        clock_weights = np.sum(np.abs(grid) ** 2, axis=0)
        return np.array(
            [clock_weights[int("1" * t + "0" * (self.T - t), 2) if self.T else 0] for t in range(self.T + 1)]
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "encoding": self.encoding.value,
            "m": self.m,
            "T": self.T,
            "energy": self.energy,
            "prop_residual": self.prop_residual,
            "in_residual": self.in_residual,
            "out_energy": self.out_energy,
        }


@dataclass
class SpectralReport:
    """Result of a dense or Lanczos eigenvalue computation."""

    method: str
    eigenvalues: np.ndarray
    residual: float
    iterations: int
    converged: bool
    eigenvectors: np.ndarray | None = field(default=None, repr=False)

    @property
    def ground_energy(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def ground_state(self) -> np.ndarray | None:
        return None if self.eigenvectors is None else self.eigenvectors[:, 0]

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": self.method,
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "lambda_min": self.ground_energy,
            "residual": self.residual,
            "iterations": self.iterations,
            "converged": self.converged,
        }


@dataclass
class ClockWalk:
    """Clock matrix A, random-walk matrix B = I - A and its conductance gap bound."""

    T: int
    A: np.ndarray
    B: np.ndarray
    conductance: float
    gap_bound: float
    eigenvalues: np.ndarray
    second_eigenvalue: float

    @property
    def gap_holds(self) -> bool:
        return self.second_eigenvalue >= self.gap_bound - 1e-10

    def to_dict(self) -> dict[str, Any]:
        return {
            "T": self.T,
            "conductance": self.conductance,
            "gap_bound": self.gap_bound,
            "second_eigenvalue": self.second_eigenvalue,
            "gap_holds": self.gap_holds,
            "eigenvalues": [float(v) for v in self.eigenvalues],
        }


@dataclass
class AngleReport:
    """Minimal principal angle between two subspaces."""

    dim_N1: int  # noqa: N815
    dim_N2: int  # noqa: N815
    cos_theta: float
    theta: float
    sin2_theta: float
    sin2_half_theta: float
    bound: float | None = None
    half_angle_bound: float | None = None

    @property
    def lower_bound_check(self) -> bool | None:
        if self.bound is None:
            return None
        return self.sin2_theta >= self.bound - 1e-9

    def to_dict(self) -> dict[str, Any]:
        return {
            "dim_N1": self.dim_N1,
            "dim_N2": self.dim_N2,
            "cos_theta": self.cos_theta,
            "theta": self.theta,
            "sin2_theta": self.sin2_theta,
            "sin2_half_theta": self.sin2_half_theta,
            "bound": self.bound,
            "half_angle_bound": self.half_angle_bound,
            "lower_bound_check": self.lower_bound_check,
        }


@dataclass
class LemmaReport:
    """Outcome of the geometrical lemma lambda_min(H1 + H2) >= lambda sin^2(theta/2)."""

    lam: float
    theta: float
    bound: float
    actual_min: float
    holds: bool
    vacuous: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "lambda": self.lam,
            "theta": self.theta,
            "bound": self.bound,
            "actual_min": self.actual_min,
            "holds": self.holds,
            "vacuous": self.vacuous,
        }


@dataclass
class TermDecomposition:
    """Spectral decomposition sum_j w_j |alpha_j><alpha_j| of a local term."""

    weights: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.weights) @ self.vectors.conj().T


@dataclass
class AmplificationPlan:
    """Repetition count and majority cut-off separating completeness c from soundness s."""

    c: float
    s: float
    target_error: float
    repetitions: int
    decision_threshold: float

    @property
    def error_bound(self) -> float:
        return min(1.0, 2 * math.exp(-self.repetitions * (self.c - self.s) ** 2 / 2))

    def decide(self, accept_count: int) -> bool:
        return accept_count > self.decision_threshold

    def to_dict(self) -> dict[str, Any]:
        return {
            "c": self.c,
            "s": self.s,
            "target_error": self.target_error,
            "repetitions": self.repetitions,
            "decision_threshold": self.decision_threshold,
            "error_bound": self.error_bound,
        }


@dataclass
class AcceptanceEstimate:
    """Exact and sampled acceptance probability of the random-term verifier."""

    exact_probability: float
    sampled_frequency: float | None
    shots: int
    seed: int
    standard_error: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.exact_probability <= 1.0:
            raise ValidationError(f"Acceptance probability {self.exact_probability} outside [0, 1]")

    def to_dict(self) -> dict[str, Any]:
        return {
            "exact": self.exact_probability,
            "sampled": self.sampled_frequency,
            "shots": self.shots,
            "seed": self.seed,
            "stderr": self.standard_error,
        }


@dataclass
class SoundnessReport:
    """Dense soundness audit of a rejecting register-clock instance."""

    T: int
    lambda_min: float
    bound: float
    max_accept_probability: float
    h1_second_eigenvalue: float | None
    prop_second_eigenvalue: float | None
    prop_gap_bound: float
    angle: AngleReport
    lemma: LemmaReport
    tolerance: float = 1e-10

    @property
    def h1_check(self) -> bool:
        return self.h1_second_eigenvalue is not None and self.h1_second_eigenvalue >= 1 - self.tolerance

    @property
    def prop_check(self) -> bool:
        return (
            self.prop_second_eigenvalue is not None
            and self.prop_second_eigenvalue >= self.prop_gap_bound - self.tolerance
        )

    @property
    def holds(self) -> bool:
        return self.lambda_min >= self.bound - self.tolerance

    def to_dict(self) -> dict[str, Any]:
        return {
            "T": self.T,
            "lambda_min": self.lambda_min,
            "bound": self.bound,
            "holds": self.holds,
            "max_accept_probability": self.max_accept_probability,
            "h1_second_eigenvalue": self.h1_second_eigenvalue,
            "h1_check": self.h1_check,
            "prop_second_eigenvalue": self.prop_second_eigenvalue,
            "prop_gap_bound": self.prop_gap_bound,
            "prop_check": self.prop_check,
            "angle": self.angle.to_dict(),
            "lemma": self.lemma.to_dict(),
        }


@dataclass
class CompletenessReport:
    """History-state energies of a compiled instance against its measured rejection epsilon."""

    T: int
    acceptance_probability: float
    epsilon: float
    register: HistoryState
    unary: HistoryState | None = None
    lambda_min: float | None = None
    tolerance: float = 1e-10

    @property
    def holds(self) -> bool:
        energies = [self.register.energy]
        if self.unary is not None:
            energies.append(self.unary.energy)
        if self.lambda_min is not None:
            energies.append(self.lambda_min)
        return all(e is not None and e <= self.epsilon + self.tolerance for e in energies)

    def to_dict(self) -> dict[str, Any]:
        return {
            "T": self.T,
            "acceptance_probability": self.acceptance_probability,
            "epsilon": self.epsilon,
            "register": self.register.to_dict(),
            "unary": None if self.unary is None else self.unary.to_dict(),
            "lambda_min": self.lambda_min,
            "holds": self.holds,
        }
