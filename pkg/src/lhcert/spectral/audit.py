"""Dense completeness and soundness audits of compiled circuit instances."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from lhcert.compiler.history import history_state
from lhcert.compiler.register import RegisterClockHamiltonian, compile_register_clock, prepare_circuit
from lhcert.errors import AuditRefusedError, DenseCapError
from lhcert.models import (
    AngleReport,
    Circuit,
    ClockEncoding,
    CompletenessReport,
    LemmaReport,
    SoundnessReport,
    SpectralReport,
    StateVector,
)
from lhcert.ops.base import DEFAULT_DENSE_CAP
from lhcert.qcore.simulator import acceptance_probability, max_acceptance_probability
from lhcert.spectral.eigen import NULL_SPACE_TOL, dense_eigh, second_eigenvalue
from lhcert.spectral.geometry import geometric_lemma_check, principal_angle
from lhcert.spectral.walk import clock_walk

logger = logging.getLogger(__name__)

MAX_ACCEPT_PROBABILITY = 1e-6
AUDIT_TOL = 1e-10


def soundness_bound(T: int) -> float:  # noqa: N803
    return 1.0 / (4 * (T + 1) ** 3)


@dataclass
class _NullSpaceGeometry:
    """H_in + H_out and H_prop of one instance with their spectra, angle and lemma."""

    first: SpectralReport
    prop: SpectralReport
    angle: AngleReport
    lemma: LemmaReport


def _null_space_geometry(
    hamiltonian: RegisterClockHamiltonian,
    T: int | None,  # noqa: N803
    null_tol: float,
    dense_cap: int,
) -> _NullSpaceGeometry:
    h1 = hamiltonian.group_dense("in", dense_cap) + hamiltonian.group_dense("out", dense_cap)
    h_prop = hamiltonian.group_dense("prop", dense_cap)
    first = dense_eigh(h1, dense_cap=dense_cap)
    prop = dense_eigh(h_prop, dense_cap=dense_cap)
    assert first.eigenvectors is not None and prop.eigenvectors is not None

    angle = principal_angle(
        first.eigenvectors[:, first.eigenvalues < null_tol],
        prop.eigenvectors[:, prop.eigenvalues < null_tol],
        T=T,
    )
    lemma = geometric_lemma_check(h1, h_prop, null_tol=null_tol, dense_cap=dense_cap, spectra=(first, prop))
    return _NullSpaceGeometry(first=first, prop=prop, angle=angle, lemma=lemma)


def _soundness_report(
    T: int,  # noqa: N803
    lambda_min: float,
    best: float,
    geometry: _NullSpaceGeometry,
    null_tol: float,
    tolerance: float,
) -> SoundnessReport:
    report = SoundnessReport(
        T=T,
        lambda_min=lambda_min,
        bound=soundness_bound(T),
        max_accept_probability=best,
        h1_second_eigenvalue=second_eigenvalue(geometry.first.eigenvalues, null_tol),
        prop_second_eigenvalue=second_eigenvalue(geometry.prop.eigenvalues, null_tol),
        prop_gap_bound=1.0 / (2 * (T + 1) ** 2),
        angle=geometry.angle,
        lemma=geometry.lemma,
        tolerance=tolerance,
    )
    logger.info(
        f"Soundness audit T={T}: lambda_min={lambda_min:.6g}, bound={report.bound:.6g}, "
        f"holds={report.holds}"
    )
    return report


def soundness_audit(
    circuit: Circuit,
    input_bits: str | None = None,
    dense_cap: int = DEFAULT_DENSE_CAP,
    max_accept_probability: float = MAX_ACCEPT_PROBABILITY,
    null_tol: float = NULL_SPACE_TOL,
    tolerance: float = AUDIT_TOL,
) -> SoundnessReport:
    """Dense check of lambda_min(H) >= 1/(4(T+1)^3) and its three ingredients.

    Refuses instances whose best witness is accepted with probability above
    max_accept_probability.
    """
    circuit = prepare_circuit(circuit, input_bits)
    best = max_acceptance_probability(circuit, dense_cap)
    if best > max_accept_probability:
        logger.warning(f"Soundness audit refused: some witness is accepted with probability {best:.3e}")
        raise AuditRefusedError(
            f"Instance is not verifiably rejecting: max acceptance probability {best:.3e} "
            f"> {max_accept_probability:.1e}"
        )

    hamiltonian = compile_register_clock(circuit)
    if hamiltonian.dimension > dense_cap:
        raise DenseCapError(hamiltonian.dimension, dense_cap)

    lambda_min = dense_eigh(hamiltonian.to_dense(dense_cap), dense_cap=dense_cap).ground_energy
    geometry = _null_space_geometry(hamiltonian, circuit.T, null_tol, dense_cap)
    return _soundness_report(circuit.T, lambda_min, best, geometry, null_tol, tolerance)


def completeness_audit(
    circuit: Circuit,
    input_bits: str | None = None,
    witness: StateVector | None = None,
    dense_cap: int = DEFAULT_DENSE_CAP,
    tolerance: float = AUDIT_TOL,
    hamiltonian: RegisterClockHamiltonian | None = None,
) -> CompletenessReport:
    """History-state energies in both encodings against the measured epsilon = 1 - P(accept).

    Without a witness the all-zero witness is used. The unary history state and
    the dense ground energy are only computed when they fit under dense_cap.
    hamiltonian may carry the already compiled register-clock Hamiltonian.
    """
    circuit = prepare_circuit(circuit, input_bits)
    if witness is None and circuit.witness_qubits:
        logger.info(f"No witness given, using |0...0> on {circuit.witness_qubits} qubits")
        witness = StateVector.basis("0" * circuit.witness_qubits)

    probability = acceptance_probability(circuit, witness)
    register = history_state(circuit, witness=witness, encoding=ClockEncoding.REGISTER)

    unary = None
    if 2 ** (circuit.m + circuit.T) <= dense_cap:
        unary = history_state(circuit, witness=witness, encoding=ClockEncoding.UNARY)

    lambda_min = None
    if hamiltonian is None:
        hamiltonian = compile_register_clock(circuit)
    if hamiltonian.dimension <= dense_cap:
        lambda_min = dense_eigh(hamiltonian.to_dense(dense_cap), dense_cap=dense_cap).ground_energy

    return CompletenessReport(
        T=circuit.T,
        acceptance_probability=probability,
        epsilon=1.0 - probability,
        register=register,
        unary=unary,
        lambda_min=lambda_min,
        tolerance=tolerance,
    )


def full_audit(
    circuit: Circuit,
    input_bits: str | None = None,
    witness: StateVector | None = None,
    dense_cap: int = DEFAULT_DENSE_CAP,
    max_accept_probability: float = MAX_ACCEPT_PROBABILITY,
    null_tol: float = NULL_SPACE_TOL,
    tolerance: float = AUDIT_TOL,
) -> dict[str, Any]:
    """Completeness, clock walk, null-space angle, lemma and (when rejecting) soundness sections.

    Every dense spectrum is computed once and shared between the sections.
    """
    circuit = prepare_circuit(circuit, input_bits)
    hamiltonian = compile_register_clock(circuit)
    if hamiltonian.dimension > dense_cap:
        raise DenseCapError(hamiltonian.dimension, dense_cap)

    completeness = completeness_audit(
        circuit, witness=witness, dense_cap=dense_cap, tolerance=tolerance, hamiltonian=hamiltonian
    )
    walk = clock_walk(circuit.T)

    best = max_acceptance_probability(circuit, dense_cap)
    rejecting = best <= max_accept_probability
    geometry = _null_space_geometry(hamiltonian, circuit.T if rejecting else None, null_tol, dense_cap)

    soundness: dict[str, Any]
    if rejecting:
        assert completeness.lambda_min is not None
        soundness = _soundness_report(
            circuit.T, completeness.lambda_min, best, geometry, null_tol, tolerance
        ).to_dict()
    else:
        soundness = {"skipped": "instance accepts some witness", "max_accept_probability": best}

    return {
        "T": circuit.T,
        "m": circuit.m,
        "n": circuit.n,
        "input_bits": circuit.input_bits,
        "completeness": completeness.to_dict(),
        "clock": walk.to_dict(),
        "angle": geometry.angle.to_dict(),
        "lemma": geometry.lemma.to_dict(),
        "soundness": soundness,
    }
