"""Circuit representation and exact statevector simulation."""

from lhcert.qcore.gates import adjoint, custom_gate, gate, random_unitary
from lhcert.qcore.simulator import (
    acceptance_probability,
    apply_gate,
    circuit_unitary,
    initial_state,
    max_acceptance_probability,
    run_circuit,
    run_circuit_history,
    unitary_prefixes,
)
from lhcert.qcore.tensor import apply_local, embed_dense

__all__ = [
    "acceptance_probability",
    "adjoint",
    "apply_gate",
    "apply_local",
    "circuit_unitary",
    "custom_gate",
    "embed_dense",
    "gate",
    "initial_state",
    "max_acceptance_probability",
    "random_unitary",
    "run_circuit",
    "run_circuit_history",
    "unitary_prefixes",
]
