"""Operator algebra for sums of local terms."""

from lhcert.ops.base import Hamiltonian
from lhcert.ops.hamiltonian import HamiltonianSpec, apply_hamiltonian, embed, expectation

__all__ = ["Hamiltonian", "HamiltonianSpec", "apply_hamiltonian", "embed", "expectation"]
