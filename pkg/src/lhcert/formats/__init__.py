"""JSON file formats for circuits, states and Hamiltonians."""

from lhcert.formats.base import JsonCodec, decode_matrix, dumps, encode_matrix
from lhcert.formats.circuits import (
    CircuitCodec,
    StateCodec,
    dump_circuit,
    dump_state,
    load_circuit,
    load_state,
)
from lhcert.formats.hamiltonians import (
    HamiltonianCodec,
    OpsHamiltonianCodec,
    RegisterHamiltonianCodec,
    dump_hamiltonian,
    load_hamiltonian,
)

__all__ = [
    "CircuitCodec",
    "HamiltonianCodec",
    "JsonCodec",
    "OpsHamiltonianCodec",
    "RegisterHamiltonianCodec",
    "StateCodec",
    "decode_matrix",
    "dump_circuit",
    "dump_hamiltonian",
    "dump_state",
    "dumps",
    "encode_matrix",
    "load_circuit",
    "load_hamiltonian",
    "load_state",
]
