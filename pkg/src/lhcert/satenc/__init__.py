"""3-SAT to 3-local Hamiltonian encoding."""

from lhcert.satenc.dimacs import format_dimacs, load_dimacs, parse_dimacs
from lhcert.satenc.encoder import CnfFormula, clause_to_term, encode

__all__ = [
    "CnfFormula",
    "clause_to_term",
    "encode",
    "format_dimacs",
    "load_dimacs",
    "parse_dimacs",
]
