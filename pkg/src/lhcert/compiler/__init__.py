"""Circuit-to-Hamiltonian reductions with register and unary clocks."""

from lhcert.compiler.history import history_amplitudes, history_state, rotation_R
from lhcert.compiler.register import (
    RegisterClockHamiltonian,
    compile_register_clock,
    propagation_term,
    thresholds,
)
from lhcert.compiler.unary import (
    compile_unary,
    select_terms,
    unary_clock_index,
    unary_isometry,
    unary_propagation_term,
)

__all__ = [
    "RegisterClockHamiltonian",
    "compile_register_clock",
    "compile_unary",
    "history_amplitudes",
    "history_state",
    "propagation_term",
    "rotation_R",
    "select_terms",
    "thresholds",
    "unary_clock_index",
    "unary_isometry",
    "unary_propagation_term",
]
