"""Verification protocol simulation and amplification planning."""

from lhcert.verifier.amplification import (
    amplified_accept_probability,
    hoeffding_error,
    plan_amplification,
)
from lhcert.verifier.protocol import (
    ancilla_coin_probability,
    coin_probability,
    coin_unitary,
    decompose_term,
    protocol_accept_probability,
    reconstruction_error,
)

__all__ = [
    "amplified_accept_probability",
    "ancilla_coin_probability",
    "coin_probability",
    "coin_unitary",
    "decompose_term",
    "hoeffding_error",
    "plan_amplification",
    "protocol_accept_probability",
    "reconstruction_error",
]
