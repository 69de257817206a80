"""Eigensolvers, clock-walk analysis and the dense soundness machinery."""

from lhcert.spectral.audit import completeness_audit, full_audit, soundness_audit, soundness_bound
from lhcert.spectral.eigen import (
    dense_eigh,
    ground_energy,
    lanczos_min_eig,
    null_space,
    second_eigenvalue,
)
from lhcert.spectral.geometry import angle_bound, geometric_lemma_check, principal_angle
from lhcert.spectral.walk import clock_matrix, clock_walk

__all__ = [
    "angle_bound",
    "clock_matrix",
    "clock_walk",
    "completeness_audit",
    "dense_eigh",
    "full_audit",
    "geometric_lemma_check",
    "ground_energy",
    "lanczos_min_eig",
    "null_space",
    "principal_angle",
    "second_eigenvalue",
    "soundness_audit",
    "soundness_bound",
]
