"""Exception hierarchy for lhcert."""

from __future__ import annotations


class LHCertError(Exception):
    """Base exception for lhcert errors."""

    def __init__(self, message: str, code: str = "LHCERT_ERROR") -> None:
        super().__init__(message)
        self.code = code
        self.message = message


class ValidationError(LHCertError):
    """A domain object violates one of its invariants."""

    def __init__(self, message: str) -> None:
        super().__init__(message, "VALIDATION_ERROR")


class DimensionError(LHCertError):
    """Operand dimensions do not match."""

    def __init__(self, message: str) -> None:
        super().__init__(message, "DIMENSION_ERROR")


class FormatError(LHCertError):
    """Input file could not be parsed."""

    def __init__(self, message: str) -> None:
        super().__init__(message, "FORMAT_ERROR")


class CompileError(LHCertError):
    """Circuit could not be compiled into a Hamiltonian."""

    def __init__(self, message: str) -> None:
        super().__init__(message, "COMPILE_ERROR")


class SpectralError(LHCertError):
    """Eigensolver or subspace input is invalid."""

    def __init__(self, message: str, code: str = "SPECTRAL_ERROR") -> None:
        super().__init__(message, code)


class DenseCapError(SpectralError):
    """Dense materialization requested above the dimension cap."""

    def __init__(self, dimension: int, cap: int) -> None:
        super().__init__(
            f"Dimension {dimension} exceeds dense cap of {cap}", "DENSE_CAP_EXCEEDED"
        )
        self.dimension = dimension
        self.cap = cap


class AuditRefusedError(LHCertError):
    """Soundness audit requested on an instance that is not verifiably rejecting."""

    def __init__(self, message: str) -> None:
        super().__init__(message, "AUDIT_REFUSED")
