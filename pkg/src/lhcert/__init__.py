"""lhcert - circuit-to-local-Hamiltonian reductions and numerical certification."""

__version__ = "0.1.0"
