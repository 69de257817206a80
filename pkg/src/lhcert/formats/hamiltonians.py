"""Hamiltonian JSON files: the "ops" form (local terms on qubits) and the register-clock form."""

from __future__ import annotations

from pathlib import Path
from typing import Any

from lhcert.compiler.register import RegisterClockHamiltonian
from lhcert.errors import FormatError
from lhcert.formats.base import (
    JsonCodec,
    decode_matrix,
    encode_matrix,
    optional,
    require,
    require_indices,
)
from lhcert.models import ClockRegisterTerm, LocalTerm
from lhcert.ops.base import Hamiltonian
from lhcert.ops.hamiltonian import HamiltonianSpec


def _threshold(data: dict[str, Any], key: str) -> float | None:
    value = data.get(key)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FormatError(f"Threshold {key!r} must be a number or null")
    return float(value)


def _metadata(data: dict[str, Any]) -> dict[str, Any]:
    metadata = data.get("metadata", {})
    if not isinstance(metadata, dict):
        raise FormatError("Hamiltonian metadata must be an object")
    return metadata


class OpsHamiltonianCodec(JsonCodec[HamiltonianSpec]):
    """{"format": "ops", "n_qubits", "a", "b", "metadata", "terms": [{"qubits", "matrix"}]}."""

    kind = "hamiltonian"

    def encode(self, obj: HamiltonianSpec) -> dict[str, Any]:
        return {
            "format": "ops",
            "n_qubits": obj.n_qubits,
            "a": obj.a,
            "b": obj.b,
            "metadata": obj.metadata,
            "terms": [
                {"qubits": list(term.qubits), "matrix": encode_matrix(term.matrix)} for term in obj.terms
            ],
        }

    def decode(self, data: dict[str, Any]) -> HamiltonianSpec:
        n_qubits = require(data, "n_qubits", int, "Hamiltonian")
        terms = []
        for i, raw in enumerate(require(data, "terms", list, "Hamiltonian")):
            if not isinstance(raw, dict):
                raise FormatError(f"Term {i} must be an object")
            qubits = require_indices(raw, "qubits", f"Term {i}")
            terms.append(LocalTerm(qubits, decode_matrix(require(raw, "matrix", list, f"Term {i}"))))
        return HamiltonianSpec(
            n_qubits=n_qubits,
            terms=terms,
            a=_threshold(data, "a"),
            b=_threshold(data, "b"),
            metadata=_metadata(data),
        )


class RegisterHamiltonianCodec(JsonCodec[RegisterClockHamiltonian]):
    """{"format": "register", "system_qubits", "clock_dim", "in_terms", "out_term", "prop_terms", ...}.

    Each term is {"label", "system_qubits", "parts": [{"system_matrix", "clock_matrix"}]}.
    """

    kind = "hamiltonian"

    @staticmethod
    def _encode_term(term: ClockRegisterTerm) -> dict[str, Any]:
        return {
            "label": term.label,
            "system_qubits": list(term.system_qubits),
            "parts": [
                {"system_matrix": encode_matrix(s), "clock_matrix": encode_matrix(c)} for s, c in term.parts
            ],
        }

    @staticmethod
    def _decode_term(raw: Any, clock_dim: int, what: str) -> ClockRegisterTerm:
        if not isinstance(raw, dict):
            raise FormatError(f"{what} must be an object")
        parts = []
        for part in require(raw, "parts", list, what):
            if not isinstance(part, dict):
                raise FormatError(f"{what}: every part must be an object")
            parts.append(
                (
                    decode_matrix(require(part, "system_matrix", list, what)),
                    decode_matrix(require(part, "clock_matrix", list, what)),
                )
            )
        return ClockRegisterTerm(
            system_qubits=require_indices(raw, "system_qubits", what),
            parts=tuple(parts),
            clock_dim=clock_dim,
            label=optional(raw, "label", str, what, ""),
        )

    def encode(self, obj: RegisterClockHamiltonian) -> dict[str, Any]:
        return {
            "format": "register",
            "system_qubits": obj.system_qubits,
            "clock_dim": obj.clock_dim,
            "a": obj.a,
            "b": obj.b,
            "metadata": obj.metadata,
            "in_terms": [self._encode_term(t) for t in obj.in_terms],
            "out_term": self._encode_term(obj.out_term),
            "prop_terms": [self._encode_term(t) for t in obj.prop_terms],
        }

    def decode(self, data: dict[str, Any]) -> RegisterClockHamiltonian:
        clock_dim = require(data, "clock_dim", int, "Hamiltonian")
        return RegisterClockHamiltonian(
            system_qubits=require(data, "system_qubits", int, "Hamiltonian"),
            clock_dim=clock_dim,
            in_terms=[
                self._decode_term(raw, clock_dim, f"Input term {i}")
                for i, raw in enumerate(require(data, "in_terms", list, "Hamiltonian"))
            ],
            out_term=self._decode_term(data.get("out_term"), clock_dim, "Output term"),
            prop_terms=[
                self._decode_term(raw, clock_dim, f"Propagation term {i}")
                for i, raw in enumerate(require(data, "prop_terms", list, "Hamiltonian"))
            ],
            a=_threshold(data, "a"),
            b=_threshold(data, "b"),
            metadata=_metadata(data),
        )


class HamiltonianCodec(JsonCodec[Hamiltonian]):
    """Dispatches on the presence of "clock_dim" to the register or ops form."""

    kind = "hamiltonian"

    def encode(self, obj: Hamiltonian) -> dict[str, Any]:
        if isinstance(obj, RegisterClockHamiltonian):
            return RegisterHamiltonianCodec().encode(obj)
        if isinstance(obj, HamiltonianSpec):
            return OpsHamiltonianCodec().encode(obj)
        raise FormatError(f"No file format for {type(obj).__name__}")

    def decode(self, data: dict[str, Any]) -> Hamiltonian:
        if "clock_dim" in data:
            return RegisterHamiltonianCodec().decode(data)
        return OpsHamiltonianCodec().decode(data)


def load_hamiltonian(path: Path) -> Hamiltonian:
    return HamiltonianCodec().load(path)


def dump_hamiltonian(hamiltonian: Hamiltonian, path: Path) -> None:
    HamiltonianCodec().dump(hamiltonian, path)
