"""Circuit and state-vector JSON files."""

from __future__ import annotations

from pathlib import Path
from typing import Any

from lhcert.errors import FormatError
from lhcert.formats.base import (
    JsonCodec,
    decode_matrix,
    decode_vector,
    encode_matrix,
    encode_vector,
    optional,
    require,
    require_indices,
)
from lhcert.models import Circuit, Gate, GateName, StateVector


class CircuitCodec(JsonCodec[Circuit]):
    """{"qubits", "gates": [{"name", "targets", "matrix"?}], "input_bits", "output_qubit"}."""

    kind = "circuit"

    def encode(self, obj: Circuit) -> dict[str, Any]:
        gates = []
        for gate in obj.gates:
            entry: dict[str, Any] = {"name": gate.name.value, "targets": list(gate.targets)}
            if gate.name == GateName.CUSTOM:
                entry["matrix"] = encode_matrix(gate.unitary)
            gates.append(entry)
        return {
            "qubits": obj.m,
            "gates": gates,
            "input_bits": obj.input_bits,
            "output_qubit": obj.output_qubit,
        }

    def decode(self, data: dict[str, Any]) -> Circuit:
        m = require(data, "qubits", int, "Circuit")
        raw_gates = require(data, "gates", list, "Circuit")
        gates = []
        for t, raw in enumerate(raw_gates, 1):
            if not isinstance(raw, dict):
                raise FormatError(f"Gate {t} must be an object")
            name = require(raw, "name", str, f"Gate {t}")
            try:
                gate_name = GateName(name.upper())
            except ValueError as e:
                raise FormatError(f"Gate {t}: unknown gate name {name!r}") from e
            targets = require_indices(raw, "targets", f"Gate {t}")
            matrix = decode_matrix(raw["matrix"]) if "matrix" in raw else None
            gates.append(Gate(gate_name, targets, matrix))
        return Circuit(
            m=m,
            gates=tuple(gates),
            input_bits=optional(data, "input_bits", str, "Circuit", ""),
            output_qubit=optional(data, "output_qubit", int, "Circuit", 0),
        )


class StateCodec(JsonCodec[StateVector]):
    """{"qubits", "amplitudes": [[re, im], ...]}."""

    kind = "state"

    def encode(self, obj: StateVector) -> dict[str, Any]:
        return {"qubits": obj.m, "amplitudes": encode_vector(obj.amplitudes)}

    def decode(self, data: dict[str, Any]) -> StateVector:
        m = require(data, "qubits", int, "State")
        return StateVector(m, decode_vector(require(data, "amplitudes", list, "State")))


def load_circuit(path: Path) -> Circuit:
    return CircuitCodec().load(path)


def dump_circuit(circuit: Circuit, path: Path) -> None:
    CircuitCodec().dump(circuit, path)


def load_state(path: Path) -> StateVector:
    return StateCodec().load(path)


def dump_state(state: StateVector, path: Path) -> None:
    StateCodec().dump(state, path)
