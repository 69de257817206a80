"""CLI command implementations."""

from __future__ import annotations

import logging
from collections.abc import Callable
from enum import IntEnum
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.table import Table

from lhcert.config import LHCertConfig
from lhcert.errors import (
    CompileError,
    DenseCapError,
    DimensionError,
    FormatError,
    LHCertError,
    ValidationError,
)
from lhcert.formats import dumps
from lhcert.models import Classification

console = Console()
error_console = Console(stderr=True)
logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    ERROR = 1
    INPUT = 2
    REFUSED = 3
    UNDECIDED = 4
    DENSE_CAP = 5


def exit_code_for(error: Exception) -> ExitCode:
    """Map an lhcert error to the fixed exit-code contract."""
    if isinstance(error, DenseCapError):
        return ExitCode.DENSE_CAP
    if isinstance(error, (FormatError, DimensionError, ValidationError)):
        return ExitCode.INPUT
    if isinstance(error, CompileError):
        return ExitCode.REFUSED
    return ExitCode.ERROR


def _fail(error: Exception, verbose: bool = False) -> ExitCode:
    code = exit_code_for(error)
    if isinstance(error, LHCertError):
        error_console.print(f"[red]Error:[/red] {error.message} ({error.code})")
    else:
        error_console.print(f"[red]Error:[/red] {error}")
        if verbose:
            import traceback

            error_console.print(traceback.format_exc())
    return code


def _emit(
    report: dict[str, Any],
    out: Path | None,
    json_output: bool,
    summary: Callable[[dict[str, Any]], None],
) -> None:
    text = dumps(report)
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
        logger.info(f"Wrote report to {out}")
    if json_output:
        console.out(text, end="", highlight=False)
    else:
        summary(report)


def _fmt(value: float | None) -> str:
    return "-" if value is None else f"{value:.10g}"


def run_compile(
    circuit_path: Path,
    input_bits: str | None = None,
    clock: str = "register",
    endpoints: str = "minimal",
    out: Path | None = None,
    strict: bool = False,
    json_output: bool = False,
    verbose: bool = False,
) -> int:
    """Compile a circuit file. Returns exit code (0=ok, 2=bad input, 3=refused)."""
    from lhcert.compiler import compile_register_clock, compile_unary
    from lhcert.formats import HamiltonianCodec, load_circuit

    try:
        circuit = load_circuit(circuit_path)
        if clock == "unary":
            hamiltonian: Any = compile_unary(circuit, input_bits, endpoints=endpoints)  # type: ignore[arg-type]
        else:
            hamiltonian = compile_register_clock(circuit, input_bits)

        if strict and not hamiltonian.has_thresholds:
            raise CompileError(f"Thresholds refused for T={circuit.T} (need T >= 2)")

        data = HamiltonianCodec().encode(hamiltonian)
        if out is not None:
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(dumps(data))

        summary = {
            "encoding": clock,
            "dimension": hamiltonian.dimension,
            "terms": hamiltonian.term_count,
            "a": hamiltonian.a,
            "b": hamiltonian.b,
            "metadata": hamiltonian.metadata,
        }
        if json_output:
            console.out(dumps(summary), end="", highlight=False)
        else:
            console.print(f"[bold]Compiled {clock} Hamiltonian[/bold] from {circuit_path}")
            console.print(f"  T = {circuit.T}, m = {circuit.m}, n = {hamiltonian.metadata['n']}")
            console.print(f"  Terms: {hamiltonian.term_count}, dimension {hamiltonian.dimension}")
            console.print(f"  Thresholds: a = {_fmt(hamiltonian.a)}, b = {_fmt(hamiltonian.b)}")
            if hamiltonian.metadata.get("edge_case_T1"):
                console.print("  [yellow]T=1 edge case: single clock qubit propagation term[/yellow]")
            if out is not None:
                console.print(f"  Written to {out}")
        return ExitCode.OK

    except Exception as e:
        return _fail(e, verbose)


def run_energy(
    hamiltonian_path: Path,
    settings: LHCertConfig,
    method: str = "dense",
    seed: int = 0,
    tolerance: float | None = None,
    out: Path | None = None,
    json_output: bool = False,
    verbose: bool = False,
) -> int:
    """Estimate the ground energy and classify it. Returns 0 for YES/NO, 4 for UNDECIDED."""
    from lhcert.formats import load_hamiltonian
    from lhcert.spectral import ground_energy

    try:
        hamiltonian = load_hamiltonian(hamiltonian_path)
        report = ground_energy(
            hamiltonian,
            method=method,
            seed=seed,
            dense_cap=settings.numerics.dense_cap,
            hermitian_tol=settings.numerics.eigh_hermitian_tol,
            max_iterations=settings.lanczos.max_iterations,
            tolerance=tolerance if tolerance is not None else settings.lanczos.tolerance,
        )
        lambda_min = report.ground_energy
        classification = (
            hamiltonian.classify(lambda_min) if report.converged else Classification.UNDECIDED
        )
        result = {
            "lambda_min": lambda_min,
            "classification": classification.value,
            "a": hamiltonian.a,
            "b": hamiltonian.b,
            "method": report.method,
            "seed": seed,
            "dimension": hamiltonian.dimension,
            "residual": report.residual,
            "iterations": report.iterations,
            "converged": report.converged,
        }
        _emit(result, out, json_output, _print_energy)
        return ExitCode.UNDECIDED if classification == Classification.UNDECIDED else ExitCode.OK

    except Exception as e:
        return _fail(e, verbose)


def _print_energy(result: dict[str, Any]) -> None:
    colors = {"YES": "green", "NO": "red", "UNDECIDED": "yellow"}
    color = colors[result["classification"]]

    table = Table(title="Ground Energy")
    table.add_column("Quantity")
    table.add_column("Value")
    table.add_row("lambda_min", _fmt(result["lambda_min"]))
    table.add_row("a", _fmt(result["a"]))
    table.add_row("b", _fmt(result["b"]))
    table.add_row("method", f"{result['method']} ({result['iterations']} iterations)")
    table.add_row("residual", f"{result['residual']:.3e}")
    table.add_row("classification", f"[{color}]{result['classification']}[/{color}]")
    console.print(table)


def run_sat2ham(
    cnf_path: Path,
    out: Path | None = None,
    json_output: bool = False,
    verbose: bool = False,
) -> int:
    """Encode a DIMACS formula as a Hamiltonian file."""
    from lhcert.formats import HamiltonianCodec
    from lhcert.satenc import encode, load_dimacs

    try:
        formula = load_dimacs(cnf_path)
        spec = encode(formula)
        data = HamiltonianCodec().encode(spec)
        if out is not None:
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(dumps(data))

        summary = {"variables": formula.n_vars, "clauses": len(formula.clauses), "a": spec.a, "b": spec.b}
        if json_output:
            console.out(dumps(summary), end="", highlight=False)
        else:
            console.print(
                f"[bold]Encoded[/bold] {formula.n_vars} variables, {len(formula.clauses)} clauses "
                f"(a = {spec.a}, b = {spec.b})"
            )
            if out is not None:
                console.print(f"  Written to {out}")
        return ExitCode.OK

    except Exception as e:
        return _fail(e, verbose)


def run_verify(
    hamiltonian_path: Path,
    witness_path: Path,
    shots: int = 0,
    seed: int = 0,
    out: Path | None = None,
    json_output: bool = False,
    verbose: bool = False,
) -> int:
    """Acceptance probability of the random-term verifier on a witness state."""
    from lhcert.formats import load_hamiltonian, load_state
    from lhcert.ops import HamiltonianSpec
    from lhcert.verifier import protocol_accept_probability

    try:
        hamiltonian = load_hamiltonian(hamiltonian_path)
        if not isinstance(hamiltonian, HamiltonianSpec):
            raise FormatError("verify needs a Hamiltonian in the ops format (local terms on qubits)")
        witness = load_state(witness_path)
        estimate = protocol_accept_probability(hamiltonian, witness, shots=shots, seed=seed)
        _emit(estimate.to_dict(), out, json_output, _print_acceptance)
        return ExitCode.OK

    except Exception as e:
        return _fail(e, verbose)


def _print_acceptance(result: dict[str, Any]) -> None:
    console.print(f"[bold]Acceptance probability:[/bold] {result['exact']:.12g}")
    if result["sampled"] is not None:
        console.print(
            f"  Sampled: {result['sampled']:.6f} over {result['shots']} shots "
            f"(seed {result['seed']}, stderr {result['stderr']:.2e})"
        )


def run_audit(
    circuit_path: Path,
    settings: LHCertConfig,
    input_bits: str | None = None,
    witness_path: Path | None = None,
    tolerance: float | None = None,
    out: Path | None = None,
    json_output: bool = False,
    verbose: bool = False,
) -> int:
    """Dense completeness/soundness audit of a compiled circuit."""
    from lhcert.formats import load_circuit, load_state
    from lhcert.spectral import full_audit

    try:
        circuit = load_circuit(circuit_path)
        witness = load_state(witness_path) if witness_path is not None else None
        report = full_audit(
            circuit,
            input_bits,
            witness=witness,
            dense_cap=settings.numerics.dense_cap,
            max_accept_probability=settings.audit.max_accept_probability,
            null_tol=settings.numerics.null_space_tol,
            tolerance=tolerance if tolerance is not None else settings.audit.tolerance,
        )
        _emit(report, out, json_output, _print_audit)
        return ExitCode.OK

    except Exception as e:
        return _fail(e, verbose)


def _check(flag: bool | None) -> str:
    if flag is None:
        return "[dim]n/a[/dim]"
    return "[green]pass[/green]" if flag else "[red]FAIL[/red]"


def _print_audit(report: dict[str, Any]) -> None:
    completeness = report["completeness"]
    clock = report["clock"]
    soundness = report["soundness"]

    console.print(f"[bold]Audit[/bold] T={report['T']}, m={report['m']}, x={report['input_bits']!r}\n")
    table = Table()
    table.add_column("Section")
    table.add_column("Value")
    table.add_column("Check")
    table.add_row(
        "completeness",
        f"eps={_fmt(completeness['epsilon'])}, energy={_fmt(completeness['register']['energy'])}",
        _check(completeness["holds"]),
    )
    table.add_row(
        "clock",
        f"lambda_2(A)={_fmt(clock['second_eigenvalue'])} >= {_fmt(clock['gap_bound'])}",
        _check(clock["gap_holds"]),
    )
    table.add_row(
        "angle",
        f"sin^2(theta)={_fmt(report['angle']['sin2_theta'])}",
        _check(report["angle"]["lower_bound_check"]),
    )
    table.add_row("lemma", f"bound={_fmt(report['lemma']['bound'])}", _check(report["lemma"]["holds"]))
    if "skipped" in soundness:
        table.add_row("soundness", f"skipped: {soundness['skipped']}", _check(None))
    else:
        table.add_row(
            "soundness",
            f"lambda_min={_fmt(soundness['lambda_min'])} >= {_fmt(soundness['bound'])}",
            _check(soundness["holds"]),
        )
    console.print(table)


def run_clock(
    T: int,  # noqa: N803
    out: Path | None = None,
    json_output: bool = False,
    verbose: bool = False,
) -> int:
    """Clock-walk matrix spectrum and conductance gap bound."""
    from lhcert.spectral import clock_walk

    try:
        walk = clock_walk(T)
        _emit(walk.to_dict(), out, json_output, _print_clock)
        return ExitCode.OK

    except Exception as e:
        return _fail(e, verbose)


def _print_clock(result: dict[str, Any]) -> None:
    console.print(f"[bold]Clock walk[/bold] T={result['T']}")
    console.print(f"  Conductance: {_fmt(result['conductance'])}")
    console.print(f"  Second eigenvalue of A: {_fmt(result['second_eigenvalue'])}")
    console.print(f"  Gap bound phi^2/2: {_fmt(result['gap_bound'])}  {_check(result['gap_holds'])}")
