"""Main CLI entry point for lhcert."""

from __future__ import annotations

import logging
import sys
from pathlib import Path

import click
from rich.console import Console

from lhcert import __version__
from lhcert.config import LHCertConfig, find_config_file, generate_example_config, load_config

console = Console()
error_console = Console(stderr=True)

SEED = click.IntRange(0, 2**64 - 1)


def setup_logging(level: str, format: str = "text") -> None:
    """Configure logging."""
    log_level = getattr(logging, level.upper(), logging.INFO)

    if format == "json":
        import json

        class JsonFormatter(logging.Formatter):
            def format(self, record: logging.LogRecord) -> str:
                return json.dumps(
                    {
                        "timestamp": self.formatTime(record),
                        "level": record.levelname,
                        "logger": record.name,
                        "message": record.getMessage(),
                    }
                )

        handler = logging.StreamHandler()
        handler.setFormatter(JsonFormatter())
    else:
        handler = logging.StreamHandler()
        handler.setFormatter(
            logging.Formatter("%(asctime)s [%(levelname)s] %(name)s: %(message)s")
        )

    logging.root.handlers = [handler]
    logging.root.setLevel(log_level)


def load_settings(ctx: click.Context) -> LHCertConfig:
    """Load the config file (or defaults) and configure logging from it."""
    config_path = ctx.obj["config_path"] or find_config_file()
    try:
        settings = load_config(config_path) if config_path else LHCertConfig()
    except FileNotFoundError:
        error_console.print(f"[red]Error:[/red] Config file not found: {config_path}")
        sys.exit(1)
    except ValueError as e:
        error_console.print(f"[red]Validation error:[/red] {e}")
        sys.exit(1)

    if ctx.obj["quiet"]:
        level = "error"
    elif ctx.obj["verbose"]:
        level = settings.logging.log_level
    else:
        level = "warning"
    setup_logging(level, settings.logging.log_format)
    return settings


def _out(path: str | None) -> Path | None:
    return Path(path) if path else None


@click.group()
@click.version_option(version=__version__, prog_name="lhcert")
@click.option(
    "--config",
    "-c",
    type=click.Path(exists=False),
    help="Path to config file",
)
@click.option(
    "--verbose",
    "-v",
    is_flag=True,
    help="Enable verbose output",
)
@click.option(
    "--quiet",
    "-q",
    is_flag=True,
    help="Suppress non-essential output",
)
@click.option(
    "--json",
    "json_output",
    is_flag=True,
    help="Output in JSON format",
)
@click.pass_context
def cli(
    ctx: click.Context,
    config: str | None,
    verbose: bool,
    quiet: bool,
    json_output: bool,
) -> None:
    """lhcert - compile circuits into local Hamiltonians and certify their spectra."""
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = Path(config) if config else None
    ctx.obj["verbose"] = verbose
    ctx.obj["quiet"] = quiet
    ctx.obj["json_output"] = json_output


@cli.command()
@click.option(
    "--path",
    "-p",
    type=click.Path(),
    default="./lhcert.yaml",
    help="Path to create config file",
)
def init(path: str) -> None:
    """Initialize a new lhcert configuration file."""
    config_path = Path(path)

    if config_path.exists():
        error_console.print(f"[red]Error:[/red] Config file already exists: {config_path}")
        sys.exit(1)

    config_path.parent.mkdir(parents=True, exist_ok=True)
    config_path.write_text(generate_example_config())

    console.print(f"[green]Created config file:[/green] {config_path}")
    console.print("\nNext steps:")
    console.print("  1. Adjust tolerances and the dense cap if needed")
    console.print("  2. Run: lhcert validate")
    console.print("  3. Run: lhcert compile circuit.json --out ham.json")


@cli.command()
@click.pass_context
def validate(ctx: click.Context) -> None:
    """Validate configuration file."""
    config_path = ctx.obj["config_path"] or find_config_file()

    if not config_path:
        error_console.print("[red]Error:[/red] No config file found")
        error_console.print("Run 'lhcert init' to create one")
        sys.exit(1)

    try:
        config = load_config(config_path)

        console.print(f"[green]Config valid:[/green] {config_path}")
        console.print(f"  Version: {config.version}")
        console.print(f"  Dense cap: {config.numerics.dense_cap}")
        console.print(f"  Null-space tolerance: {config.numerics.null_space_tol:g}")
        console.print(
            f"  Lanczos: {config.lanczos.max_iterations} iterations, tolerance {config.lanczos.tolerance:g}"
        )

    except FileNotFoundError:
        error_console.print(f"[red]Error:[/red] Config file not found: {config_path}")
        sys.exit(1)
    except ValueError as e:
        error_console.print(f"[red]Validation error:[/red] {e}")
        sys.exit(1)
    except Exception as e:
        error_console.print(f"[red]Error:[/red] {e}")
        sys.exit(1)


@cli.command("compile")
@click.argument("circuit_file", type=click.Path())
@click.option("--input-bits", "-x", help="Input bit string x (overrides the file)")
@click.option(
    "--clock",
    type=click.Choice(["register", "unary"]),
    default="register",
    show_default=True,
    help="Clock encoding",
)
@click.option(
    "--endpoints",
    type=click.Choice(["minimal", "paired"]),
    default="minimal",
    show_default=True,
    help="Unary time-0/time-T indicator form",
)
@click.option("--out", "-o", type=click.Path(), help="Write the Hamiltonian JSON here")
@click.option("--strict", is_flag=True, help="Fail with exit 3 when thresholds are refused")
@click.pass_context
def compile_cmd(
    ctx: click.Context,
    circuit_file: str,
    input_bits: str | None,
    clock: str,
    endpoints: str,
    out: str | None,
    strict: bool,
) -> None:
    """Compile a circuit and input into a local Hamiltonian."""
    from lhcert.cli.commands import run_compile

    load_settings(ctx)
    exit_code = run_compile(
        circuit_path=Path(circuit_file),
        input_bits=input_bits,
        clock=clock,
        endpoints=endpoints,
        out=_out(out),
        strict=strict,
        json_output=ctx.obj["json_output"],
        verbose=ctx.obj["verbose"],
    )
    sys.exit(exit_code)


@cli.command()
@click.argument("hamiltonian_file", type=click.Path())
@click.option(
    "--method",
    type=click.Choice(["dense", "lanczos"]),
    default="dense",
    show_default=True,
    help="Eigensolver",
)
@click.option("--seed", type=SEED, default=None, help="Lanczos start-vector seed")
@click.option("--tolerance", type=float, help="Lanczos residual tolerance")
@click.option("--out", "-o", type=click.Path(), help="Write the JSON report here")
@click.pass_context
def energy(
    ctx: click.Context,
    hamiltonian_file: str,
    method: str,
    seed: int | None,
    tolerance: float | None,
    out: str | None,
) -> None:
    """Ground energy and YES/NO/UNDECIDED classification."""
    from lhcert.cli.commands import run_energy

    settings = load_settings(ctx)
    exit_code = run_energy(
        hamiltonian_path=Path(hamiltonian_file),
        settings=settings,
        method=method,
        seed=seed if seed is not None else settings.verifier.seed,
        tolerance=tolerance,
        out=_out(out),
        json_output=ctx.obj["json_output"],
        verbose=ctx.obj["verbose"],
    )
    sys.exit(exit_code)


@cli.command()
@click.argument("cnf_file", type=click.Path())
@click.option("--out", "-o", type=click.Path(), help="Write the Hamiltonian JSON here")
@click.pass_context
def sat2ham(ctx: click.Context, cnf_file: str, out: str | None) -> None:
    """Encode a DIMACS CNF formula as a 3-local Hamiltonian."""
    from lhcert.cli.commands import run_sat2ham

    load_settings(ctx)
    exit_code = run_sat2ham(
        cnf_path=Path(cnf_file),
        out=_out(out),
        json_output=ctx.obj["json_output"],
        verbose=ctx.obj["verbose"],
    )
    sys.exit(exit_code)


@cli.command()
@click.argument("hamiltonian_file", type=click.Path())
@click.argument("witness_file", type=click.Path())
@click.option("--shots", type=click.IntRange(min=0), default=None, help="Monte Carlo rounds")
@click.option("--seed", type=SEED, default=None, help="Sampling seed")
@click.option("--out", "-o", type=click.Path(), help="Write the JSON report here")
@click.pass_context
def verify(
    ctx: click.Context,
    hamiltonian_file: str,
    witness_file: str,
    shots: int | None,
    seed: int | None,
    out: str | None,
) -> None:
    """Acceptance probability of the random-term verifier on a witness."""
    from lhcert.cli.commands import run_verify

    settings = load_settings(ctx)
    exit_code = run_verify(
        hamiltonian_path=Path(hamiltonian_file),
        witness_path=Path(witness_file),
        shots=shots if shots is not None else settings.verifier.shots,
        seed=seed if seed is not None else settings.verifier.seed,
        out=_out(out),
        json_output=ctx.obj["json_output"],
        verbose=ctx.obj["verbose"],
    )
    sys.exit(exit_code)


@cli.command()
@click.argument("circuit_file", type=click.Path())
@click.option("--input-bits", "-x", help="Input bit string x (overrides the file)")
@click.option("--witness", "witness_file", type=click.Path(), help="Witness state JSON")
@click.option("--tolerance", type=float, help="Audit comparison tolerance")
@click.option("--out", "-o", type=click.Path(), help="Write the JSON report here")
@click.pass_context
def audit(
    ctx: click.Context,
    circuit_file: str,
    input_bits: str | None,
    witness_file: str | None,
    tolerance: float | None,
    out: str | None,
) -> None:
    """Dense completeness, clock-walk, angle, lemma and soundness audit."""
    from lhcert.cli.commands import run_audit

    settings = load_settings(ctx)
    exit_code = run_audit(
        circuit_path=Path(circuit_file),
        settings=settings,
        input_bits=input_bits,
        witness_path=_out(witness_file),
        tolerance=tolerance,
        out=_out(out),
        json_output=ctx.obj["json_output"],
        verbose=ctx.obj["verbose"],
    )
    sys.exit(exit_code)


@cli.command()
@click.argument("steps", type=int)
@click.option("--out", "-o", type=click.Path(), help="Write the JSON report here")
@click.pass_context
def clock(ctx: click.Context, steps: int, out: str | None) -> None:
    """Clock-walk report for T = STEPS."""
    from lhcert.cli.commands import run_clock

    load_settings(ctx)
    exit_code = run_clock(
        T=steps,
        out=_out(out),
        json_output=ctx.obj["json_output"],
        verbose=ctx.obj["verbose"],
    )
    sys.exit(exit_code)


if __name__ == "__main__":
    cli()
