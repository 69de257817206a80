"""DIMACS CNF reader and writer."""

from __future__ import annotations

from pathlib import Path

from lhcert.errors import FormatError, ValidationError
from lhcert.satenc.encoder import CnfFormula


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text: "c" comments, one "p cnf V C" line, 0-terminated clauses."""
    n_vars: int | None = None
    declared_clauses = 0
    clauses: list[list[int]] = []
    pending: list[int] = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break

        if line.startswith("p"):
            parts = line.split()
            if n_vars is not None:
                raise FormatError(f"Line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"Line {lineno}: invalid problem line: {line}")
            try:
                n_vars, declared_clauses = int(parts[2]), int(parts[3])
            except ValueError as e:
                raise FormatError(f"Line {lineno}: invalid problem line: {line}") from e
            continue

        if n_vars is None:
            raise FormatError(f"Line {lineno}: clause before the problem line")

        try:
            literals = [int(tok) for tok in line.split()]
        except ValueError as e:
            raise FormatError(f"Line {lineno}: non-integer literal in: {line}") from e

        for literal in literals:
            if literal == 0:
                if not pending:
                    raise FormatError(f"Line {lineno}: empty clause")
                clauses.append(pending)
                pending = []
            else:
                pending.append(literal)

    if n_vars is None:
        raise FormatError("Missing problem line 'p cnf <vars> <clauses>'")
    if pending:
        raise FormatError("Last clause is not terminated by 0")
    if len(clauses) != declared_clauses:
        raise FormatError(
            f"Problem line declares {declared_clauses} clauses, found {len(clauses)}"
        )

    try:
        return CnfFormula(n_vars=n_vars, clauses=[tuple(c) for c in clauses])
    except ValidationError as e:
        raise FormatError(f"Invalid formula: {e.message}") from e


def load_dimacs(path: Path) -> CnfFormula:
    if not path.exists():
        raise FormatError(f"CNF file not found: {path}")
    return parse_dimacs(path.read_text())


def format_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.n_vars} {len(formula.clauses)}"]
    lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in formula.clauses)
    return "\n".join(lines) + "\n"
