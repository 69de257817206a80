"""3-SAT as a diagonal 3-local Hamiltonian counting unsatisfied clauses."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from lhcert.errors import ValidationError
from lhcert.models import LocalTerm
from lhcert.ops.hamiltonian import HamiltonianSpec

logger = logging.getLogger(__name__)

MAX_CLAUSE_WIDTH = 3

Clause = tuple[int, ...]


def normalize_clause(literals: tuple[int, ...] | list[int]) -> Clause:
    """Drop repeated literals, keeping first-occurrence order."""
    clause: list[int] = []
    for literal in literals:
        if literal == 0:
            raise ValidationError("Literal 0 is reserved as the DIMACS clause terminator")
        if -literal in clause:
            raise ValidationError(f"Clause {tuple(literals)} is tautological (x{abs(literal)} and its negation)")
        if literal not in clause:
            clause.append(int(literal))
    return tuple(clause)


@dataclass
class CnfFormula:
    """Conjunction of clauses over variables 1..n_vars; variable v lives on qubit v - 1."""

    n_vars: int
    clauses: list[Clause] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.n_vars < 0:
            raise ValidationError(f"Variable count must be non-negative, got {self.n_vars}")
        self.clauses = [normalize_clause(c) for c in self.clauses]
        for clause in self.clauses:
            if not 1 <= len(clause) <= MAX_CLAUSE_WIDTH:
                raise ValidationError(
                    f"Clause {clause} has {len(clause)} literals, expected 1..{MAX_CLAUSE_WIDTH}"
                )
            for literal in clause:
                if not 1 <= abs(literal) <= self.n_vars:
                    raise ValidationError(
                        f"Literal {literal} outside variables 1..{self.n_vars}"
                    )

    def unsatisfied_count(self, assignment: int | str) -> int:
        """Clauses falsified by an assignment (bit string or index, variable 1 most significant)."""
        bits = assignment if isinstance(assignment, str) else format(assignment, f"0{self.n_vars}b")
        if self.n_vars == 0:
            bits = ""
        count = 0
        for clause in self.clauses:
            satisfied = any((bits[abs(lit) - 1] == "1") == (lit > 0) for lit in clause)
            count += not satisfied
        return count


def clause_to_term(clause: Clause | list[int]) -> LocalTerm:
    """Rank-1 projector onto the unique assignment of the clause's variables that falsifies it."""
    clause = normalize_clause(tuple(clause))
    if not 1 <= len(clause) <= MAX_CLAUSE_WIDTH:
        raise ValidationError(f"Clause {clause} has {len(clause)} literals, expected 1..{MAX_CLAUSE_WIDTH}")

    # a positive literal is falsified by 0, a negated one by 1
    falsifying = "".join("0" if lit > 0 else "1" for lit in clause)
    dim = 2 ** len(clause)
    matrix = np.zeros((dim, dim), dtype=complex)
    index = int(falsifying, 2)
    matrix[index, index] = 1.0
    return LocalTerm(tuple(abs(lit) - 1 for lit in clause), matrix)


def encode(formula: CnfFormula) -> HamiltonianSpec:
    """H = sum of clause projectors; H|z> = (number of clauses z falsifies)|z>."""
    terms = [clause_to_term(clause) for clause in formula.clauses]
    logger.info(f"Encoded {formula.n_vars} variables, {len(terms)} clauses")
    return HamiltonianSpec(
        n_qubits=formula.n_vars,
        terms=terms,
        a=0.0,
        b=1.0,
        metadata={"encoding": "3sat", "clauses": len(terms)},
    )
