"""Configuration models and loading for lhcert."""

from __future__ import annotations

from pathlib import Path

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

LOG_LEVELS = ("debug", "info", "warning", "error")
LOG_FORMATS = ("text", "json")


class LoggingConfig(BaseModel):
    """Logging configuration."""

    log_level: str = "info"
    log_format: str = "text"

    @field_validator("log_level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        if v.lower() not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return v.lower()

    @field_validator("log_format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        if v not in LOG_FORMATS:
            raise ValueError(f"log_format must be one of {', '.join(LOG_FORMATS)}")
        return v


class NumericsConfig(BaseModel):
    """Tolerances and the dense materialization cap."""

    null_space_tol: float = 1e-9
    eigh_hermitian_tol: float = 1e-8
    dense_cap: int = 4096

    @field_validator("null_space_tol", "eigh_hermitian_tol", "dense_cap")
    @classmethod
    def validate_positive(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("must be positive")
        return v


class LanczosConfig(BaseModel):
    """Matrix-free smallest-eigenvalue solver."""

    max_iterations: int = 500
    tolerance: float = 1e-8

    @field_validator("max_iterations")
    @classmethod
    def validate_iterations(cls, v: int) -> int:
        if v < 1:
            raise ValueError("max_iterations must be at least 1")
        return v


class VerifierConfig(BaseModel):
    """Monte Carlo defaults for the verifier protocol."""

    shots: int = 0
    seed: int = 0

    @field_validator("shots", "seed")
    @classmethod
    def validate_non_negative(cls, v: int) -> int:
        if v < 0:
            raise ValueError("must be non-negative")
        return v


class AuditConfig(BaseModel):
    """Soundness audit preconditions."""

    max_accept_probability: float = 1e-6
    tolerance: float = 1e-10


class LHCertConfig(BaseModel):
    """Root configuration for lhcert."""

    version: str = "1"
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    numerics: NumericsConfig = Field(default_factory=NumericsConfig)
    lanczos: LanczosConfig = Field(default_factory=LanczosConfig)
    verifier: VerifierConfig = Field(default_factory=VerifierConfig)
    audit: AuditConfig = Field(default_factory=AuditConfig)

    @model_validator(mode="after")
    def validate_version(self) -> LHCertConfig:
        if self.version != "1":
            raise ValueError(f"Unsupported config version: {self.version}. Expected: 1")
        return self


def load_config(path: Path) -> LHCertConfig:
    """Load and validate configuration from YAML file."""
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")

    with open(path) as f:
        raw_config = yaml.safe_load(f)

    if raw_config is None:
        raise ValueError("Config file is empty")

    return LHCertConfig.model_validate(raw_config)


def find_config_file() -> Path | None:
    """Find config file in standard locations."""
    locations = [
        Path("./lhcert.yaml"),
        Path("./lhcert.yml"),
        Path.home() / ".config" / "lhcert" / "lhcert.yaml",
    ]

    for loc in locations:
        if loc.exists():
            return loc

    return None


def generate_example_config() -> str:
    """Generate example configuration."""
    return """version: "1"

logging:
  log_level: info
  log_format: text   # text | json

numerics:
  null_space_tol: 1.0e-9      # eigenvalues below count as zero
  eigh_hermitian_tol: 1.0e-8  # dense solver input check
  dense_cap: 4096             # largest dimension materialized densely

lanczos:
  max_iterations: 500
  tolerance: 1.0e-8

verifier:
  shots: 0    # Monte Carlo rounds, 0 = exact only
  seed: 0

audit:
  max_accept_probability: 1.0e-6
  tolerance: 1.0e-10
"""
