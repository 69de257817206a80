"""Tests for configuration loading and validation."""


import pytest
import yaml
from pydantic import ValidationError

from lhcert.config import (
    LHCertConfig,
    LoggingConfig,
    NumericsConfig,
    find_config_file,
    generate_example_config,
    load_config,
)


class TestLHCertConfig:
    def test_defaults(self):
        config = LHCertConfig()
        assert config.numerics.dense_cap == 4096
        assert config.numerics.null_space_tol == 1e-9
        assert config.lanczos.max_iterations == 500
        assert config.audit.max_accept_probability == 1e-6
        assert config.verifier.shots == 0

    def test_invalid_version(self):
        with pytest.raises(ValueError, match="Unsupported config version"):
            LHCertConfig(version="2")

    def test_non_positive_tolerance(self):
        with pytest.raises(ValidationError, match="must be positive"):
            NumericsConfig(null_space_tol=0.0)

    def test_log_level_normalized(self):
        assert LoggingConfig(log_level="DEBUG").log_level == "debug"

    def test_unknown_log_format(self):
        with pytest.raises(ValidationError, match="log_format"):
            LoggingConfig(log_format="xml")

    def test_negative_shots(self):
        with pytest.raises(ValidationError):
            LHCertConfig.model_validate({"verifier": {"shots": -1}})


class TestLoadConfig:
    def test_load_valid_config(self, tmp_path):
        path = tmp_path / "lhcert.yaml"
        path.write_text(
            yaml.dump({"version": "1", "numerics": {"dense_cap": 256}, "lanczos": {"tolerance": 1e-6}})
        )
        config = load_config(path)
        assert config.numerics.dense_cap == 256
        assert config.lanczos.tolerance == 1e-6
        assert config.numerics.eigh_hermitian_tol == 1e-8

    def test_load_nonexistent_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "missing.yaml")

    def test_empty_file(self, tmp_path):
        path = tmp_path / "lhcert.yaml"
        path.write_text("")
        with pytest.raises(ValueError, match="empty"):
            load_config(path)

    def test_find_in_working_directory(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("HOME", str(tmp_path / "home"))
        assert find_config_file() is None
        (tmp_path / "lhcert.yml").write_text('version: "1"\n')
        assert find_config_file().name == "lhcert.yml"


class TestGenerateExampleConfig:
    def test_example_config_is_valid_yaml(self):
        raw = yaml.safe_load(generate_example_config())
        config = LHCertConfig.model_validate(raw)
        assert config == LHCertConfig()
