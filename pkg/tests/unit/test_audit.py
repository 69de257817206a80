"""Tests for the dense completeness and soundness audits."""

import math

import numpy as np
import pytest

import lhcert.spectral.audit as audit_module
import lhcert.spectral.geometry as geometry_module
from lhcert.errors import AuditRefusedError, DenseCapError
from lhcert.models import Circuit
from lhcert.qcore import gate
from lhcert.spectral import completeness_audit, full_audit, soundness_audit, soundness_bound
from tests.factories import identity_circuit, random_circuit, random_state, rejecting_circuit


@pytest.fixture
def accepting():
    return Circuit(m=1, gates=(gate("X", 0), gate("I", 0)), input_bits="0")


class TestSoundnessAudit:
    @pytest.mark.parametrize("seed", range(6))
    def test_rejecting_instances(self, seed):
        rng = np.random.default_rng(seed)
        m = int(rng.integers(1, 4))
        T = int(rng.integers(2, 6))
        report = soundness_audit(rejecting_circuit(rng, m, T))
        assert report.holds
        assert report.lambda_min >= soundness_bound(T) - 1e-10
        assert report.h1_check
        assert report.prop_check
        assert report.angle.lower_bound_check
        assert report.lemma.holds

    def test_identity_pair_angle(self):
        # the half-angle quantity falls below 1/(2(T+1)) while sin^2(theta) does not
        report = soundness_audit(identity_circuit(2, "0"))
        assert report.angle.cos_theta**2 == pytest.approx(2 / 3)
        assert report.angle.sin2_half_theta < 1 / 6
        assert report.angle.sin2_theta >= 1 / 6
        assert report.angle.sin2_half_theta == pytest.approx((1 - math.sqrt(2 / 3)) / 2)

    def test_accepting_instance_refused(self, accepting):
        with pytest.raises(AuditRefusedError, match="not verifiably rejecting"):
            soundness_audit(accepting)

    def test_cap(self):
        rng = np.random.default_rng(0)
        with pytest.raises(DenseCapError):
            soundness_audit(rejecting_circuit(rng, 3, 4), dense_cap=32)

    def test_report_keys(self):
        report = soundness_audit(identity_circuit(3, "0")).to_dict()
        assert report["holds"] is True
        assert set(report["angle"]) >= {"sin2_theta", "bound", "lower_bound_check"}
        assert report["prop_gap_bound"] == pytest.approx(1 / 32)


class TestCompletenessAudit:
    def test_accepting_circuit_has_zero_energy(self, accepting):
        report = completeness_audit(accepting)
        assert report.epsilon == pytest.approx(0.0, abs=1e-12)
        assert report.register.energy == pytest.approx(0.0, abs=1e-10)
        assert report.unary is not None
        assert report.unary.energy == pytest.approx(0.0, abs=1e-10)
        assert report.lambda_min == pytest.approx(0.0, abs=1e-10)
        assert report.holds

    @pytest.mark.parametrize("seed", range(4))
    def test_energy_below_rejection(self, seed):
        rng = np.random.default_rng(100 + seed)
        circuit = random_circuit(rng, 3, 4, n=1)
        report = completeness_audit(circuit, witness=random_state(rng, 2))
        assert report.holds
        assert report.register.energy == pytest.approx(report.epsilon / 5, abs=1e-10)
        assert report.lambda_min <= report.register.energy + 1e-10

    def test_default_witness_is_all_zero(self):
        circuit = Circuit(m=2, gates=(gate("CNOT", 1, 0), gate("I", 0)), input_bits="0")
        report = completeness_audit(circuit)
        assert report.acceptance_probability == pytest.approx(0.0)
        assert report.epsilon == pytest.approx(1.0)

    def test_unary_skipped_above_cap(self):
        rng = np.random.default_rng(8)
        report = completeness_audit(random_circuit(rng, 2, 4), dense_cap=32)
        assert report.unary is None
        assert report.lambda_min is not None


class TestFullAudit:
    def test_accepting_skips_soundness(self, accepting):
        report = full_audit(accepting)
        assert "skipped" in report["soundness"]
        assert report["angle"]["bound"] is None
        assert report["completeness"]["holds"] is True
        assert report["clock"]["gap_holds"] is True

    def test_rejecting_runs_soundness(self):
        rng = np.random.default_rng(3)
        report = full_audit(rejecting_circuit(rng, 2, 3))
        assert report["soundness"]["holds"] is True
        assert report["angle"]["lower_bound_check"] is True
        assert report["lemma"]["holds"] is True

    def test_input_override(self, accepting):
        report = full_audit(accepting, "1")
        assert report["input_bits"] == "1"
        assert "skipped" not in report["soundness"]

    def test_cap(self):
        rng = np.random.default_rng(4)
        with pytest.raises(DenseCapError):
            full_audit(random_circuit(rng, 3, 3), dense_cap=16)

    def test_soundness_section_matches_standalone_audit(self):
        circuit = rejecting_circuit(np.random.default_rng(5), 2, 3)
        combined = full_audit(circuit)["soundness"]
        standalone = soundness_audit(circuit).to_dict()
        for key in ("lambda_min", "h1_second_eigenvalue", "prop_second_eigenvalue", "max_accept_probability"):
            assert combined[key] == pytest.approx(standalone[key], abs=1e-12)
        assert combined["holds"] == standalone["holds"]

    def test_each_spectrum_computed_once(self, monkeypatch):
        calls = {"eigh": 0, "best": 0}

        def counting(original, key):
            def wrapper(*args, **kwargs):
                calls[key] += 1
                return original(*args, **kwargs)

            return wrapper

        monkeypatch.setattr(audit_module, "dense_eigh", counting(audit_module.dense_eigh, "eigh"))
        monkeypatch.setattr(geometry_module, "dense_eigh", counting(geometry_module.dense_eigh, "eigh"))
        monkeypatch.setattr(
            audit_module,
            "max_acceptance_probability",
            counting(audit_module.max_acceptance_probability, "best"),
        )
        full_audit(rejecting_circuit(np.random.default_rng(6), 2, 3))
        # H, H_in + H_out, H_prop and their sum for the lemma
        assert calls == {"eigh": 4, "best": 1}
