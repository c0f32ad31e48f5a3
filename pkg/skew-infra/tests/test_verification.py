import json

import pytest
import yaml

from skew_infra.consts import REPORT_FIELDS, CheckStatus, ExitCode
from skew_infra.errors import AmplificationBoundExceeded, ValidationError
from skew_infra.helper_classes import SkewProduct
from skew_infra.utils import seeded_rng
from skew_infra.verification import CHECKS, CheckOutcome, VerificationSuite, checks, load_catalogue
from tests.base_test import BaseTest
from tests.config import QUICK_OVERRIDES, global_variables

COCYCLE_CHECKS = ("tail_cocycle", "tail_orbit", "aperiodicity", "level_counting", "maharam_formula", "continuity")


@pytest.fixture(scope="module")
def catalogue():
    return load_catalogue(global_variables.verification_catalogue)


class TestCatalogue(BaseTest):

    def test_order(self, catalogue):
        assert [spec.name for spec in catalogue] == list(CHECKS)
        assert [spec.criterion for spec in catalogue] == list(range(1, len(CHECKS) + 1))

    @pytest.fixture
    def write_catalogue(self, tmp_path):
        def write(checks) -> str:
            path = tmp_path.joinpath("catalogue.yaml")
            path.write_text(yaml.safe_dump({"checks": checks}))
            return str(path)

        yield write

    def test_unknown_check(self, write_catalogue):
        path = write_catalogue([{"name": "no_such_check", "criterion": 1, "layer": "iet"}])
        with pytest.raises(ValidationError):
            load_catalogue(path)

    def test_dependency_listed_later(self, write_catalogue):
        path = write_catalogue([
            {"name": "bratteli_dictionary", "criterion": 3, "layer": "bratteli", "depends_on": ["tower_oracle"]},
            {"name": "tower_oracle", "criterion": 1, "layer": "iet"},
        ])
        with pytest.raises(ValidationError):
            load_catalogue(path)


class TestSuite(BaseTest):

    @pytest.fixture
    def product(self, instance_configuration) -> SkewProduct:
        return SkewProduct.from_config(instance_configuration.get_copy(**QUICK_OVERRIDES))

    @pytest.mark.slow
    def test_torus_passes(self, product, catalogue):
        report = VerificationSuite(product, catalogue, seed=0).run()
        assert [c.name for c in report.checks] == list(CHECKS)
        assert {c.name: c.status for c in report.checks} == {name: CheckStatus.PASS for name in CHECKS}
        assert report.first_failure is None
        assert report.exit_code == ExitCode.OK

    @pytest.mark.slow
    def test_rotation_skips_cocycle_checks(self, rotation, catalogue):
        product = SkewProduct.from_config(rotation.config.get_copy(**QUICK_OVERRIDES))
        report = VerificationSuite(product, catalogue, seed=0).run()
        for name in COCYCLE_CHECKS:
            assert report.status_of(name) == CheckStatus.SKIPPED
        for name in ("tower_oracle", "cocycle_identities", "bratteli_dictionary", "psi_zero"):
            assert report.status_of(name) == CheckStatus.PASS
        assert report.exit_code == ExitCode.OK

    def test_perturbed_phi(self, product, catalogue):
        report = VerificationSuite(product.with_phi(product.phi.perturbed(2)), catalogue, seed=0).run()
        assert report.status_of("tower_oracle") == CheckStatus.PASS
        assert report.status_of("cocycle_identities") == CheckStatus.FAIL
        for name in COCYCLE_CHECKS + ("psi_zero",):
            assert report.status_of(name) == CheckStatus.SKIPPED
        assert report.first_failure == {"name": "cocycle_identities", "criterion": 2, "layer": "skew"}
        assert report.exit_code == ExitCode.CHECK_FAILURE

    def test_swapped_floors(self, product, catalogue):
        corrupted = product.with_tower(product.instance.tower.with_swapped_floors(1, 1, 2))
        report = VerificationSuite(corrupted, catalogue, seed=0).run()
        assert report.status_of("tower_oracle") == CheckStatus.PASS
        assert report.status_of("cocycle_identities") == CheckStatus.PASS
        assert report.status_of("bratteli_dictionary") == CheckStatus.FAIL
        assert report.status_of("tail_cocycle") == CheckStatus.SKIPPED
        assert report.first_failure["name"] == "bratteli_dictionary"
        assert report.exit_code == ExitCode.CHECK_FAILURE

    def test_inconclusive_and_errors(self, product, catalogue):
        def capped(product, rng):
            raise AmplificationBoundExceeded(1, {"attempts": []})

        def broken(product, rng):
            raise ValidationError("corrupted input")

        def passing(product, rng):
            return CheckOutcome(CheckStatus.PASS, 0.0)

        checks = {name: passing for name in CHECKS}
        checks["aperiodicity"] = capped
        report = VerificationSuite(product, catalogue, seed=0, checks=checks).run()
        assert report.status_of("aperiodicity") == CheckStatus.INCONCLUSIVE
        assert report.exit_code == ExitCode.INCONCLUSIVE

        checks["level_counting"] = broken
        report = VerificationSuite(product, catalogue, seed=0, checks=checks).run()
        assert report.status_of("level_counting") == CheckStatus.FAIL
        assert report.status_of("maharam_formula") == CheckStatus.SKIPPED
        assert report.status_of("continuity") == CheckStatus.SKIPPED
        assert report.exit_code == ExitCode.CHECK_FAILURE

    def test_report_rendering(self, product, catalogue):
        report = VerificationSuite(product.with_phi(product.phi.perturbed(2)), catalogue, seed=3).run()
        data = json.loads(json.dumps(report.to_json(), default=str))
        assert tuple(data) == REPORT_FIELDS
        assert data["seed"] == 3
        assert data["exit_code"] == ExitCode.CHECK_FAILURE
        text = report.to_text()
        assert "first failure: cocycle_identities (skew)" in text
        assert "bratteli_dictionary" in text

    def test_deterministic(self, product, catalogue):
        checks = {name: CHECKS[name] for name in ("tower_oracle", "cocycle_identities", "bratteli_dictionary",
                                                 "tail_cocycle")}
        subset = [spec for spec in catalogue if spec.name in checks]
        first = VerificationSuite(product, subset, seed=5, checks=checks).run()
        second = VerificationSuite(product, subset, seed=5, checks=checks).run()
        assert [c.witness for c in first.checks] == [c.witness for c in second.checks]


class TestTailOrbit(BaseTest):

    def test_every_level_two_pair(self, torus):
        outcome = CHECKS["tail_orbit"](torus, seeded_rng(0, "tail_orbit"))
        assert outcome.status == CheckStatus.PASS
        assert outcome.witness == {"level": 2, "skew_floors": 99 * 3, "witnessed_pairs": 29 ** 2 + 49 ** 2 + 21 ** 2}

    def test_tall_towers_are_sampled(self, torus, monkeypatch):
        monkeypatch.setattr(checks, "PAIR_HEIGHT_LIMIT", 0)
        outcome = CHECKS["tail_orbit"](torus, seeded_rng(0, "tail_orbit"))
        assert outcome.status == CheckStatus.PASS
        assert outcome.witness["witnessed_pairs"] == 3 * torus.config.probe_samples


class TestDiscoveredInstances(BaseTest):

    @pytest.fixture
    def product(self, discovered) -> SkewProduct:
        return SkewProduct(discovered.instance, discovered.phi, discovered.config.get_copy(**QUICK_OVERRIDES))

    @pytest.mark.slow
    def test_certified(self, product):
        assert product.is_periodic_type()
        assert product.certificate.verdict is True

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["tower_oracle", "cocycle_identities", "level_counting", "maharam_formula"])
    def test_checks_pass(self, product, name):
        outcome = CHECKS[name](product, seeded_rng(product.config.seed, name))
        assert outcome.status == CheckStatus.PASS, outcome.witness


class TestPsiZero(BaseTest):

    def test_perron_residuals_are_reported(self, torus):
        product = SkewProduct(torus.instance, torus.phi, torus.config.get_copy(**QUICK_OVERRIDES))
        outcome = CHECKS["psi_zero"](product, seeded_rng(0, "psi_zero"))
        assert outcome.status == CheckStatus.PASS
        residuals = outcome.witness["perron"]
        assert residuals["residual"] <= residuals["scaled_tolerance"]
        assert residuals["absolute_tolerance"] == 1e-12
