import csv
import io
import json

import pytest

import skew_products
from skew_infra.consts import ExitCode
from tests.base_test import BaseTest
from tests.conftest import get_product

TORUS = "torus_two_marked_points"


def run(capsys, *argv):
    code = skew_products.main(list(argv))
    return code, capsys.readouterr().out


class TestInspect(BaseTest):

    def test_json(self, capsys):
        code, out = run(capsys, "inspect", "--instance", TORUS)
        data = json.loads(out)
        assert code == ExitCode.OK
        assert data["q"] == [5, 8, 4]
        assert data["m"] == 1
        assert data["phi"] == [[0], [1], [-1]]
        assert data["edges"] == 17

    def test_text(self, capsys):
        code, out = run(capsys, "inspect", "--instance", TORUS, "--format", "text")
        assert code == ExitCode.OK
        assert "A =" in out
        assert "loop tbtbtb x 1" in out

    def test_eigencocycles(self, capsys):
        code, out = run(capsys, "eigencocycles", "--instance", "rotation_golden")
        assert code == ExitCode.OK
        assert json.loads(out) == {"m": 0, "basis": []}

    def test_packaged_path(self, capsys):
        code, out = run(capsys, "eigencocycles", "--instance", str(skew_products.resolve_instance(TORUS)))
        assert code == ExitCode.OK
        assert json.loads(out)["basis"] == [[0, 1, -1]]


class TestCertify(BaseTest):

    def test_certify(self, capsys):
        code, out = run(capsys, "certify", "--instance", TORUS)
        data = json.loads(out)
        assert code == ExitCode.OK
        assert data["exponent"] == 2
        assert data["M"] == 19
        assert data["verdict"] is True

    def test_cap_is_inconclusive(self):
        (data, text), code = skew_products.cmd_certify(get_product(TORUS, amplification_cap=1), None)
        assert code == ExitCode.INCONCLUSIVE
        assert data["status"] == "inconclusive"
        assert data["bound"] == 1
        assert text.startswith("inconclusive")


class TestMaharam(BaseTest):

    ARGS = ("maharam", "--instance", TORUS, "--psi", "0", "--level", "2", "--fiber-radius", "1")

    def test_csv(self, capsys):
        code, out = run(capsys, *self.ARGS)
        assert code == ExitCode.OK
        rows = list(csv.DictReader(io.StringIO(out)))
        assert list(rows[0]) == ["psi_1", "level", "path", "fiber", "measure"]
        base = [float(r["measure"]) for r in rows if r["level"] == "0" and r["fiber"] == "(0)"]
        assert len(base) == 3
        assert sum(base) == pytest.approx(1.0)
        assert len(rows) == (3 + 99) * 3

    def test_deterministic(self, capsys):
        assert run(capsys, *self.ARGS) == run(capsys, *self.ARGS)

    def test_several_parameters(self, capsys):
        code, out = run(capsys, "maharam", "--instance", TORUS, "--psi", "0", "--psi", "0.5", "--level", "1",
                        "--fiber-radius", "0", "--format", "json")
        data = json.loads(out)
        assert code == ExitCode.OK
        assert {row["psi_1"] for row in data} == {0.0, 0.5}

    def test_negative_parameter(self, capsys):
        code, out = run(capsys, "maharam", "--instance", TORUS, "--psi", "-0.5", "--level", "1", "--fiber-radius", "0",
                        "--format", "json")
        assert code == ExitCode.OK
        assert {row["psi_1"] for row in json.loads(out)} == {-0.5}

    def test_rotation_has_no_measures(self, capsys):
        code, out = run(capsys, "maharam", "--instance", "rotation_golden")
        assert code == ExitCode.VALIDATION_ERROR
        assert out == ""


class TestInvalidInput(BaseTest):

    def test_malformed_json(self, capsys, write_instance):
        path = write_instance(text='{"top": [1, 2],\n "bottom": [2, 1,\n')
        assert run(capsys, "inspect", "--instance", str(path))[0] == ExitCode.VALIDATION_ERROR

    def test_loop_never_positive(self, capsys, write_instance):
        path = write_instance(top=[1, 2], bottom=[2, 1], loop="t")
        assert run(capsys, "inspect", "--instance", str(path))[0] == ExitCode.VALIDATION_ERROR

    def test_missing_instance(self, capsys):
        assert run(capsys, "inspect", "--instance", "no_such_instance")[0] == ExitCode.VALIDATION_ERROR

    def test_identity_loop(self, capsys, write_instance):
        path = write_instance(top=[1, 2, 3], bottom=[3, 2, 1], loop="")
        assert run(capsys, "inspect", "--instance", str(path)) == (ExitCode.VALIDATION_ERROR, "")

    def test_usage_error_is_invalid_input(self, capsys):
        assert run(capsys, "no_such_command", "--instance", TORUS)[0] == ExitCode.VALIDATION_ERROR
        assert run(capsys, "inspect")[0] == ExitCode.VALIDATION_ERROR

    def test_signed_values_stay_attached(self):
        argv = ["continuity", "--instance", TORUS, "--grid", "-1:1:4", "--psi", "-0.5,0.25", "--level", "2",
                "--grid=0:1:2"]
        assert skew_products.attach_signed_values(argv) == [
            "continuity", "--instance", TORUS, "--grid=-1:1:4", "--psi=-0.5,0.25", "--level", "2", "--grid=0:1:2"
        ]
        args = skew_products.handle_arguments(argv)
        assert args.grid == ["-1:1:4", "0:1:2"]
        assert args.psi == ["-0.5,0.25"]

    def test_bad_grid(self, capsys):
        code, _ = run(capsys, "continuity", "--instance", TORUS, "--grid", "1:0:2")
        assert code == ExitCode.VALIDATION_ERROR


class TestVerify(BaseTest):

    def test_perturbed_phi(self, capsys, tmp_path):
        out = tmp_path.joinpath("report.json")
        code, stdout = run(capsys, "verify", "--instance", TORUS, "--perturb-phi", "2", "--out", str(out))
        report = json.loads(out.read_text())
        assert code == ExitCode.CHECK_FAILURE
        assert stdout == ""
        assert report["exit_code"] == ExitCode.CHECK_FAILURE
        assert report["first_failure"]["name"] == "cocycle_identities"


class TestContinuity(BaseTest):

    @pytest.mark.slow
    def test_csv(self, capsys):
        code, out = run(capsys, "continuity", "--instance", TORUS, "--grid", "-0.5:0.5:2")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == ExitCode.OK
        assert list(rows[0]) == ["grid_step", "cylinder_id", "psi_1", "measure", "adjacent_delta"]
        assert float(rows[0]["grid_step"]) == pytest.approx(0.5)
