import threading

import pytest

from logger import LargeNumberFormatter, suppressAndLog
from skew_infra.errors import DimensionMismatchError, InstanceValidationError, NotPositiveError
from skew_infra.helper_classes import SkewProduct, load_instance, read_instance_file
from skew_infra.maharam import MaharamParameter
from skew_infra.skew import SkewCocycle
from skew_infra.tools import run_concurrently
from skew_infra.utils import get_env, parse_grid, parse_vector, seeded_rng, str_to_bool
from skew_infra.utils.global_variables import GlobalVariables
from tests.base_test import BaseTest
from tests.config import InstanceConfig, global_variables

ROTATION = dict(top=[1, 2], bottom=[2, 1], loop="tb")


class TestInstanceFile(BaseTest):

    def test_unknown_key_names_its_line(self, write_instance):
        path = write_instance(text='{\n  "top": [1, 2],\n  "colour": 1,\n  "bottom": [2, 1],\n  "loop": "tb"\n}')
        with pytest.raises(InstanceValidationError, match=r":3: Unknown keys \['colour'\]"):
            read_instance_file(path)

    def test_malformed_json_line(self, write_instance):
        path = write_instance(text='{\n  "top": [1, 2],\n  "bottom": [2, 1]\n  "loop": "tb"\n}')
        with pytest.raises(InstanceValidationError, match=":4:"):
            read_instance_file(path)

    @pytest.mark.parametrize("data", [
        dict(bottom=[2, 1], loop="tb"),
        dict(top=[1, 2], bottom=[2, 1]),
        dict(top=[1, "2"], bottom=[2, 1], loop="tb"),
        dict(top=[1, 2], bottom=[2, 1], loop="tx"),
        dict(top=[1, 2], bottom=[2, 1], search={"length": 4}),
        dict(ROTATION, phi=[[0], [1], [2]]),
        dict(ROTATION, phi=[[0], [1, 2]]),
        dict(ROTATION, psi=[["a"]]),
        dict(ROTATION, grid=[1]),
    ])
    def test_invalid(self, write_instance, data):
        with pytest.raises(InstanceValidationError):
            read_instance_file(write_instance(**data))

    def test_not_an_object(self, write_instance):
        with pytest.raises(InstanceValidationError):
            read_instance_file(write_instance(text="[1, 2]"))

    def test_loop_as_list_and_single_grid(self, write_instance):
        data = read_instance_file(write_instance(top=[1, 2], bottom=[2, 1], loop=["t", "b"], grid="-1:1:2"))
        assert data.loop == "tb"
        assert data.grid == ["-1:1:2"]

    def test_search_block(self, write_instance):
        config = load_instance(write_instance(top=[1, 2], bottom=[2, 1], search={"max_length": 4}),
                               config_class=InstanceConfig)
        assert config.loop is None
        assert config.search_length == 4


class TestLoadInstance(BaseTest):

    def test_defaults_and_overrides(self, write_instance):
        path = write_instance(name="golden", seed=9, **ROTATION)
        config = load_instance(path, config_class=InstanceConfig, level=3, seed=None)
        assert config.name == "golden"
        assert config.level == 3
        assert config.seed == 9
        assert config.samples == global_variables.samples
        assert config.psi is None

    def test_name_from_file(self, write_instance):
        config = load_instance(write_instance("plain", **ROTATION), config_class=InstanceConfig)
        assert config.name == "plain"
        assert config.grid == global_variables.grid

    def test_copy(self, instance_configuration):
        copy = instance_configuration.get_copy(samples=7)
        assert copy.samples == 7
        assert instance_configuration.samples == global_variables.samples
        assert copy.phi == instance_configuration.phi


class TestSkewProduct(BaseTest):

    def test_normalizes_non_generating_phi(self, instance_configuration):
        product = SkewProduct.from_config(instance_configuration.get_copy(phi=[[0], [2], [-2]]))
        assert product.phi == SkewCocycle.from_rows([[0], [1], [-1]])

    def test_phi_length(self, instance_configuration):
        with pytest.raises(DimensionMismatchError):
            SkewProduct.from_config(instance_configuration.get_copy(phi=[[0], [1]]))

    def test_eigencocycle_default(self, instance_configuration):
        product = SkewProduct.from_config(instance_configuration.get_copy(phi=None))
        assert product.phi == SkewCocycle.from_rows([[0], [1], [-1]])

    def test_grids(self, product, instance_configuration):
        assert product.grids() == [(-1.0, 1.0, 4)]
        mismatched = SkewProduct.from_config(instance_configuration.get_copy(grid=["-1:1:4", "0:1:2"]))
        with pytest.raises(DimensionMismatchError):
            mismatched.grids()

    def test_parameters(self, product, rotation):
        assert product.parameters() == [MaharamParameter((0.0,)), MaharamParameter((0.5,))]
        assert rotation.parameters() == [MaharamParameter(())]

    def test_empty_loop_is_not_searched(self, instance_configuration):
        with pytest.raises(NotPositiveError, match="every label wins"):
            SkewProduct.from_config(instance_configuration.get_copy(loop="", search_length=2))

    def test_to_json(self, product, rotation):
        assert product.to_json()["m"] == 1
        assert rotation.to_json()["phi"] is None


class TestGlobalVariables(BaseTest):

    def test_quick_trigger(self):
        quick = GlobalVariables(quick=True)
        assert quick.samples == 200
        assert quick.exhaustive_level == 2
        assert quick.birkhoff_steps == 2 * 10 ** 5
        assert quick.triggered == ("quick",)
        assert GlobalVariables(quick=False).triggered == ()

    def test_invalid_key(self):
        with pytest.raises(AttributeError):
            GlobalVariables()._set("no_such_key", 1)

    def test_env(self, monkeypatch):
        monkeypatch.setenv("SKEW_TEST_VALUE", ' "" ')
        assert get_env("SKEW_TEST_VALUE", "fallback") == "fallback"
        monkeypatch.setenv("SKEW_TEST_VALUE", " 12 ")
        assert get_env("SKEW_TEST_VALUE") == "12"

    @pytest.mark.parametrize("value, expected", [("yes", True), ("0", False), (True, True), ("Off", False)])
    def test_str_to_bool(self, value, expected):
        assert str_to_bool(value) is expected

    def test_str_to_bool_invalid(self):
        with pytest.raises(ValueError):
            str_to_bool("maybe")


class TestUtils(BaseTest):

    def test_parse_grid(self):
        assert parse_grid("-1:1:4") == (-1.0, 1.0, 4)
        for spec in ("1:0:2", "0:1:0", "0:1", "a:b:c"):
            with pytest.raises(ValueError):
                parse_grid(spec)

    def test_parse_vector(self):
        assert parse_vector("0.5,-1") == (0.5, -1.0)
        with pytest.raises(ValueError):
            parse_vector("0.5,x")

    def test_seeded_rng(self):
        first = seeded_rng(3, "sample").integers(0, 10 ** 9, size=5).tolist()
        assert seeded_rng(3, "sample").integers(0, 10 ** 9, size=5).tolist() == first
        assert seeded_rng(3, "other").integers(0, 10 ** 9, size=5).tolist() != first
        assert seeded_rng(4, "sample").integers(0, 10 ** 9, size=5).tolist() != first


class TestConcurrency(BaseTest):

    def test_sequence_keys(self):
        assert run_concurrently([(pow, 2, 3), (pow, 3, 2)]) == {0: 8, 1: 9}
        assert run_concurrently(()) == {}

    def test_mapping_and_handler(self):
        done = []
        lock = threading.Lock()

        def handler(key):
            with lock:
                done.append(key)

        result = run_concurrently({k: (lambda x: x * x, k) for k in range(10)}, done_handler=handler, max_workers=3)
        assert result == {k: k * k for k in range(10)}
        assert sorted(done) == list(range(10))

    def test_failure_is_raised(self):
        def fail():
            raise RuntimeError("job failed")

        with pytest.raises(RuntimeError, match="job failed"):
            run_concurrently([(fail,)])


class TestLogger(BaseTest):

    def test_long_numbers_are_shortened(self):
        message = LargeNumberFormatter._filter("height " + "1234567890" * 4)
        assert "<40 digits>" in message
        assert message.startswith("height 123456")
        assert LargeNumberFormatter._filter("q = [5, 8, 4]") == "q = [5, 8, 4]"

    def test_suppress_and_log(self):
        with suppressAndLog(BrokenPipeError):
            raise BrokenPipeError()
        with pytest.raises(KeyError):
            with suppressAndLog(BrokenPipeError):
                raise KeyError("other")
