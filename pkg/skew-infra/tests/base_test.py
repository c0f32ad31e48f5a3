import json
import logging
from pathlib import Path

import numpy as np
import pytest
from _pytest.fixtures import FixtureRequest

from skew_infra.bratteli import BratteliDiagram
from skew_infra.cocycles import FloorCocycle
from skew_infra.helper_classes import SkewProduct, load_instance
from skew_infra.utils import seeded_rng
from tests.config import InstanceConfig, global_variables
from tests.conftest import instance_path


class BaseTest:

    @pytest.fixture
    def instance_configuration(self) -> InstanceConfig:
        """
        Creates the instance configuration the test runs on.
        Override this fixture in your test class to run on another instance or with overrides
        :rtype: new instance configuration object
        """
        return load_instance(instance_path("torus_two_marked_points"), config_class=InstanceConfig)

    @pytest.fixture
    def product(self, instance_configuration: InstanceConfig) -> SkewProduct:
        logging.debug(f'--- SETUP --- skew-product {instance_configuration.name}\n')
        return SkewProduct.from_config(instance_configuration)

    @pytest.fixture
    def diagram(self, product: SkewProduct) -> BratteliDiagram:
        return product.diagram

    @pytest.fixture
    def f(self, product: SkewProduct) -> FloorCocycle:
        return product.f

    @pytest.fixture
    def rng(self, request: FixtureRequest) -> np.random.Generator:
        return seeded_rng(global_variables.seed, request.node.name)

    @pytest.fixture
    def write_instance(self, tmp_path: Path):
        def write(name: str = "instance", text: str = None, **data) -> Path:
            path = tmp_path.joinpath(f"{name}.json")
            path.write_text(text if text is not None else json.dumps(data, indent=2))
            return path

        yield write
