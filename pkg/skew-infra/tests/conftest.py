import logging
from pathlib import Path

import pytest

from skew_infra.helper_classes import SkewProduct, load_instance
from tests.config import InstanceConfig, global_variables

PACKAGED_INSTANCES = ("torus_two_marked_points", "rotation_golden", "genus_two", "three_marked_points")
DISCOVERED_INSTANCES = ("genus_two", "three_marked_points")


def instance_path(name: str) -> Path:
    return Path(global_variables.instances_folder).joinpath(f"{name}.json")


def get_product(name: str, **overrides) -> SkewProduct:
    config = load_instance(instance_path(name), config_class=InstanceConfig, **overrides)
    return SkewProduct.from_config(config)


@pytest.fixture(scope="session")
def torus() -> SkewProduct:
    logging.info('--- SETUP --- torus_two_marked_points\n')
    yield get_product("torus_two_marked_points")


@pytest.fixture(scope="session")
def rotation() -> SkewProduct:
    logging.info('--- SETUP --- rotation_golden\n')
    yield get_product("rotation_golden")


@pytest.fixture(scope="session", params=DISCOVERED_INSTANCES)
def discovered(request) -> SkewProduct:
    logging.info(f'--- SETUP --- {request.param} (loop search)\n')
    yield get_product(request.param)


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    result = outcome.get_result()

    setattr(item, "result_" + result.when, result)
