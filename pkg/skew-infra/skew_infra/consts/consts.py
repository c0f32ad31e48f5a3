from enum import Enum

from frozendict import frozendict


class Move(Enum):
    TOP = "t"
    BOTTOM = "b"


class CheckStatus:
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    SKIPPED = "skipped"


class ExitCode:
    OK = 0
    VALIDATION_ERROR = 1
    CHECK_FAILURE = 2
    INCONCLUSIVE = 3


class Commands:
    INSPECT = "inspect"
    EIGENCOCYCLES = "eigencocycles"
    CERTIFY = "certify"
    MAHARAM = "maharam"
    CONTINUITY = "continuity"
    VERIFY = "verify"

    ALL = (INSPECT, EIGENCOCYCLES, CERTIFY, MAHARAM, CONTINUITY, VERIFY)


class OutputFormat:
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


LENGTH_PRECISION_DIGITS = 40
AMPLIFICATION_FACTOR = 2  # loop powers are bounded by AMPLIFICATION_FACTOR * d ** 2
PERRON_MAX_ITERATIONS = 10 ** 5
LENGTHS_MAX_ITERATIONS = 10 ** 4
SIMULATION_HORIZON = 10 ** 6
COMMON_PREFIX_SCAN_LIMIT = 10 ** 6

NORMALIZATIONS = frozendict(
    {
        "perron_vector": "sum_i v_i = 1",
        "maharam_measure": "mu_psi(K x {0}) = 1",
    }
)

MEASURE_TABLE_COLUMNS = ("level", "path", "fiber", "measure")
CONTINUITY_COLUMNS = ("grid_step", "cylinder_id", "measure", "adjacent_delta")
CERTIFICATE_FIELDS = ("exponent", "M", "prefix_letters", "generators", "invariant_factors", "verdict")
REPORT_FIELDS = ("instance", "seed", "normalizations", "checks", "first_failure", "exit_code")
CHECK_FIELDS = ("name", "criterion", "layer", "status", "residual", "witness", "runtime")

NO_SKEW_PRODUCT_MESSAGE = "m = 0: no periodic-type skew-product on this loop"
