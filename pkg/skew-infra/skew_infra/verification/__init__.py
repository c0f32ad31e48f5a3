from .checks import CHECKS
from .report import CheckOutcome, CheckResult, VerificationReport
from .suite import CheckSpec, VerificationSuite, load_catalogue

__all__ = [
    "CHECKS",
    "CheckOutcome",
    "CheckResult",
    "VerificationReport",
    "CheckSpec",
    "VerificationSuite",
    "load_catalogue",
]
