import logging
import time
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import yaml
from dataclasses import dataclass, field

from skew_infra.consts import CheckStatus, NO_SKEW_PRODUCT_MESSAGE
from skew_infra.errors import AmplificationBoundExceeded, NumericalError, SkewInfraError, ValidationError
from skew_infra.helper_classes.skew_product import SkewProduct
from skew_infra.utils import seeded_rng
from skew_infra.verification.checks import CHECKS, Check
from skew_infra.verification.report import CheckOutcome, CheckResult, VerificationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckSpec:
    name: str
    criterion: int
    layer: str
    depends_on: Sequence[str] = field(default_factory=tuple)
    requires_cocycle: bool = False
    description: str = ""


def load_catalogue(path: Union[str, Path]) -> List[CheckSpec]:
    with open(path) as f:
        data = yaml.load(f, Loader=yaml.FullLoader)
    specs = [
        CheckSpec(
            name=entry["name"],
            criterion=int(entry["criterion"]),
            layer=entry["layer"],
            depends_on=tuple(entry.get("depends_on", ())),
            requires_cocycle=bool(entry.get("requires_cocycle", False)),
            description=entry.get("description", ""),
        )
        for entry in data["checks"]
    ]
    known = set()
    for spec in specs:
        if spec.name not in CHECKS:
            raise ValidationError(f"Catalogue {path} names unknown check {spec.name!r}")
        missing = [name for name in spec.depends_on if name not in known]
        if missing:
            raise ValidationError(f"Check {spec.name!r} depends on {missing}, which must be listed before it")
        known.add(spec.name)
    return specs


class VerificationSuite:
    """Runs the catalogue in order; a check whose dependencies did not all pass is skipped"""

    def __init__(self, product: SkewProduct, catalogue: Sequence[CheckSpec], seed: int,
                 checks: Optional[Dict[str, Check]] = None):
        self.product = product
        self.catalogue = list(catalogue)
        self.seed = seed
        self.checks = dict(CHECKS if checks is None else checks)

    def _run_one(self, spec: CheckSpec) -> CheckOutcome:
        rng = seeded_rng(self.seed, spec.name)
        try:
            return self.checks[spec.name](self.product, rng)
        except AmplificationBoundExceeded as e:
            logger.warning("Check %s is inconclusive: %s", spec.name, e)
            return CheckOutcome(CheckStatus.INCONCLUSIVE, None, {"bound": e.bound, "diagnostics": e.diagnostics})
        except NumericalError as e:
            logger.warning("Check %s is inconclusive: %s", spec.name, e)
            return CheckOutcome(CheckStatus.INCONCLUSIVE, None, {"error": str(e)})
        except SkewInfraError as e:
            logger.exception("Check %s failed with an error", spec.name)
            return CheckOutcome(CheckStatus.FAIL, None, {"error": str(e)})

    def run(self) -> VerificationReport:
        report = VerificationReport(instance=self.product.name, seed=self.seed)
        statuses: Dict[str, str] = {}
        for spec in self.catalogue:
            blocked = [name for name in spec.depends_on if statuses.get(name) != CheckStatus.PASS]
            started = time.perf_counter()
            if blocked:
                outcome = CheckOutcome(CheckStatus.SKIPPED, None, {"blocked_by": blocked})
            elif spec.requires_cocycle and self.product.phi is None:
                outcome = CheckOutcome(CheckStatus.SKIPPED, None, {"reason": NO_SKEW_PRODUCT_MESSAGE})
            else:
                logger.info("Running check %d: %s", spec.criterion, spec.name)
                outcome = self._run_one(spec)
            runtime = time.perf_counter() - started
            statuses[spec.name] = outcome.status
            report.checks.append(
                CheckResult(spec.name, spec.criterion, spec.layer, outcome.status, outcome.residual, outcome.witness, runtime)
            )
            logger.info("Check %s: %s (%.2fs)", spec.name, outcome.status, runtime)
        return report
