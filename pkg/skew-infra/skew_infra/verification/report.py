from typing import Any, Dict, List, Optional

from dataclasses import dataclass, field
from tabulate import tabulate

from skew_infra import consts
from skew_infra.consts import CheckStatus, ExitCode


@dataclass(frozen=True)
class CheckOutcome:
    status: str
    residual: Optional[float] = None
    witness: Any = None


@dataclass(frozen=True)
class CheckResult:
    name: str
    criterion: int
    layer: str
    status: str
    residual: Optional[float] = None
    witness: Any = None
    runtime: float = 0.0

    def to_json(self) -> dict:
        return {key: getattr(self, key) for key in consts.CHECK_FIELDS}


@dataclass
class VerificationReport:
    instance: str
    seed: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def first_failure(self) -> Optional[Dict[str, Any]]:
        failed = next((c for c in self.checks if c.status == CheckStatus.FAIL), None)
        if failed is None:
            return None
        return {"name": failed.name, "criterion": failed.criterion, "layer": failed.layer}

    @property
    def exit_code(self) -> int:
        statuses = {c.status for c in self.checks}
        if CheckStatus.FAIL in statuses:
            return ExitCode.CHECK_FAILURE
        if CheckStatus.INCONCLUSIVE in statuses:
            return ExitCode.INCONCLUSIVE
        return ExitCode.OK

    def status_of(self, name: str) -> str:
        return next(c.status for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "seed": self.seed,
            "normalizations": dict(consts.NORMALIZATIONS),
            "checks": [c.to_json() for c in self.checks],
            "first_failure": self.first_failure,
            "exit_code": self.exit_code,
        }

    def to_text(self) -> str:
        rows = [
            [c.criterion, c.name, c.layer, c.status, "" if c.residual is None else f"{c.residual:.3e}", f"{c.runtime:.2f}s"]
            for c in self.checks
        ]
        table = tabulate(rows, headers=["#", "check", "layer", "status", "residual", "runtime"])
        failure = self.first_failure
        footer = f"first failure: {failure['name']} ({failure['layer']})" if failure else "no failures"
        return f"{self.instance} (seed {self.seed})\n{table}\n{footer}"
