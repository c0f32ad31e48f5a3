from typing import Tuple

from frozendict import frozendict

from logger import log
from skew_infra.utils.global_variables.env_variables_utils import _EnvVariablesUtils

# (variable, value) -> variables overridden when the variable holds that value
_triggers = frozendict(
    {
        ("quick", True): frozendict(
            samples=200,
            psi_samples=4,
            probe_samples=30,
            exhaustive_level=2,
            counting_level=3,
            birkhoff_steps=2 * 10 ** 5,
        ),
    }
)


class GlobalVariables(_EnvVariablesUtils):

    def __post_init__(self):
        super().__post_init__()
        fired = tuple(key for key, expected in _triggers if getattr(self, key) == expected)
        for key in fired:
            overrides = _triggers[(key, getattr(self, key))]
            for name, value in overrides.items():
                self._set(name, value)
            log.info("%s is triggered, overriding %s", key.upper(), dict(overrides))
        self._set_triggered(fired)

    def _set_triggered(self, fired: Tuple[str, ...]):
        object.__setattr__(self, "_triggered", fired)

    @property
    def triggered(self) -> Tuple[str, ...]:
        return getattr(self, "_triggered", ())
