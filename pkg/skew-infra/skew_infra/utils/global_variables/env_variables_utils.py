from abc import ABC
from typing import Any

from dataclasses import dataclass

from skew_infra.consts import env_defaults
from skew_infra.utils import get_env, parse_grid, str_to_bool


@dataclass(frozen=True)
class _EnvVariablesUtils(ABC):
    level: int = int(get_env("SKEW_LEVEL", env_defaults.DEFAULT_LEVEL))
    seed: int = int(get_env("SKEW_SEED", env_defaults.DEFAULT_SEED))
    samples: int = int(get_env("SKEW_SAMPLES", env_defaults.DEFAULT_SAMPLES))
    psi_samples: int = int(get_env("SKEW_PSI_SAMPLES", env_defaults.DEFAULT_PSI_SAMPLES))
    probe_samples: int = int(get_env("SKEW_PROBE_SAMPLES", env_defaults.DEFAULT_PROBE_SAMPLES))
    oracle_level: int = int(get_env("SKEW_ORACLE_LEVEL", env_defaults.DEFAULT_ORACLE_LEVEL))
    exhaustive_level: int = int(get_env("SKEW_EXHAUSTIVE_LEVEL", env_defaults.DEFAULT_EXHAUSTIVE_LEVEL))
    counting_level: int = int(get_env("SKEW_COUNTING_LEVEL", env_defaults.DEFAULT_COUNTING_LEVEL))
    continuity_level: int = int(get_env("SKEW_CONTINUITY_LEVEL", env_defaults.DEFAULT_CONTINUITY_LEVEL))
    tail_orbit_level: int = int(get_env("SKEW_TAIL_ORBIT_LEVEL", env_defaults.DEFAULT_TAIL_ORBIT_LEVEL))
    amplification_cap: int = int(get_env("SKEW_AMPLIFICATION_CAP", env_defaults.DEFAULT_AMPLIFICATION_CAP))
    grid: str = get_env("SKEW_GRID", env_defaults.DEFAULT_GRID)
    refinements: int = int(get_env("SKEW_REFINEMENTS", env_defaults.DEFAULT_REFINEMENTS))
    cylinder_family_size: int = int(get_env("SKEW_CYLINDERS", env_defaults.DEFAULT_CYLINDER_FAMILY_SIZE))
    max_workers: int = int(get_env("SKEW_MAX_WORKERS", env_defaults.DEFAULT_MAX_WORKERS))
    birkhoff_steps: int = int(get_env("SKEW_BIRKHOFF_STEPS", env_defaults.DEFAULT_BIRKHOFF_STEPS))
    search_length: int = int(get_env("SKEW_SEARCH_LENGTH", env_defaults.DEFAULT_SEARCH_LENGTH))
    instances_folder: str = get_env("SKEW_INSTANCES_FOLDER", str(env_defaults.DEFAULT_INSTANCES_FOLDER))
    verification_catalogue: str = get_env(
        "SKEW_VERIFICATION_CATALOGUE", str(env_defaults.DEFAULT_VERIFICATION_CATALOGUE)
    )
    quick: bool = str_to_bool(get_env("SKEW_QUICK", str(env_defaults.DEFAULT_QUICK)))

    def __post_init__(self):
        parse_grid(self.grid)
        for key in ("level", "samples", "oracle_level", "exhaustive_level", "counting_level", "amplification_cap",
                    "max_workers", "search_length"):
            if getattr(self, key) < 1:
                raise ValueError(f"{key} must be positive, got {getattr(self, key)}")

    def _set(self, key: str, value: Any):
        if not hasattr(self, key):
            raise AttributeError(f"Invalid key {key}")

        super().__setattr__(key, value)
