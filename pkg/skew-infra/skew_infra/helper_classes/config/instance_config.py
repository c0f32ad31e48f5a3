from abc import ABC
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple

from dataclasses import dataclass

from skew_infra.utils.global_variables import GlobalVariables
from .base_config import _BaseConfig

global_variables = GlobalVariables()


@dataclass
class BaseInstanceConfig(_BaseConfig, ABC):
    """Everything needed to build one skew-product and run the pipelines on it"""

    instance_path: Optional[Path] = None
    name: str = None
    top: Sequence[int] = None
    bottom: Sequence[int] = None
    loop: str = None   # Rauzy moves, e.g. "tbtbtb"; searched for when empty
    search_length: int = None
    phi: Optional[List[List[int]]] = None   # one row per label; eigencocycle of A when empty
    psi: Optional[List[Tuple[float, ...]]] = None
    grid: Optional[List[str]] = None   # "min:max:steps" per psi coordinate

    level: int = None
    seed: int = None
    samples: int = None
    psi_samples: int = None
    probe_samples: int = None
    oracle_level: int = None
    exhaustive_level: int = None
    counting_level: int = None
    continuity_level: int = None
    tail_orbit_level: int = None
    amplification_cap: int = None
    refinements: int = None
    cylinder_family_size: int = None
    max_workers: int = None
    birkhoff_steps: int = None

    @staticmethod
    def get_default(key, default=None) -> Any:
        return getattr(global_variables, key, default)
