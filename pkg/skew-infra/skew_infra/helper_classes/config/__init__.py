from .base_config import _BaseConfig
from .instance_config import BaseInstanceConfig

__all__ = ["_BaseConfig", "BaseInstanceConfig"]
