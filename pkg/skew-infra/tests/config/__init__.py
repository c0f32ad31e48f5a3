from .global_configs import QUICK_OVERRIDES, InstanceConfig, global_variables

__all__ = [
    "InstanceConfig",
    "QUICK_OVERRIDES",
    "global_variables"
]
