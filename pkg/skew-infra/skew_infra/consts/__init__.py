from .consts import *  # noqa: F401,F403
from . import env_defaults, tolerances

__all__ = ["env_defaults", "tolerances", "Move", "CheckStatus", "ExitCode", "Commands", "OutputFormat"]
