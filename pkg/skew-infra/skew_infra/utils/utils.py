import json
import os
import zlib
from typing import Any, Tuple

import numpy as np
from munch import munchify


def get_env(env, default=None):
    res = os.environ.get(env, "").strip()
    if not res or res == '""':
        res = default
    return res


def str_to_bool(value) -> bool:
    if isinstance(value, bool):
        return value
    value = str(value).strip().lower()
    if value in ("y", "yes", "t", "true", "on", "1"):
        return True
    if value in ("n", "no", "f", "false", "off", "0"):
        return False
    raise ValueError(f"Invalid truth value {value!r}")


def seeded_rng(seed: int, *salt) -> np.random.Generator:
    """Independent deterministic stream per (seed, salt)"""
    return np.random.default_rng([int(seed)] + [zlib.crc32(str(s).encode()) for s in salt])


def load_json_munch(text: str) -> Any:
    return munchify(json.loads(text))


def parse_grid(spec: str) -> Tuple[float, float, int]:
    """Parse "min:max:steps" into a closed grid description"""
    try:
        low, high, steps = spec.split(":")
        low, high, steps = float(low), float(high), int(steps)
    except ValueError:
        raise ValueError(f"Invalid grid {spec!r}, expected min:max:steps") from None
    if steps < 1 or not low < high:
        raise ValueError(f"Invalid grid {spec!r}, expected min < max and steps >= 1")
    return low, high, steps


def parse_vector(spec: str) -> Tuple[float, ...]:
    try:
        return tuple(float(v) for v in spec.split(","))
    except ValueError:
        raise ValueError(f"Invalid vector {spec!r}, expected comma separated numbers") from None
