import json
import logging
from pathlib import Path
from typing import Any, Optional, Union

from munch import Munch

from skew_infra.errors import InstanceValidationError
from skew_infra.helper_classes.config import BaseInstanceConfig
from skew_infra.utils import load_json_munch

logger = logging.getLogger(__name__)

INSTANCE_KEYS = frozenset({"name", "top", "bottom", "loop", "search", "phi", "psi", "grid", "level", "seed"})


def _line_of(text: str, key: str) -> Optional[int]:
    needle = f'"{key}"'
    return next((n for n, line in enumerate(text.splitlines(), start=1) if needle in line), None)


def read_instance_file(path: Union[str, Path]) -> Munch:
    """Parse and shape-check an instance file; every error names the file and, when known, the line"""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InstanceValidationError(f"Cannot read instance file: {e.strerror}", source=str(path)) from e
    try:
        data = load_json_munch(text)
    except json.JSONDecodeError as e:
        raise InstanceValidationError(e.msg, source=str(path), line=e.lineno) from e

    if not isinstance(data, dict):
        raise InstanceValidationError("An instance file must hold a JSON object", source=str(path), line=1)

    def fail(message: str, key: Optional[str] = None):
        raise InstanceValidationError(message, source=str(path), line=_line_of(text, key) if key else None)

    unknown = sorted(set(data) - INSTANCE_KEYS)
    if unknown:
        fail(f"Unknown keys {unknown}", unknown[0])
    for key in ("top", "bottom"):
        if key not in data:
            fail(f"Missing required key {key!r}")
        if not isinstance(data[key], list) or not all(isinstance(x, int) for x in data[key]):
            fail(f"{key!r} must be a list of integer labels", key)
    if "loop" not in data and "search" not in data:
        fail("Give either a 'loop' or a 'search' block")
    if "loop" in data:
        if isinstance(data.loop, list):
            data.loop = "".join(str(x) for x in data.loop)
        if not isinstance(data.loop, str) or set(data.loop) - {"t", "b"}:
            fail("'loop' must be a string or list of Rauzy moves 't'/'b'", "loop")
    if "search" in data and not isinstance(data.search.get("max_length") if isinstance(data.search, dict) else None, int):
        fail("'search' must be an object with an integer 'max_length'", "search")
    if "phi" in data:
        rows = data.phi
        if (
            not isinstance(rows, list)
            or len(rows) != len(data.top)
            or not all(isinstance(row, list) and all(isinstance(x, int) for x in row) for row in rows)
            or len({len(row) for row in rows}) > 1
        ):
            fail(f"'phi' must hold {len(data.top)} integer rows of equal length", "phi")
    if "psi" in data:
        if not isinstance(data.psi, list) or not all(
            isinstance(row, list) and all(isinstance(x, (int, float)) for x in row) for row in data.psi
        ):
            fail("'psi' must be a list of real vectors", "psi")
    if "grid" in data:
        if isinstance(data.grid, str):
            data.grid = [data.grid]
        if not all(isinstance(g, str) for g in data.grid):
            fail("'grid' must be 'min:max:steps' or a list of them", "grid")
    data.source = str(path)
    return data


def load_instance(path: Union[str, Path], config_class=BaseInstanceConfig, **overrides: Any) -> BaseInstanceConfig:
    """Instance file merged into a config; explicit overrides (None meaning unset) win over the file"""
    data = read_instance_file(path)
    values = {
        "instance_path": Path(path),
        "name": data.get("name", Path(path).stem),
        "top": list(data.top),
        "bottom": list(data.bottom),
        "loop": data.get("loop"),
        "search_length": data.search.max_length if "search" in data else None,
        "phi": [list(row) for row in data.phi] if "phi" in data else None,
        "psi": [tuple(float(x) for x in row) for row in data.psi] if "psi" in data else None,
        "grid": list(data.grid) if "grid" in data else None,
        "level": data.get("level"),
        "seed": data.get("seed"),
    }
    values.update({k: v for k, v in overrides.items() if v is not None})
    logger.debug("Loaded instance %s from %s", values["name"], path)
    return config_class(**values)
