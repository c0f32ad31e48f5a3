from .diagram import BratteliDiagram, Edge, build_diagram
from .paths import (
    FinitePath,
    FloorCoordinate,
    adic_predecessor,
    adic_successor,
    base_projection,
    enumerate_paths,
    first_non_maximal,
    first_non_minimal,
    floor_to_path,
    is_maximal,
    is_minimal,
    left_shift,
    lexicographic_key,
    maximal_paths,
    minimal_paths,
    path_to_floor,
    right_shift,
)

__all__ = [
    "BratteliDiagram",
    "Edge",
    "build_diagram",
    "FinitePath",
    "FloorCoordinate",
    "adic_predecessor",
    "adic_successor",
    "base_projection",
    "enumerate_paths",
    "first_non_maximal",
    "first_non_minimal",
    "floor_to_path",
    "is_maximal",
    "is_minimal",
    "left_shift",
    "lexicographic_key",
    "maximal_paths",
    "minimal_paths",
    "path_to_floor",
    "right_shift",
]
