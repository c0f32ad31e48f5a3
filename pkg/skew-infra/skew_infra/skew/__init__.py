from .cocycle import (
    SkewCocycle,
    birkhoff_sum_at_return,
    check_periodic_type,
    eigencocycle,
    eigencocycles,
    normalize_cocycle,
    renormalized_phi,
)

__all__ = [
    "SkewCocycle",
    "birkhoff_sum_at_return",
    "check_periodic_type",
    "eigencocycle",
    "eigencocycles",
    "normalize_cocycle",
    "renormalized_phi",
]
