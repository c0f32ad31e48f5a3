from .combinatorics import IetCombinatorics, WordUpdate, as_move, rauzy_rows
from .discovery import closed_loops, discover_loop
from .instance import RauzyInstance
from .lengths import HIGH_PRECISION, LengthData, pf_lengths
from .rauzy import RauzyLoop, TowerSystem, amplify_to_positive, compose_loop, iterate_substitution
from .simulation import IntervalExchange, birkhoff_frequencies, simulate_return_times

__all__ = [
    "IetCombinatorics",
    "WordUpdate",
    "as_move",
    "rauzy_rows",
    "closed_loops",
    "discover_loop",
    "RauzyInstance",
    "HIGH_PRECISION",
    "LengthData",
    "pf_lengths",
    "RauzyLoop",
    "TowerSystem",
    "amplify_to_positive",
    "compose_loop",
    "iterate_substitution",
    "IntervalExchange",
    "birkhoff_frequencies",
    "simulate_return_times",
]
