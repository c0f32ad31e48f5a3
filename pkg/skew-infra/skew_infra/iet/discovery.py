import logging
from functools import lru_cache
from typing import Iterator, Tuple

from skew_infra.algebra import IntegerMatrix, integer_kernel, smallest_positive_power
from skew_infra.consts import Move
from skew_infra.errors import LoopError
from skew_infra.iet.combinatorics import IetCombinatorics, rauzy_rows
from skew_infra.iet.rauzy import RauzyLoop, amplification_bound, compose_loop

logger = logging.getLogger(__name__)

_MOVES = (Move.TOP, Move.BOTTOM)


def closed_loops(start: IetCombinatorics, length: int) -> Iterator[Tuple[Move, ...]]:
    """Move sequences of exactly `length` steps from `start` back to it, 't' before 'b', every label winning"""
    labels = frozenset(start.labels)
    origin = (start.top, start.bottom)

    def extend(rows, winners, prefix):
        if len(prefix) == length:
            if rows == origin and winners == labels:
                yield tuple(prefix)
            return
        # labels that never won cannot all win in the remaining steps
        if len(labels - winners) > length - len(prefix):
            return
        top, bottom = rows
        for move in _MOVES:
            winner = top[-1] if move is Move.TOP else bottom[-1]
            prefix.append(move)
            yield from extend(rauzy_rows(top, bottom, move), winners | {winner}, prefix)
            prefix.pop()

    yield from extend(origin, frozenset(), [])


def has_periodic_cocycle(matrix: IntegerMatrix) -> bool:
    return bool(integer_kernel(matrix.T - IntegerMatrix.identity(matrix.nrows)))


@lru_cache(maxsize=None)
def discover_loop(start: IetCombinatorics, max_length: int, require_cocycle: bool = True) -> RauzyLoop:
    """Shortest (then lexicographically first) complete primitive loop, optionally with A^T fixing a cocycle"""
    bound = amplification_bound(start.d)
    examined = 0
    for length in range(1, max_length + 1):
        for steps in closed_loops(start, length):
            examined += 1
            loop = RauzyLoop(start, steps)
            matrix = compose_loop(loop).A
            if smallest_positive_power(matrix, bound) is None:
                continue
            if require_cocycle and not has_periodic_cocycle(matrix):
                continue
            logger.info("Discovered loop %r at %s after examining %d closed loops", loop.letters, start, examined)
            return loop

    raise LoopError(f"No suitable loop of length <= {max_length} at {start} ({examined} closed loops examined)")
