"""
Numeric oracle: run the exchange itself and read towers off first returns.
"""
import logging
from bisect import bisect_right
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from skew_infra import consts
from skew_infra.consts import tolerances
from skew_infra.errors import HorizonExceeded, PrecisionAlarm
from skew_infra.iet.combinatorics import IetCombinatorics, Words
from skew_infra.iet.lengths import HIGH_PRECISION, LengthData

logger = logging.getLogger(__name__)


class IntervalExchange:
    """The exchange on [0, 1) at high precision; interval `label` starts at the sum of the top-row lengths before it"""

    def __init__(self, combinatorics: IetCombinatorics, lengths: Sequence):
        ctx = HIGH_PRECISION
        self.combinatorics = combinatorics
        self.lengths = [ctx.mpf(x) for x in lengths]
        self.top_starts = self._starts(combinatorics.top)
        bottom_starts = self._starts(combinatorics.bottom)
        self.translations = {label: bottom_starts[label] - self.top_starts[label] for label in combinatorics.labels}
        self._sorted_starts = [self.top_starts[label] for label in combinatorics.top]
        self._breakpoints = self._sorted_starts[1:]

    def _starts(self, row: Sequence[int]) -> Dict[int, object]:
        starts, position = {}, HIGH_PRECISION.mpf(0)
        for label in row:
            starts[label] = position
            position += self.lengths[label - 1]
        return starts

    def locate(self, x) -> int:
        return self.combinatorics.top[bisect_right(self._sorted_starts, x) - 1]

    def distance_to_discontinuity(self, x):
        return min(abs(x - b) for b in self._breakpoints)

    def __call__(self, x):
        return x + self.translations[self.locate(x)]


def simulate_return_times(
    combinatorics: IetCombinatorics,
    lengths: LengthData,
    level: int,
    horizon: int = consts.SIMULATION_HORIZON,
) -> Tuple[Tuple[int, ...], Words]:
    """
    First-return times and visited labels of the level-`level` induced intervals.
    Level k induces on [0, alpha^-k); its subintervals follow the top row with lengths lambda_j * alpha^-k.
    """
    ctx = HIGH_PRECISION
    exchange = IntervalExchange(combinatorics, lengths.lengths)
    scale = ctx.mpf(lengths.pf_eigenvalue) ** (-level)
    alarm = ctx.mpf(tolerances.DISCONTINUITY_DISTANCE)

    words: Dict[int, Tuple[int, ...]] = {}
    start = ctx.mpf(0)
    for label in combinatorics.top:
        width = exchange.lengths[label - 1] * scale
        point = start + width / 2
        start += width
        visited: List[int] = []
        for step in range(horizon):
            distance = exchange.distance_to_discontinuity(point)
            if distance < alarm:
                raise PrecisionAlarm(float(point), float(distance), step)
            visited.append(exchange.locate(point))
            point = exchange(point)
            if point < scale:
                break
        else:
            raise HorizonExceeded(horizon, label)
        words[label] = tuple(visited)

    ordered = tuple(words[j] for j in combinatorics.labels)
    logger.debug("Simulated level %d return times %s", level, [len(w) for w in ordered])
    return tuple(len(w) for w in ordered), ordered


def birkhoff_frequencies(
    combinatorics: IetCombinatorics,
    lengths: LengthData,
    steps: int,
    start: Optional[float] = None,
) -> np.ndarray:
    """
    Visit frequencies of each interval along a double precision orbit. Roundoff that pushes the
    orbit out of [0, 1) by at most the discontinuity distance is clamped back with a warning; a
    larger drift raises PrecisionAlarm.
    """
    widths = lengths.as_floats()
    starts, position = {}, 0.0
    for label in combinatorics.top:
        starts[label] = position
        position += widths[label - 1]
    bottom, position = {}, 0.0
    for label in combinatorics.bottom:
        bottom[label] = position
        position += widths[label - 1]

    ordered_starts = [starts[label] for label in combinatorics.top]
    shifts = [bottom[label] - starts[label] for label in combinatorics.top]
    counts = np.zeros(combinatorics.d, dtype=np.int64)
    upper = len(ordered_starts) - 1

    x = float(start) if start is not None else (5 ** 0.5 - 1) / 2 * widths.sum() / 3
    clamped, worst = 0, 0.0
    for step in range(steps):
        index = min(max(bisect_right(ordered_starts, x) - 1, 0), upper)
        counts[combinatorics.top[index] - 1] += 1
        x += shifts[index]
        if not 0.0 <= x < 1.0:
            drift = -x if x < 0.0 else x - 1.0
            if drift > tolerances.DISCONTINUITY_DISTANCE:
                raise PrecisionAlarm(x, drift, step)
            if not clamped:
                logger.warning("Orbit left [0, 1) by %.3g at step %d; clamping it back", drift, step)
            clamped, worst = clamped + 1, max(worst, drift)
            x = min(max(x, 0.0), np.nextafter(1.0, 0.0))
    if clamped > 1:
        logger.warning("Clamped the orbit %d times in %d steps, largest drift %.3g", clamped, steps, worst)
    return counts / steps
