import logging
from typing import Tuple

import numpy as np
from dataclasses import dataclass
from mpmath.ctx_mp import MPContext

from skew_infra import consts
from skew_infra.algebra import IntegerMatrix
from skew_infra.consts import tolerances
from skew_infra.errors import ConvergenceError, NotPositiveError

logger = logging.getLogger(__name__)

HIGH_PRECISION = MPContext()
HIGH_PRECISION.dps = consts.LENGTH_PRECISION_DIGITS


@dataclass(frozen=True)
class LengthData:
    """Periodic length data: A lengths = pf_eigenvalue * lengths, sum(lengths) = 1"""

    lengths: Tuple
    pf_eigenvalue: object

    @property
    def d(self) -> int:
        return len(self.lengths)

    def as_floats(self) -> np.ndarray:
        return np.array([float(x) for x in self.lengths], dtype=float)

    def residual(self, matrix: IntegerMatrix) -> float:
        """Relative L1 residual of the eigen-equation, recomputed from scratch"""
        ctx = HIGH_PRECISION
        rows = matrix.tolist()
        image = [ctx.fsum(rows[i][j] * self.lengths[j] for j in range(self.d)) for i in range(self.d)]
        error = ctx.fsum(abs(image[i] - self.pf_eigenvalue * self.lengths[i]) for i in range(self.d))
        return float(error / self.pf_eigenvalue)

    def to_json(self) -> dict:
        return {
            "lengths": [HIGH_PRECISION.nstr(x, 30) for x in self.lengths],
            "pf_eigenvalue": HIGH_PRECISION.nstr(self.pf_eigenvalue, 30),
        }


def pf_lengths(matrix: IntegerMatrix) -> LengthData:
    if not matrix.is_square() or not matrix.is_positive():
        raise NotPositiveError(f"Perron-Frobenius lengths need a strictly positive matrix, got {matrix.tolist()}")

    ctx = HIGH_PRECISION
    d = matrix.nrows
    rows = matrix.tolist()
    tolerance = ctx.mpf(tolerances.LENGTHS_RESIDUAL)
    vector = [ctx.mpf(1) / d] * d
    residual = None

    for iteration in range(1, consts.LENGTHS_MAX_ITERATIONS + 1):
        image = [ctx.fsum(rows[i][j] * vector[j] for j in range(d)) for i in range(d)]
        norm = ctx.fsum(image)
        vector = [x / norm for x in image]
        image = [ctx.fsum(rows[i][j] * vector[j] for j in range(d)) for i in range(d)]
        alpha = ctx.fsum(image)
        residual = ctx.fsum(abs(image[i] - alpha * vector[i]) for i in range(d))
        if residual <= tolerance * alpha:
            logger.debug("PF lengths converged after %d iterations, alpha=%s", iteration, ctx.nstr(alpha, 20))
            return LengthData(lengths=tuple(vector), pf_eigenvalue=alpha)

    raise ConvergenceError(consts.LENGTHS_MAX_ITERATIONS, float(residual))
