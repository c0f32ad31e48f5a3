import logging
from typing import Dict, Tuple

import numpy as np
from dataclasses import dataclass

from skew_infra import consts
from skew_infra.consts import tolerances
from skew_infra.errors import ConvergenceError, DimensionMismatchError, NotPositiveError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PerronData:
    """
    M v = r v with v > 0 and sum(v) = 1. `residual` is the absolute L1 residual |Mv - rv|_1 at
    convergence and `scaled_tolerance` the bound it met, tolerance * max(1, r).
    """

    r: float
    v: Tuple[float, ...]
    residual: float
    iterations: int
    scaled_tolerance: float = tolerances.PF_RESIDUAL

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.v, dtype=float)

    @property
    def within_absolute_tolerance(self) -> bool:
        return self.residual <= tolerances.PF_RESIDUAL

    def residuals(self) -> Dict[str, float]:
        return {
            "residual": self.residual,
            "absolute_tolerance": tolerances.PF_RESIDUAL,
            "scaled_tolerance": self.scaled_tolerance,
        }

    def verify(self, matrix: np.ndarray) -> float:
        """L1 residual of the eigen-equation, recomputed by an independent multiplication"""
        matrix = np.asarray(matrix, dtype=float)
        image = [sum(matrix[i, j] * self.v[j] for j in range(len(self.v))) for i in range(len(self.v))]
        return float(sum(abs(image[i] - self.r * self.v[i]) for i in range(len(self.v))))


def perron(
    matrix: np.ndarray,
    tolerance: float = tolerances.PF_RESIDUAL,
    max_iterations: int = consts.PERRON_MAX_ITERATIONS,
) -> PerronData:
    """Power iteration from the uniform vector; converged when |Mv - rv|_1 <= tolerance * max(1, r)"""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError("square matrix", matrix.shape, "matrix shape")
    if not (matrix > 0).all():
        raise NotPositiveError(f"Perron data needs a strictly positive matrix, got {matrix.tolist()}")

    d = matrix.shape[0]
    vector = np.full(d, 1.0 / d)
    residual = float("inf")
    for iteration in range(1, max_iterations + 1):
        image = matrix @ vector
        r = float(image.sum())
        residual = float(np.abs(image - r * vector).sum())
        scaled = tolerance * max(1.0, r)
        if residual <= scaled:
            data = PerronData(r=r, v=tuple(float(x) for x in vector), residual=residual, iterations=iteration,
                              scaled_tolerance=scaled)
            if not data.within_absolute_tolerance:
                logger.debug("Perron residual %.3e meets the scaled bound %.3e only", residual, scaled)
            return data
        vector = image / r
    raise ConvergenceError(max_iterations, residual)
