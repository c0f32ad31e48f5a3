import itertools
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
from dataclasses import dataclass
from tqdm import tqdm

from skew_infra.algebra import GroupElement, LaurentMatrix
from skew_infra.bratteli import BratteliDiagram, FinitePath, enumerate_paths
from skew_infra.cocycles import FloorCocycle
from skew_infra.consts import tolerances
from skew_infra.errors import DimensionMismatchError, ValidationError
from skew_infra.maharam.counting import level_counting_matrix
from skew_infra.maharam.measure import MaharamMeasure, MaharamParameter
from skew_infra.tools import run_concurrently

logger = logging.getLogger(__name__)

Grid = Tuple[float, float, int]
Cylinder = Tuple[FinitePath, GroupElement]


def cylinder_id(cylinder: Cylinder) -> str:
    path, fiber = cylinder
    return f"{path}@{fiber}"


def cylinder_family(diagram: BratteliDiagram, k: int, size: int, rng: np.random.Generator, m: int) -> List[Cylinder]:
    """`size` distinct level-k cylinders at fiber 0, drawn without replacement"""
    paths = list(enumerate_paths(diagram, k))
    chosen = sorted(rng.choice(len(paths), size=min(size, len(paths)), replace=False))
    return [(paths[int(index)], GroupElement.zero(m)) for index in chosen]


def grid_axes(grids: Sequence[Grid], refinement: int) -> List[np.ndarray]:
    return [np.linspace(low, high, steps * 2 ** refinement + 1) for low, high, steps in grids]


@dataclass(frozen=True)
class ContinuityRow:
    grid_step: float
    cylinder_id: str
    psi: Tuple[float, ...]
    measure: float
    adjacent_delta: float


@dataclass(frozen=True)
class ContinuityProfile:
    """Cylinder measures over nested dyadic psi-grids and the observed modulus per refinement"""

    m: int
    rows: Tuple[ContinuityRow, ...]
    moduli: Tuple[Tuple[float, float], ...]  # (grid_step, max adjacent |delta mu|)

    def header(self) -> List[str]:
        return ["grid_step", "cylinder_id"] + [f"psi_{i}" for i in range(1, self.m + 1)] + ["measure", "adjacent_delta"]

    def records(self) -> List[list]:
        return [
            [repr(row.grid_step), row.cylinder_id] + list(row.psi) + [repr(row.measure), repr(row.adjacent_delta)]
            for row in self.rows
        ]

    def ratios(self) -> List[Optional[float]]:
        ratios = []
        for (_, coarse), (_, fine) in zip(self.moduli, self.moduli[1:]):
            ratios.append(fine / coarse if coarse > 0 else None)
        return ratios

    def is_decreasing(self, ratio: float = tolerances.CONTINUITY_RATIO) -> bool:
        """Every refinement brings the modulus strictly below `ratio` times the previous one (a zero modulus stays zero)"""
        for (_, coarse), (_, fine) in zip(self.moduli, self.moduli[1:]):
            if coarse == 0:
                if fine != 0:
                    return False
            elif fine >= ratio * coarse:
                return False
        return True


def _measures_at(
    diagram: BratteliDiagram, f: FloorCocycle, counting: LaurentMatrix, psi: Tuple[float, ...], cylinders: Sequence[Cylinder]
) -> Tuple[float, ...]:
    measure = MaharamMeasure(diagram, f, MaharamParameter(psi), counting=counting)
    return tuple(measure.cylinder_measure(path, fiber) for path, fiber in cylinders)


def continuity_profile(
    diagram: BratteliDiagram,
    f: FloorCocycle,
    cylinders: Sequence[Cylinder],
    grids: Sequence[Grid],
    refinements: int = 3,
    max_workers: int = 5,
    counting: Optional[LaurentMatrix] = None,
) -> ContinuityProfile:
    """
    Evaluate every cylinder on the base grid and its `refinements` dyadic refinements. Nested grids
    share points, so each psi is solved once, from `counting` when it is given. adjacent_delta is the
    largest change towards the next grid point along any axis.
    """
    if f.m == 0:
        raise ValidationError("Continuity in psi needs a nontrivial fiber group")
    if len(grids) != f.m:
        raise DimensionMismatchError(f.m, len(grids), "number of grid axes")
    if not cylinders:
        raise ValidationError("Continuity profile needs at least one cylinder")

    if counting is None:
        counting = level_counting_matrix(diagram, f)
    finest = grid_axes(grids, refinements)
    points = [tuple(float(x) for x in psi) for psi in itertools.product(*finest)]
    with tqdm(total=len(points), desc="psi grid", disable=None, leave=False) as progress:
        solved = run_concurrently(
            {psi: (_measures_at, diagram, f, counting, psi, cylinders) for psi in points},
            done_handler=lambda _: progress.update(),
            max_workers=max_workers,
        )

    ids = [cylinder_id(c) for c in cylinders]
    rows: List[ContinuityRow] = []
    moduli: List[Tuple[float, float]] = []
    for refinement in range(refinements + 1):
        # coarse points are every 2**(refinements - refinement)-th finest point
        stride = 2 ** (refinements - refinement)
        indices = [range(0, len(axis), stride) for axis in finest]
        grid_step = max(float(finest[a][stride] - finest[a][0]) for a in range(f.m))
        modulus = 0.0
        for index in itertools.product(*indices):
            psi = tuple(float(finest[a][i]) for a, i in enumerate(index))
            values = solved[psi]
            neighbours = []
            for axis in range(f.m):
                if index[axis] + stride < len(finest[axis]):
                    shifted = list(index)
                    shifted[axis] += stride
                    neighbours.append(solved[tuple(float(finest[a][i]) for a, i in enumerate(shifted))])
            for c, value in enumerate(values):
                delta = max((abs(n[c] - value) for n in neighbours), default=0.0)
                modulus = max(modulus, delta)
                rows.append(ContinuityRow(grid_step, ids[c], psi, value, delta))
        moduli.append((grid_step, modulus))
        logger.info("Grid step %g: observed modulus %.3e", grid_step, modulus)

    rows.sort(key=lambda row: (-row.grid_step, row.cylinder_id, row.psi))
    return ContinuityProfile(m=f.m, rows=tuple(rows), moduli=tuple(moduli))


def psi_samples(m: int, samples: int, rng: np.random.Generator, low: float = -1.0, high: float = 1.0) -> List[MaharamParameter]:
    return [MaharamParameter(tuple(float(x) for x in rng.uniform(low, high, size=m))) for _ in range(samples)]
