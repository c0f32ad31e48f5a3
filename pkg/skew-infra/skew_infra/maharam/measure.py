import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from dataclasses import dataclass
from functools import cached_property

from skew_infra.algebra import GroupElement, LaurentMatrix, laurent_matrix_pow
from skew_infra.bratteli import (
    BratteliDiagram,
    FinitePath,
    adic_successor,
    enumerate_paths,
    floor_to_path,
    is_maximal,
    lexicographic_key,
    maximal_paths,
    minimal_paths,
)
from skew_infra.cocycles import FloorCocycle
from skew_infra.errors import DimensionMismatchError, MaximalPathError
from skew_infra.iet import RauzyInstance, birkhoff_frequencies
from skew_infra.maharam.counting import level_counting_matrix
from skew_infra.maharam.perron import PerronData, perron

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MaharamParameter:
    """A homomorphism psi: Z^m -> R given by its values on the unit vectors"""

    psi: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "psi", tuple(float(x) for x in self.psi))

    @classmethod
    def zero(cls, m: int) -> "MaharamParameter":
        return cls((0.0,) * m)

    @property
    def m(self) -> int:
        return len(self.psi)

    @property
    def lam(self) -> Tuple[float, ...]:
        return tuple(math.exp(x) for x in self.psi)

    def weight(self, fiber: GroupElement) -> float:
        """lambda^fiber = exp(psi(fiber))"""
        if fiber.m != self.m:
            raise DimensionMismatchError(self.m, fiber.m, "fiber dimension")
        return math.exp(fiber.pairing(self.psi))

    def __str__(self):
        return "(" + ",".join(f"{x:g}" for x in self.psi) + ")"


class MaharamMeasure:
    """
    mu_psi on cylinders J(p) x {a}: lambda^(a + S_k f(p)) v_t(p) / r^k, where (r, v) is the
    Perron data of M(lambda). Normalized so that mu_psi(K x {0}) = 1.
    """

    def __init__(self, diagram: BratteliDiagram, f: FloorCocycle, parameter: MaharamParameter,
                 counting: Optional[LaurentMatrix] = None):
        if parameter.m != f.m:
            raise DimensionMismatchError(f.m, parameter.m, "psi dimension")
        self.diagram = diagram
        self.f = f
        self.parameter = parameter
        self.counting = counting if counting is not None else level_counting_matrix(diagram, f)

    @cached_property
    def evaluated(self) -> np.ndarray:
        return self.counting.evaluate(self.parameter.lam)

    @cached_property
    def perron(self) -> PerronData:
        return perron(self.evaluated)

    @property
    def r(self) -> float:
        return self.perron.r

    def base_measure(self, i: int, fiber: GroupElement) -> float:
        """mu_psi(K_i x {a}) = lambda^a v_i"""
        return self.parameter.weight(fiber) * self.perron.v[i - 1]

    def cylinder_measure(self, path: FinitePath, fiber: GroupElement) -> float:
        exponent = fiber + self.f.birkhoff_sum(path)
        return self.parameter.weight(exponent) * self.perron.v[path.target - 1] / self.r ** path.k

    def base_marginal(self, path: FinitePath) -> float:
        """nu_psi(J(p)) = mu_psi(J(p) x {0})"""
        return self.cylinder_measure(path, GroupElement.zero(self.f.m))


def invariance_recurrence_check(measure: MaharamMeasure, k: int, power: Optional[LaurentMatrix] = None) -> float:
    """max_i |mu(K_i x {0}) - sum_j sum_a b^(k)_ij,a mu(J^(k)_j x {a})|, from the coefficients of M^k"""
    if power is None:
        power = laurent_matrix_pow(measure.counting, k)
    v, r = measure.perron.v, measure.r
    residual = 0.0
    for i in range(1, measure.diagram.d + 1):
        terms = []
        for j in range(1, measure.diagram.d + 1):
            for exponent, count in power[i - 1, j - 1].terms.items():
                terms.append(count * measure.parameter.weight(GroupElement(exponent)) * v[j - 1] / r ** k)
        residual = max(residual, abs(v[i - 1] - math.fsum(terms)))
    return residual


def table_marginal_check(measure: MaharamMeasure, k: int) -> float:
    """max_i |v_i - sum of mu(J(p) x {0}) over the level-k paths leaving K_i|"""
    sums: Dict[int, List[float]] = {i: [] for i in range(1, measure.diagram.d + 1)}
    for path in enumerate_paths(measure.diagram, k):
        sums[path.source].append(measure.base_marginal(path))
    return max(abs(measure.perron.v[i - 1] - math.fsum(values)) for i, values in sums.items())


def invariance_step_check(
    measure: MaharamMeasure, paths: Sequence[FinitePath], fibers: Sequence[GroupElement]
) -> Tuple[float, float]:
    """
    Over the sampled (p, a): the largest invariance residual
    |mu(J(tau p) x {a + phi(p)}) - mu(J(p) x {a})| and the largest relative deviation of
    nu(J(tau p)) / nu(J(p)) from exp(-psi(phi(p))).
    """
    invariance, quasi_invariance = 0.0, 0.0
    for path, fiber in zip(paths, fibers):
        if is_maximal(path):
            raise MaximalPathError(path)
        successor = adic_successor(path)
        phi = measure.f.phi_of(path)
        before = measure.cylinder_measure(path, fiber)
        after = measure.cylinder_measure(successor, fiber + phi)
        invariance = max(invariance, abs(after - before))
        expected = math.exp(-phi.pairing(measure.parameter.psi))
        ratio = measure.base_marginal(successor) / measure.base_marginal(path)
        quasi_invariance = max(quasi_invariance, abs(ratio - expected) / expected)
    return invariance, quasi_invariance


def sample_cylinders(
    diagram: BratteliDiagram, k: int, samples: int, rng: np.random.Generator, fiber_radius: int, m: int
) -> Tuple[List[FinitePath], List[GroupElement]]:
    """Uniform non-maximal level-k paths with fibers drawn from the box |a|_inf <= fiber_radius"""
    paths, fibers = [], []
    heights = diagram.tower.heights(k)
    while len(paths) < samples:
        j = int(rng.integers(1, diagram.d + 1))
        height = int(rng.integers(0, heights[j - 1]))
        path = floor_to_path(diagram, k, j, height)
        if is_maximal(path):
            continue
        paths.append(path)
        fibers.append(GroupElement(tuple(int(x) for x in rng.integers(-fiber_radius, fiber_radius + 1, size=m))))
    return paths, fibers


def boundary_orbit_has_no_atoms(measure: MaharamMeasure, k: int) -> Tuple[bool, List[float]]:
    """
    Largest fiber-0 mass among the minimal and maximal cylinders at levels 1..k. These masses
    are bounded by max(v) exp(2 |psi|_1 max|phi|_inf) / r^k, so they vanish when r > 1.
    """
    phi_norm = max(v.sup_norm() for v in measure.f.phi.values)
    psi_norm = sum(abs(x) for x in measure.parameter.psi)
    constant = max(measure.perron.v) * math.exp(2 * psi_norm * phi_norm)
    masses = []
    for level in range(1, k + 1):
        boundary = minimal_paths(measure.diagram, level) + maximal_paths(measure.diagram, level)
        masses.append(max(measure.base_marginal(p) for p in boundary))
    bounded = all(mass <= constant / measure.r ** level * (1 + 1e-9) for level, mass in enumerate(masses, start=1))
    return measure.r > 1 and bounded, masses


@dataclass(frozen=True)
class MeasureRow:
    level: int
    path: str
    fiber: GroupElement
    measure: float


@dataclass(frozen=True)
class MeasureTable:
    """mu_psi on the level-0 sets K_i x {a} (path "[i]") and on the level-k cylinders"""

    parameter: MaharamParameter
    level: int
    fiber_radius: int
    rows: Tuple[MeasureRow, ...]

    def header(self) -> List[str]:
        return [f"psi_{i}" for i in range(1, self.parameter.m + 1)] + ["level", "path", "fiber", "measure"]

    def records(self) -> List[list]:
        return [
            list(self.parameter.psi) + [row.level, row.path, str(row.fiber), repr(row.measure)] for row in self.rows
        ]

    def total(self, level: int, fiber: GroupElement) -> float:
        return math.fsum(row.measure for row in self.rows if row.level == level and row.fiber == fiber)


def _fiber_box(m: int, radius: int) -> List[GroupElement]:
    if m == 0:
        return [GroupElement(())]
    axis = np.arange(-radius, radius + 1)
    grid = np.stack(np.meshgrid(*([axis] * m), indexing="ij"), axis=-1).reshape(-1, m)
    return sorted(GroupElement(tuple(int(x) for x in point)) for point in grid)


def measure_table(measure: MaharamMeasure, k: int, fiber_radius: Optional[int] = None) -> MeasureTable:
    """Rows sorted by level, then path (top edge first), then fiber"""
    if fiber_radius is None:
        fiber_radius = measure.f.attainable_bound(k)
    fibers = _fiber_box(measure.f.m, fiber_radius)
    rows = [
        MeasureRow(0, f"[{i}]", fiber, measure.base_measure(i, fiber))
        for i in range(1, measure.diagram.d + 1)
        for fiber in fibers
    ]
    if k >= 1:
        paths = sorted(enumerate_paths(measure.diagram, k), key=lambda p: (p.target, lexicographic_key(p)))
        rows.extend(MeasureRow(k, str(p), fiber, measure.cylinder_measure(p, fiber)) for p in paths for fiber in fibers)
    logger.debug("Measure table at psi=%s, level %d: %d rows", measure.parameter, k, len(rows))
    return MeasureTable(parameter=measure.parameter, level=k, fiber_radius=fiber_radius, rows=tuple(rows))


def birkhoff_consistency(instance: RauzyInstance, measure: MaharamMeasure, steps: int) -> Dict[str, float]:
    """At psi = 0: distance of v to the Perron lengths and to the visit frequencies of a float orbit"""
    v = measure.perron.vector
    lengths = instance.lengths.as_floats()
    frequencies = birkhoff_frequencies(instance.combinatorics, instance.lengths, steps)
    return {
        "lengths": float(np.abs(v - lengths).max()),
        "frequencies": float(np.abs(v - frequencies).max()),
    }
